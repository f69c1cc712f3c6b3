#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "posetgen/oracle.hpp"
#include "posetgen/sampling.hpp"
#include "posetgen/stats.hpp"

using namespace posetgen;

TEST_CASE("tv distance on hand examples") {
    std::vector<double> a{0.5, 0.5}, b{1.0, 0.0}, c{0.0, 1.0};
    CHECK(tv_distance(a, a) == 0.0);
    CHECK(tv_distance(a, b) == doctest::Approx(0.5));
    CHECK(tv_distance(b, c) == doctest::Approx(1.0)); // disjoint supports
    CHECK(tv_distance(a, b) == tv_distance(b, a));
}

TEST_CASE("tv distance is a metric on random simplex points") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_dist = [&](int k) {
        std::vector<double> v(k);
        double sum = 0;
        for (double& x : v) sum += (x = unit(rng) + 1e-12);
        for (double& x : v) x /= sum;
        return v;
    };
    for (int rep = 0; rep < 50; ++rep) {
        auto p = random_dist(8), q = random_dist(8), r = random_dist(8);
        double pq = tv_distance(p, q), qr = tv_distance(q, r), pr = tv_distance(p, r);
        CHECK(pq >= 0.0);
        CHECK(pq <= 1.0);
        CHECK(pr <= pq + qr + 1e-12);
    }
}

TEST_CASE("tv distance rejects malformed inputs") {
    std::vector<double> ok{0.5, 0.5};
    std::vector<double> shorter{1.0};
    std::vector<double> unnormalized{0.9, 0.3};
    std::vector<double> negative{1.5, -0.5};
    CHECK_THROWS_AS(tv_distance(ok, shorter), std::invalid_argument);
    CHECK_THROWS_AS(tv_distance(ok, unnormalized), std::invalid_argument);
    CHECK_THROWS_AS(tv_distance(ok, negative), std::invalid_argument);
}

TEST_CASE("histogram accumulation, merge and deterministic ordering") {
    Dag chain(3);
    chain.add_edge(0, 1);
    chain.add_edge(1, 2);
    PosetKey a = poset_key(empty_dag(3));
    PosetKey b = poset_key(chain);

    SampleHistogram h1(3), h2(3);
    h1.accumulate(a);
    h1.accumulate(b);
    h1.accumulate(b);
    h2.accumulate(b);
    h2.accumulate(b);
    h2.accumulate(a);
    CHECK(h1.total == 3);
    CHECK(h1.counts == h2.counts);
    CHECK(h1.sorted_entries() == h2.sorted_entries());
    auto entries = h1.sorted_entries();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].first == a); // antichain serializes below the chain
    CHECK(entries[0].second == 1);
    CHECK(entries[1].second == 2);

    SampleHistogram other(3);
    other.accumulate(a);
    h1.merge(other);
    CHECK(h1.total == 4);
    CHECK(h1.counts.at(a) == 2);

    SampleHistogram wrong(4);
    CHECK_THROWS_AS(h1.accumulate(poset_key(empty_dag(4))), std::invalid_argument);
    CHECK_THROWS_AS(h1.merge(wrong), std::invalid_argument);
}

TEST_CASE("empirical tv from raw counts on hand examples") {
    using U = std::uint64_t;
    CHECK(empirical_tv_from_counts(std::vector<U>{1, 1}, 2) == doctest::Approx(0.0));
    CHECK(empirical_tv_from_counts(std::vector<U>{2, 0}, 2) == doctest::Approx(0.5));
    // point mass over 3 categories: (1,0,0) vs (1/3,1/3,1/3)
    CHECK(empirical_tv_from_counts(std::vector<U>{3}, 3) == doctest::Approx(2.0 / 3.0));
    // counts shorter than the category space imply zeros
    CHECK(empirical_tv_from_counts(std::vector<U>{5, 5}, 4) == doctest::Approx(0.5));
    CHECK_THROWS_AS(empirical_tv_from_counts(std::vector<U>{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(empirical_tv_from_counts(std::vector<U>{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("empirical tv equals the padded plug-in computation") {
    SampleHistogram hist = sample_posets(3, 9, 424242, 5000);
    const std::uint64_t M = 19;
    REQUIRE(hist.counts.size() <= M);

    std::vector<double> phat;
    for (const auto& [key, count] : hist.sorted_entries()) {
        phat.push_back(static_cast<double>(count) / hist.total);
    }
    phat.resize(M, 0.0);
    std::vector<double> uniform(M, 1.0 / M);
    CHECK(empirical_tv(hist, M) == doctest::Approx(tv_distance(phat, uniform)).epsilon(1e-12));

    SampleHistogram tiny(3);
    tiny.accumulate(poset_key(empty_dag(3)));
    CHECK_THROWS_AS(empirical_tv(tiny, 0), std::invalid_argument);
    CHECK_THROWS_AS(empirical_tv(SampleHistogram(3), 19), std::invalid_argument);
}

TEST_CASE("zero-step sampling gives the antichain point mass") {
    SampleHistogram hist = sample_posets(3, 0, 1, 500);
    REQUIRE(hist.counts.size() == 1);
    CHECK(hist.counts.begin()->first == poset_key(empty_dag(3)));
    // plug-in TV of a point mass over 19 categories is 18/19
    CHECK(empirical_tv(hist, 19) == doctest::Approx(18.0 / 19.0));
}

TEST_CASE("sampling is deterministic and independent of worker count") {
    SampleHistogram h1 = sample_posets(4, 16, 77, 3000, 1);
    SampleHistogram h2 = sample_posets(4, 16, 77, 3000, 4);
    SampleHistogram h3 = sample_posets(4, 16, 77, 3000, 3);
    CHECK(h1.total == 3000);
    CHECK(h1.counts == h2.counts);
    CHECK(h1.counts == h3.counts);

    // each sample is the chain output for its derived stream seed
    SampleHistogram manual(4);
    for (long long i = 0; i < 3000; ++i) {
        manual.accumulate(generate_poset({4, 16, derive_stream_seed(77, i)}));
    }
    CHECK(h1.counts == manual.counts);
}

TEST_CASE("for_each_sample ordered mode streams ascending indices") {
    std::vector<long long> indices;
    std::vector<PosetKey> keys;
    for_each_sample(3, 9, 9001, 200, 4, true, [&](long long i, const PosetKey& k) {
        indices.push_back(i);
        keys.push_back(k);
    });
    REQUIRE(indices.size() == 200);
    for (long long i = 0; i < 200; ++i) CHECK(indices[i] == i);

    std::vector<PosetKey> serial;
    for_each_sample(3, 9, 9001, 200, 1, false, [&](long long, const PosetKey& k) {
        serial.push_back(k);
    });
    CHECK(keys == serial);
}

TEST_CASE("unordered mode visits every index exactly once") {
    std::vector<int> seen(200, 0);
    for_each_sample(3, 9, 31337, 200, 4, false, [&](long long i, const PosetKey&) {
        ++seen[static_cast<std::size_t>(i)];
    });
    for (int s : seen) CHECK(s == 1);
}

TEST_CASE("sampled tv approaches the exact curve") {
    // exact poset-level TV at n=3, m=9 is ~0.0028; with 20000 samples the
    // plug-in estimate is dominated by multinomial noise but stays small
    SampleHistogram hist = sample_posets(3, 9, 123, 20000, 4);
    double tv = empirical_tv(hist, 19);
    CHECK(tv < 0.05);

    // and m=0 stays at the point-mass value
    SampleHistogram start = sample_posets(3, 0, 123, 1000);
    CHECK(empirical_tv(start, 19) == doctest::Approx(18.0 / 19.0));
}
