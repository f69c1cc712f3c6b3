#include "posetgen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace posetgen {

namespace {

// Kahan-compensated accumulator; cheap insurance for the 4231-term sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void check_normalized(std::span<const double> p, const char* side) {
    KahanSum s;
    for (double v : p) {
        if (!(v >= 0.0)) throw std::invalid_argument(std::string("tv_distance: negative entry in ") + side);
        s.add(v);
    }
    if (std::abs(s.sum - 1.0) > 1e-9) {
        throw std::invalid_argument(std::string("tv_distance: ") + side + " does not sum to 1");
    }
}

} // namespace

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: length mismatch");
    check_normalized(p, "p");
    check_normalized(q, "q");
    KahanSum s;
    for (std::size_t i = 0; i < p.size(); ++i) s.add(std::abs(p[i] - q[i]));
    return 0.5 * s.sum;
}

void SampleHistogram::accumulate(const PosetKey& key) {
    if (key.size() != n) {
        throw std::invalid_argument("SampleHistogram: key has " + std::to_string(key.size()) +
                                    " elements, histogram expects " + std::to_string(n));
    }
    ++counts[key];
    ++total;
}

void SampleHistogram::merge(const SampleHistogram& other) {
    if (other.n != n) throw std::invalid_argument("SampleHistogram::merge: element-count mismatch");
    for (const auto& [key, count] : other.counts) counts[key] += count;
    total += other.total;
}

std::vector<std::pair<PosetKey, std::uint64_t>> SampleHistogram::sorted_entries() const {
    std::vector<std::pair<PosetKey, std::uint64_t>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

double empirical_tv(const SampleHistogram& hist, std::uint64_t num_posets) {
    if (hist.total == 0) throw std::invalid_argument("empirical_tv: empty histogram");
    if (num_posets < hist.counts.size()) {
        throw std::invalid_argument("empirical_tv: more distinct keys than categories");
    }
    const double uniform = 1.0 / static_cast<double>(num_posets);
    const double total = static_cast<double>(hist.total);
    KahanSum s;
    for (const auto& [key, count] : hist.counts) {
        s.add(std::abs(static_cast<double>(count) / total - uniform));
    }
    s.add(static_cast<double>(num_posets - hist.counts.size()) * uniform);
    return 0.5 * s.sum;
}

double empirical_tv_from_counts(std::span<const std::uint64_t> counts, std::uint64_t num_posets) {
    std::uint64_t total = 0;
    std::uint64_t observed = 0;
    for (std::uint64_t c : counts) {
        total += c;
        if (c > 0) ++observed;
    }
    if (total == 0) throw std::invalid_argument("empirical_tv: no samples");
    if (num_posets < counts.size()) {
        throw std::invalid_argument("empirical_tv: more categories than num_posets");
    }
    const double uniform = 1.0 / static_cast<double>(num_posets);
    KahanSum s;
    for (std::uint64_t c : counts) {
        if (c > 0) s.add(std::abs(static_cast<double>(c) / static_cast<double>(total) - uniform));
    }
    s.add(static_cast<double>(num_posets - observed) * uniform);
    return 0.5 * s.sum;
}

} // namespace posetgen
