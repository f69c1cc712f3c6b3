#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "posetgen/io.hpp"
#include "posetgen/oracle.hpp"
#include "posetgen/sampling.hpp"
#include "testing_oracles.hpp"

using namespace posetgen;
namespace refs = testing_oracles;

namespace {

Dag chain_dag(int n) {
    Dag g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

} // namespace

TEST_CASE("edge list round trip") {
    Dag g = chain_dag(3);
    CHECK(to_edge_list(g) == "3\n0 1\n1 2\n");
    std::istringstream in(to_edge_list(g));
    CHECK(dag_from_edge_list(in) == g);

    std::istringstream empty_in("4\n");
    CHECK(dag_from_edge_list(empty_in) == empty_dag(4));

    PosetKey k = poset_key(chain_dag(3));
    CHECK(to_edge_list(k) == "3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("edge list parsing rejects malformed input") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return dag_from_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), std::invalid_argument);
    CHECK_THROWS_AS(parse("0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3\n0\n"), std::invalid_argument);       // dangling endpoint
    CHECK_THROWS_AS(parse("3\n0 3\n"), std::invalid_argument);     // vertex out of range
    CHECK_THROWS_AS(parse("3\n1 1\n"), std::invalid_argument);     // self-loop
    CHECK_THROWS_AS(parse("2\n0 1\n1 0\n"), std::invalid_argument); // cycle
    CHECK_THROWS_AS(parse("3\n0 x\n"), std::invalid_argument);     // junk token
}

TEST_CASE("hex key serialization with a frozen example") {
    // n=2, relation {(0,1)}: header 02 00 00 00, payload bit 1 -> 0x02
    Dag g(2);
    g.add_edge(0, 1);
    PosetKey k = poset_key(g);
    CHECK(key_to_hex(k) == "0200000002");
    CHECK(key_from_hex("0200000002") == k);
    CHECK(key_from_hex("0200000000") == poset_key(empty_dag(2)));

    CHECK_THROWS_AS(key_from_hex("020"), std::invalid_argument);        // odd length
    CHECK_THROWS_AS(key_from_hex("02zz000000"), std::invalid_argument); // bad digit
    CHECK_THROWS_AS(key_from_hex("0200000001"), std::invalid_argument); // reflexive bit
}

TEST_CASE("hex round trip on random posets") {
    std::mt19937_64 rng(31);
    for (int n : {1, 3, 8, 12}) {
        for (int rep = 0; rep < 10; ++rep) {
            PosetKey k = poset_key(refs::random_dag(n, 0.4, rng));
            CHECK(key_from_hex(key_to_hex(k)) == k);
        }
    }
}

TEST_CASE("json round trip and cover annotation") {
    PosetKey k = poset_key(chain_dag(3));
    nlohmann::json j = poset_to_json(k);
    CHECK(j["n"] == 3);
    CHECK(j["relation"].size() == 3);
    CHECK_FALSE(j.contains("covers"));
    CHECK(poset_from_json(j) == k);

    nlohmann::json with_covers = poset_to_json(k, true);
    REQUIRE(with_covers.contains("covers"));
    CHECK(with_covers["covers"] == nlohmann::json::array({{0, 1}, {1, 2}}));

    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        PosetKey r = poset_key(refs::random_dag(6, 0.5, rng));
        CHECK(poset_from_json(poset_to_json(r, true)) == r);
    }
}

TEST_CASE("json parsing rejects non-orders") {
    CHECK_THROWS_AS(poset_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(nlohmann::json{{"n", 0}, {"relation", nlohmann::json::array()}}),
                    std::invalid_argument);
    // missing transitive pair (0,2)
    nlohmann::json open_chain{{"n", 3}, {"relation", {{0, 1}, {1, 2}}}};
    CHECK_THROWS_AS(poset_from_json(open_chain), std::invalid_argument);
    nlohmann::json out_of_range{{"n", 2}, {"relation", {{0, 5}}}};
    CHECK_THROWS_AS(poset_from_json(out_of_range), std::invalid_argument);
}

TEST_CASE("dot output lists vertices and cover edges only") {
    PosetKey k = poset_key(chain_dag(3)); // closure has 3 pairs, covers are 2
    std::string dot = poset_to_dot_hasse(k);
    CHECK(dot == "digraph hasse {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n");
}

TEST_CASE("histogram csv is sorted and exact") {
    SampleHistogram hist(2);
    Dag g(2);
    g.add_edge(0, 1);
    hist.accumulate(poset_key(g));
    hist.accumulate(poset_key(g));
    hist.accumulate(poset_key(empty_dag(2)));

    std::ostringstream out;
    write_histogram_csv(out, hist);
    CHECK(out.str() == "key_hex,count\n0200000000,1\n0200000002,2\n");
}

TEST_CASE("tv report fields") {
    nlohmann::json r = tv_report(4, 16, 100000, 219, 0.0285);
    CHECK(r["n"] == 4);
    CHECK(r["m"] == 16);
    CHECK(r["samples"] == 100000);
    CHECK(r["M"] == 219);
    CHECK(r["tv_empirical"] == doctest::Approx(0.0285));
}

TEST_CASE("state space export for n=2") {
    StateSpace s = enumerate_state_space(2);
    std::ostringstream out;
    write_state_space(out, s);
    // poset sort order: antichain (zero payload) < {(0,1)} (0x02) < {(1,0)} (0x04)
    CHECK(out.str() == "0,00,0\n1,01,2\n2,10,1\n");
}

TEST_CASE("matrix csv in exact rationals") {
    StateSpace s = enumerate_state_space(2);
    auto P = build_mcstar_matrix<Rational>(s);
    std::ostringstream out;
    write_matrix_csv(out, P);
    CHECK(out.str() == "0,1/2,1/2\n1/2,1/2,0\n1/2,0,1/2\n");
}

TEST_CASE("double formatting is locale-independent shortest form") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(42.0) == "42");
    double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third); // round-trips exactly
}
