#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "posetgen/dag.hpp"
#include "posetgen/oracle.hpp"
#include "posetgen/stats.hpp"

namespace posetgen {

// Edge-list text: first line "n", then one "i j" pair per line, 0-based.
std::string to_edge_list(const Dag& g);
std::string to_edge_list(const PosetKey& key); // the strict order's pairs
Dag dag_from_edge_list(std::istream& in);      // validates bounds and acyclicity

// Hex form of the PosetKey binary serialization, lowercase, two digits per
// byte. This is the key format used in histogram CSV exports.
std::string key_to_hex(const PosetKey& key);
PosetKey key_from_hex(std::string_view hex);

// {"n": int, "relation": [[i,j],...]} carrying the full strict order,
// plus an optional "covers" array with the Hasse edges.
nlohmann::json poset_to_json(const PosetKey& key, bool include_covers = false);
PosetKey poset_from_json(const nlohmann::json& j);

// Hasse diagram in Graphviz dot: one directed edge per cover pair.
std::string poset_to_dot_hasse(const PosetKey& key);

// CSV "key_hex,count", rows sorted by key.
void write_histogram_csv(std::ostream& out, const SampleHistogram& hist);

nlohmann::json tv_report(int n, long long steps, long long samples, std::uint64_t num_posets,
                         double tv_empirical);

// Newline-delimited "index,edge-bitstring,poset-index" records. The edge
// bitstring lists ordered pairs 0..n(n-1)-1 left to right.
void write_state_space(std::ostream& out, const StateSpace& space);

template <class T>
void write_matrix_csv(std::ostream& out, const TransitionMatrix<T>& matrix);

// Locale-independent decimal formatting (shortest round-trip form).
std::string format_double(double v);

} // namespace posetgen
