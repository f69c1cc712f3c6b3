#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "posetgen/bitmatrix.hpp"

namespace posetgen {

using Edge = std::pair<int, int>;

// Labelled directed graph on vertices 0..n-1, dense adjacency bitmatrix.
// Acyclicity is not enforced on every mutation; it is maintained by the
// chain (which tests proposals with would_create_cycle) and checked at the
// parsing and closure/reduction boundaries.
struct Dag {
    BitMatrix adj;

    Dag() = default;
    explicit Dag(int n) : adj(n) {}

    int size() const { return adj.size(); }
    bool has_edge(int i, int j) const { return adj.get(i, j); }
    void add_edge(int i, int j);    // requires i != j
    void remove_edge(int i, int j);
    int edge_count() const { return adj.popcount(); }
    std::vector<Edge> edges() const;

    bool operator==(const Dag&) const = default;

    // Validates vertex bounds, self-loops and acyclicity.
    static Dag from_edges(int n, const std::vector<Edge>& edges);
};

// Canonical encoding of a labelled poset: the strict order relation,
// stored as the transitive closure of some DAG. Reflexive pairs are
// implicit. Keys compare equal exactly when the posets are equal.
//
// Binary layout (to_bytes/from_bytes): n as unsigned 32-bit little-endian,
// then ceil(n^2/8) bytes of row-major bits (bit k of byte b is relation
// entry 8*b+k, row-major, LSB first).
struct PosetKey {
    BitMatrix rel;

    int size() const { return rel.size(); }
    bool less(int i, int j) const { return rel.get(i, j); }
    std::vector<Edge> relation_pairs() const;

    // Irreflexive, antisymmetric and transitive. Together these make the
    // relation a strict order, so no separate cycle check is needed.
    bool valid() const;

    std::vector<std::uint8_t> to_bytes() const;
    static PosetKey from_bytes(const std::uint8_t* data, std::size_t len); // validates invariants

    bool operator==(const PosetKey&) const = default;
    // Total order on (n, serialized bytes); used for deterministic output.
    std::strong_ordering operator<=>(const PosetKey& other) const;
};

struct PosetKeyHash {
    std::size_t operator()(const PosetKey& k) const;
};

Dag empty_dag(int n);

// True iff adding (i,j) to g would close a directed cycle, i.e. iff i is
// reachable from j. Requires i != j and (i,j) not already present.
bool would_create_cycle(const Dag& g, int i, int j);

bool is_acyclic(const Dag& g);

// Throw on cyclic input.
Dag transitive_closure(const Dag& g);
Dag transitive_reduction(const Dag& g);

// Closure edge count minus reduction edge count. The equivalence class of
// g under equal-closure has exactly 2^exponent members.
int class_size_exponent(const Dag& g);

PosetKey poset_key(const Dag& g);

// Cover relation of the poset (transitive reduction of the strict order).
// Throws if the key does not satisfy its invariants.
std::vector<Edge> hasse_edges(const PosetKey& p);

} // namespace posetgen
