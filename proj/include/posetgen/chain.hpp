#pragma once

#include <cstdint>
#include <utility>

#include "posetgen/dag.hpp"
#include "posetgen/rng.hpp"

namespace posetgen {

// Ordered pairs (i,j), i != j, indexed row-major with the diagonal skipped:
// (0,1),(0,2),...,(0,n-1),(1,0),(1,2),... The chain's proposal draw, the
// oracle's transition matrices and the state-space export all share this
// indexing.
inline int ordered_pair_count(int n) { return n * (n - 1); }

inline Edge ordered_pair_at(int n, int k) {
    int i = k / (n - 1);
    int r = k % (n - 1);
    return {i, r + (r >= i ? 1 : 0)};
}

inline int ordered_pair_index(int n, int i, int j) {
    return i * (n - 1) + j - (j > i ? 1 : 0);
}

// Parameters of one MC*_n run.
struct ChainConfig {
    int n = 0;
    long long steps = 0; // m
    std::uint64_t seed = 0;

    static long long default_steps(int n) { return static_cast<long long>(n) * n; }

    static ChainConfig with_default_steps(int n, std::uint64_t seed) {
        return {n, default_steps(n), seed};
    }
};

struct ChainState {
    Dag dag;
    int exponent = 0; // cached class_size_exponent(dag)
    long long step = 0;

    static ChainState initial(int n) { return {empty_dag(n), 0, 0}; }
};

enum class ProposalKind { AddEdge, RemoveEdge, CycleBlocked };

// Evaluation of the move toggling (i,j), before the acceptance coin.
// log2_ratio is exponent(current) - exponent(proposed); the acceptance
// probability min(1, |[X]|/|[proposed]|) equals min(1, 2^log2_ratio).
struct Proposal {
    ProposalKind kind;
    int i = 0;
    int j = 0;
    int log2_ratio = 0;
    int proposed_exponent = 0;
};

Proposal propose(const ChainState& state, int i, int j);

inline Edge draw_pair(int n, ChainRng& rng) {
    return ordered_pair_at(n, static_cast<int>(rng.next_below(ordered_pair_count(n))));
}

// One step of the uniform chain MC_n: toggle the drawn pair unless the
// addition would create a cycle.
void mc_step(ChainState& state, ChainRng& rng);
void mc_apply(ChainState& state, int i, int j);

// One Metropolis step of MC*_n. The acceptance coin (a 53-bit uniform
// real) is drawn only when log2_ratio < 0; cycle-blocked proposals consume
// no coin. Returns true if the state changed.
bool mcstar_step(ChainState& state, ChainRng& rng);
bool mcstar_apply(ChainState& state, int i, int j, ChainRng& rng);

// From the empty graph, apply exactly cfg.steps Metropolis steps.
// Deterministic in (n, steps, seed).
Dag run_chain(const ChainConfig& cfg);

// The generator PG_{n,m}: transitive closure of the chain's final state.
PosetKey generate_poset(const ChainConfig& cfg);

} // namespace posetgen
