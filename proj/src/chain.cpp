#include "posetgen/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace posetgen {

Proposal propose(const ChainState& state, int i, int j) {
    const int current = state.exponent;
    if (state.dag.has_edge(i, j)) {
        Dag z = state.dag;
        z.remove_edge(i, j);
        int e = class_size_exponent(z);
        return {ProposalKind::RemoveEdge, i, j, current - e, e};
    }
    if (would_create_cycle(state.dag, i, j)) {
        return {ProposalKind::CycleBlocked, i, j, 0, current};
    }
    Dag y = state.dag;
    y.add_edge(i, j);
    int e = class_size_exponent(y);
    return {ProposalKind::AddEdge, i, j, current - e, e};
}

void mc_apply(ChainState& state, int i, int j) {
    if (state.dag.has_edge(i, j)) {
        state.dag.remove_edge(i, j);
        state.exponent = class_size_exponent(state.dag);
    } else if (!would_create_cycle(state.dag, i, j)) {
        state.dag.add_edge(i, j);
        state.exponent = class_size_exponent(state.dag);
    }
    ++state.step;
}

void mc_step(ChainState& state, ChainRng& rng) {
    auto [i, j] = draw_pair(state.dag.size(), rng);
    mc_apply(state, i, j);
}

bool mcstar_apply(ChainState& state, int i, int j, ChainRng& rng) {
    Proposal p = propose(state, i, j);
    ++state.step;
    if (p.kind == ProposalKind::CycleBlocked) return false;
    if (p.log2_ratio < 0 && rng.next_real() >= std::ldexp(1.0, p.log2_ratio)) return false;
    if (p.kind == ProposalKind::RemoveEdge) {
        state.dag.remove_edge(i, j);
    } else {
        state.dag.add_edge(i, j);
    }
    state.exponent = p.proposed_exponent;
    return true;
}

bool mcstar_step(ChainState& state, ChainRng& rng) {
    auto [i, j] = draw_pair(state.dag.size(), rng);
    return mcstar_apply(state, i, j, rng);
}

Dag run_chain(const ChainConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("run_chain: n must be positive");
    if (cfg.steps < 0) throw std::invalid_argument("run_chain: negative step budget");
    ChainState state = ChainState::initial(cfg.n);
    ChainRng rng(cfg.seed);
    for (long long t = 0; t < cfg.steps; ++t) mcstar_step(state, rng);
    return state.dag;
}

PosetKey generate_poset(const ChainConfig& cfg) {
    return poset_key(run_chain(cfg));
}

} // namespace posetgen
