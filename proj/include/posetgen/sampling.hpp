#pragma once

#include <cstdint>
#include <functional>

#include "posetgen/chain.hpp"
#include "posetgen/stats.hpp"

namespace posetgen {

// Runs `count` independent chains and accumulates their posets. Sample i
// always uses seed derive_stream_seed(base_seed, i), so the histogram is
// identical for every worker count. Workers accumulate privately and merge
// once at the end.
SampleHistogram sample_posets(int n, long long steps, std::uint64_t base_seed, long long count,
                              int jobs = 1);

// Same sampling loop, but hands each (index, key) pair to a sink instead
// of building a histogram. With jobs > 1 the sink is called under a lock
// and in nondeterministic order unless `ordered` is set.
void for_each_sample(int n, long long steps, std::uint64_t base_seed, long long count, int jobs,
                     bool ordered, const std::function<void(long long, const PosetKey&)>& sink);

} // namespace posetgen
