#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetgen/dag.hpp"

namespace posetgen {

// 1/2 sum |p_i - q_i|. Both inputs must be the same length and normalized
// to 1 within 1e-9; violations throw.
double tv_distance(std::span<const double> p, std::span<const double> q);

// Empirical counts over sampled posets of a fixed size.
struct SampleHistogram {
    int n = 0;
    std::unordered_map<PosetKey, std::uint64_t, PosetKeyHash> counts;
    std::uint64_t total = 0;

    SampleHistogram() = default;
    explicit SampleHistogram(int n) : n(n) {}

    void accumulate(const PosetKey& key); // throws on element-count mismatch
    void merge(const SampleHistogram& other);

    // Entries sorted by key (the serialized-byte order); deterministic
    // regardless of accumulation order.
    std::vector<std::pair<PosetKey, std::uint64_t>> sorted_entries() const;
};

// Plug-in total variation between the sample histogram and the uniform
// distribution over all num_posets categories; never-sampled categories
// contribute 1/num_posets each. num_posets must cover every observed key.
double empirical_tv(const SampleHistogram& hist, std::uint64_t num_posets);

// Same estimator from a raw count vector (zero counts allowed); counts for
// categories beyond the vector are taken as zero.
double empirical_tv_from_counts(std::span<const std::uint64_t> counts, std::uint64_t num_posets);

} // namespace posetgen
