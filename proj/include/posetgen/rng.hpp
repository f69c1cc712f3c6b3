#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace posetgen {

// Random stream used by one chain. Wraps std::mt19937_64 (whose output
// sequence is fixed by the standard) and does bounded draws and unit reals
// by hand, so identical seeds give identical chains on every platform.
class ChainRng {
public:
    explicit ChainRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound) via bitmask rejection; unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound < 2) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t v = gen_() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform on {k * 2^-53 : 0 <= k < 2^53}.
    double next_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

// Seed for the idx-th independent stream of a batch (splitmix64 finalizer
// over base + idx * golden gamma). Stream assignment is per sample, so
// batch output does not depend on how samples are spread over workers.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t idx) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (idx + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace posetgen
