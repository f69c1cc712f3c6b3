#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace posetgen {

// Square boolean matrix backed by per-row 64-bit words. Rows are padded to a
// whole number of words; padding bits are kept zero so that equality, hashing
// and popcounts can work on raw words.
class BitMatrix {
public:
    BitMatrix() = default;

    explicit BitMatrix(int n)
        : n_(n), words_per_row_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_per_row_, 0) {}

    int size() const { return n_; }
    int words_per_row() const { return words_per_row_; }

    bool get(int i, int j) const {
        return (row_ptr(i)[j >> 6] >> (j & 63)) & 1u;
    }

    void set(int i, int j) { row_ptr(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
    void clear(int i, int j) { row_ptr(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }

    void assign(int i, int j, bool value) {
        if (value) {
            set(i, j);
        } else {
            clear(i, j);
        }
    }

    std::span<const std::uint64_t> row(int i) const { return {row_ptr(i), static_cast<std::size_t>(words_per_row_)}; }
    std::span<std::uint64_t> row(int i) { return {row_ptr(i), static_cast<std::size_t>(words_per_row_)}; }

    // dst |= row(i)
    void or_row_into(int i, std::span<std::uint64_t> dst) const {
        const std::uint64_t* src = row_ptr(i);
        for (int w = 0; w < words_per_row_; ++w) dst[w] |= src[w];
    }

    int row_popcount(int i) const {
        int c = 0;
        for (std::uint64_t w : row(i)) c += std::popcount(w);
        return c;
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool rows_intersect(int i, std::span<const std::uint64_t> other) const {
        const std::uint64_t* src = row_ptr(i);
        for (int w = 0; w < words_per_row_; ++w) {
            if (src[w] & other[w]) return true;
        }
        return false;
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (int i = 0; i < n_; ++i) {
            for_each_set_bit(row(i), [&](int j) { t.set(j, i); });
        }
        return t;
    }

    std::span<const std::uint64_t> words() const { return bits_; }

    bool operator==(const BitMatrix& other) const = default;

    // Calls fn(j) for every set bit of a row span, in ascending order.
    template <typename Fn>
    static void for_each_set_bit(std::span<const std::uint64_t> row, Fn&& fn) {
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }

private:
    const std::uint64_t* row_ptr(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_per_row_; }
    std::uint64_t* row_ptr(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_per_row_; }

    int n_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace posetgen
