#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetgen/chain.hpp"
#include "posetgen/dag.hpp"

namespace posetgen {

using Rational = mpq_class;

// Desk-scale defaults: 29 281 DAGs at n=5, and 543x543 transition matrices
// at n=4. Both are per-call parameters, not hard limits.
inline constexpr int kEnumerationGuard = 5;
inline constexpr int kMatrixGuard = 4;

// Exhaustive ground truth for one n: every labelled DAG, its equivalence
// class under equal-transitive-closure, and the distinct posets.
//
// DAGs are indexed in lexicographic order of their edge bitstrings
// b_0 b_1 ... b_{K-1}, K = n(n-1), where b_k is the presence of ordered
// pair k (see ordered_pair_at) and b_0 is the most significant position.
// The empty DAG is always index 0. Posets are sorted by PosetKey order.
struct StateSpace {
    int n = 0;
    std::vector<Dag> dags;
    std::vector<std::uint64_t> masks; // bit k = ordered pair k present
    std::vector<int> exponents;       // class_size_exponent per DAG
    std::vector<int> class_of;        // DAG index -> poset index
    std::vector<PosetKey> posets;
    std::vector<std::uint64_t> class_sizes;
    std::unordered_map<std::uint64_t, std::size_t> mask_index;

    std::size_t dag_count() const { return dags.size(); }
    std::size_t poset_count() const { return posets.size(); }
};

StateSpace enumerate_state_space(int n, int guard = kEnumerationGuard);

// Number of enumerated DAGs whose closure equals the closure of g;
// the counting route of the class-cardinality formula check.
std::uint64_t class_size_bruteforce(const Dag& g, const StateSpace& space);

template <class T>
struct TransitionMatrix {
    std::size_t size = 0;
    std::vector<T> entries; // row-major, row = from-state

    explicit TransitionMatrix(std::size_t n) : size(n), entries(n * n) {}
    T& at(std::size_t r, std::size_t c) { return entries[r * size + c]; }
    const T& at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
};

namespace detail {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static double pow2(int e) { return std::ldexp(1.0, e); }
};

template <>
struct ScalarOps<Rational> {
    static Rational ratio(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    static Rational pow2(int e) {
        mpz_class shifted = mpz_class(1) << (e >= 0 ? e : -e);
        return e >= 0 ? Rational(shifted) : Rational(1, shifted);
    }
};

template <class T>
T abs_diff(const T& a, const T& b) {
    return a > b ? T(a - b) : T(b - a);
}

inline void check_matrix_guard(const StateSpace& space, int guard) {
    if (space.n > guard) {
        throw std::invalid_argument("transition matrix: n=" + std::to_string(space.n) +
                                    " exceeds the matrix guard (" + std::to_string(guard) +
                                    "); pass a larger guard to override");
    }
}

} // namespace detail

// Transition matrix of the Metropolis chain MC*_n over space.dags:
// p_{x,y} = 1/(n(n-1)) * min(1, pi_y/pi_x) for neighbors differing in one
// edge, with cycle-blocked additions and rejections folded into the
// diagonal. The diagonal is accumulated from rejected mass, so every entry
// is non-negative by construction.
template <class T>
TransitionMatrix<T> build_mcstar_matrix(const StateSpace& space, int guard = kMatrixGuard) {
    detail::check_matrix_guard(space, guard);
    using Ops = detail::ScalarOps<T>;
    const int pairs = ordered_pair_count(space.n);
    const T step_prob = Ops::ratio(1, pairs);
    TransitionMatrix<T> matrix(space.dag_count());
    for (std::size_t x = 0; x < space.dag_count(); ++x) {
        T stay{};
        for (int k = 0; k < pairs; ++k) {
            const std::uint64_t toggled = space.masks[x] ^ (std::uint64_t{1} << k);
            auto it = space.mask_index.find(toggled);
            if (it == space.mask_index.end()) {
                stay += step_prob; // addition would create a cycle
                continue;
            }
            const std::size_t y = it->second;
            const int delta = space.exponents[x] - space.exponents[y];
            if (delta >= 0) {
                matrix.at(x, y) = step_prob;
            } else {
                T accept = step_prob * Ops::pow2(delta);
                matrix.at(x, y) = accept;
                stay += step_prob - accept;
            }
        }
        matrix.at(x, x) = stay;
    }
    return matrix;
}

// Transition matrix of the uniform chain MC_n (every admissible toggle is
// accepted). Symmetric, since toggling is an involution between neighbors.
template <class T>
TransitionMatrix<T> build_mc_matrix(const StateSpace& space, int guard = kMatrixGuard) {
    detail::check_matrix_guard(space, guard);
    using Ops = detail::ScalarOps<T>;
    const int pairs = ordered_pair_count(space.n);
    const T step_prob = Ops::ratio(1, pairs);
    TransitionMatrix<T> matrix(space.dag_count());
    for (std::size_t x = 0; x < space.dag_count(); ++x) {
        T stay{};
        for (int k = 0; k < pairs; ++k) {
            const std::uint64_t toggled = space.masks[x] ^ (std::uint64_t{1} << k);
            auto it = space.mask_index.find(toggled);
            if (it == space.mask_index.end()) {
                stay += step_prob;
            } else {
                matrix.at(x, it->second) = step_prob;
            }
        }
        matrix.at(x, x) = stay;
    }
    return matrix;
}

// Target distribution over DAG indices: pi_g = 1/(M * |[g]|) with
// |[g]| = 2^exponent. Sums to exactly 1 in rationals.
template <class T>
std::vector<T> stationary_target(const StateSpace& space) {
    using Ops = detail::ScalarOps<T>;
    const long classes = static_cast<long>(space.poset_count());
    std::vector<T> pi(space.dag_count());
    for (std::size_t g = 0; g < space.dag_count(); ++g) {
        pi[g] = Ops::ratio(1, classes) * Ops::pow2(-space.exponents[g]);
    }
    return pi;
}

// mu' = mu P (row vector times matrix).
template <class T>
std::vector<T> multiply_left(const std::vector<T>& mu, const TransitionMatrix<T>& matrix) {
    if (mu.size() != matrix.size) throw std::invalid_argument("multiply_left: dimension mismatch");
    std::vector<T> out(matrix.size);
    for (std::size_t x = 0; x < matrix.size; ++x) {
        if (mu[x] == 0) continue;
        for (std::size_t y = 0; y < matrix.size; ++y) {
            const T& p = matrix.at(x, y);
            if (p == 0) continue;
            out[y] += mu[x] * p;
        }
    }
    return out;
}

// Distribution of the chain after the given number of steps, started from
// the point mass on the empty DAG (index 0).
template <class T>
std::vector<T> exact_distribution(const TransitionMatrix<T>& matrix, long long steps) {
    if (steps < 0) throw std::invalid_argument("exact_distribution: negative step count");
    std::vector<T> mu(matrix.size);
    mu[0] = detail::ScalarOps<T>::ratio(1, 1);
    for (long long t = 0; t < steps; ++t) mu = multiply_left(mu, matrix);
    return mu;
}

// xi_i = sum of d over the DAGs in class i.
template <class T>
std::vector<T> project_to_posets(const std::vector<T>& dag_dist, const StateSpace& space) {
    if (dag_dist.size() != space.dag_count()) {
        throw std::invalid_argument("project_to_posets: distribution does not match state space");
    }
    std::vector<T> xi(space.poset_count());
    for (std::size_t g = 0; g < dag_dist.size(); ++g) xi[space.class_of[g]] += dag_dist[g];
    return xi;
}

template <class T>
std::vector<T> uniform_distribution(std::size_t size) {
    return std::vector<T>(size, detail::ScalarOps<T>::ratio(1, static_cast<long>(size)));
}

// 1/2 sum |p_i - q_i| without normalization checks; the callers hold
// distributions that are normalized by construction.
template <class T>
T tv_distance_raw(const std::vector<T>& p, const std::vector<T>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: dimension mismatch");
    T acc{};
    for (std::size_t i = 0; i < p.size(); ++i) acc += detail::abs_diff(p[i], q[i]);
    return T(acc / 2);
}

// Diagnostics shared by the validate command and the test suites.
template <class T>
T max_row_sum_error(const TransitionMatrix<T>& matrix) {
    T worst{};
    for (std::size_t x = 0; x < matrix.size; ++x) {
        T sum{};
        for (std::size_t y = 0; y < matrix.size; ++y) sum += matrix.at(x, y);
        T err = detail::abs_diff(sum, T(1));
        if (err > worst) worst = err;
    }
    return worst;
}

template <class T>
T max_detailed_balance_error(const TransitionMatrix<T>& matrix, const std::vector<T>& pi) {
    T worst{};
    for (std::size_t x = 0; x < matrix.size; ++x) {
        for (std::size_t y = x + 1; y < matrix.size; ++y) {
            T lhs = pi[x] * matrix.at(x, y);
            T rhs = pi[y] * matrix.at(y, x);
            T err = detail::abs_diff(lhs, rhs);
            if (err > worst) worst = err;
        }
    }
    return worst;
}

template <class T>
T max_stationarity_error(const TransitionMatrix<T>& matrix, const std::vector<T>& pi) {
    std::vector<T> advanced = multiply_left(pi, matrix);
    T worst{};
    for (std::size_t i = 0; i < pi.size(); ++i) {
        T err = detail::abs_diff(advanced[i], pi[i]);
        if (err > worst) worst = err;
    }
    return worst;
}

template <class T>
bool is_symmetric(const TransitionMatrix<T>& matrix) {
    for (std::size_t x = 0; x < matrix.size; ++x) {
        for (std::size_t y = x + 1; y < matrix.size; ++y) {
            if (matrix.at(x, y) != matrix.at(y, x)) return false;
        }
    }
    return true;
}

} // namespace posetgen
