#ifndef KMODENUM_TESTS_INSTANCES_HPP
#define KMODENUM_TESTS_INSTANCES_HPP

// Instance generators shared by the unit suites and the acceptance binary.

#include <random>
#include <vector>

#include "kmodenum/polyhedron.hpp"
#include "kmodenum/ratmat.hpp"

namespace kmodenum::testing {

inline RationalMatrix matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<RationalVector> r;
    for (const auto& row : rows) {
        RationalVector v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return RationalMatrix::from_rows(r, rows.empty() ? 0 : rows.front().size());
}

inline RationalVector vec(const std::vector<long>& values) {
    RationalVector out;
    for (long x : values) out.emplace_back(x);
    return out;
}

inline PolyhedronSpec poly(const std::vector<std::vector<long>>& rows, const std::vector<long>& b) {
    return PolyhedronSpec(matrix(rows), vec(b));
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> entry(lo, hi);
    RationalMatrix out(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = entry(rng);
    }
    return out;
}

/// Sum-of-ones row appended with right-hand side 1; the other rows keep
/// right-hand side `scaled_rhs`.
inline PolyhedronSpec with_ones_row(const RationalMatrix& s, RationalVector scaled_rhs) {
    RationalMatrix t = s;
    t.append_row("ones", RationalVector(s.cols(), Rational(1)));
    scaled_rhs.push_back(1);
    return PolyhedronSpec(std::move(t), std::move(scaled_rhs));
}

/**
 * Random bounded instance: m <= max_m rows, 2 <= n <= max_n columns,
 * entries in {-2..2}, b = S x0 for a random x0 > 0. When {Sx = b, x >= 0}
 * is unbounded the system is rescaled by 1/sum(x0) and sum(x) = 1 is
 * appended, which keeps x0 / sum(x0) feasible and makes P bounded.
 */
inline PolyhedronSpec random_bounded_instance(unsigned seed, std::size_t max_m = 5, std::size_t max_n = 10) {
    std::mt19937 rng(seed);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    const RationalMatrix s = random_matrix(rng, m, n);
    RationalVector x0(n);
    std::uniform_int_distribution<int> positive(1, 3);
    Rational total = 0;
    for (auto& x : x0) {
        x = positive(rng);
        total += x;
    }
    RationalVector b = s.multiply(x0);
    PolyhedronSpec p(s, b);
    if (p.is_bounded()) return p;
    for (auto& v : b) v /= total;
    return with_ones_row(s, std::move(b));
}

/// Row i touches columns i, i+1, i+2 with entries in {1, 2}; m = n - 2 and
/// b = S x0 for x0 > 0. Positive rows make the polytope bounded.
inline PolyhedronSpec band_instance(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(1, 2);
    std::uniform_int_distribution<int> positive(1, 3);
    RationalMatrix s(n - 2, n);
    for (std::size_t r = 0; r + 2 < n; ++r) {
        for (std::size_t c = r; c < r + 3; ++c) s(r, c) = coef(rng);
    }
    RationalVector x0(n);
    for (auto& x : x0) x = positive(rng);
    RationalVector b = s.multiply(x0);
    return PolyhedronSpec(std::move(s), std::move(b));
}

/// Block-diagonal polytope from independent bounded blocks with b != 0.
inline PolyhedronSpec block_diagonal(const std::vector<PolyhedronSpec>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.num_rows();
        cols += b.num_columns();
    }
    RationalMatrix s(rows, cols);
    RationalVector rhs;
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.num_rows(); ++r) {
            for (std::size_t c = 0; c < b.num_columns(); ++c) s(r0 + r, c0 + c) = b.matrix()(r, c);
            rhs.push_back(b.rhs()[r]);
        }
        r0 += b.num_rows();
        c0 += b.num_columns();
    }
    return PolyhedronSpec(std::move(s), std::move(rhs));
}

/// Small random block: positive-entry rows keep it bounded, b = S x0 != 0.
inline PolyhedronSpec random_block(std::mt19937& rng, std::size_t m, std::size_t n) {
    const RationalMatrix s = random_matrix(rng, m, n, 0, 2);
    RationalMatrix t = s;
    for (std::size_t c = 0; c < n; ++c) t(0, c) = std::uniform_int_distribution<int>(1, 2)(rng);
    RationalVector x0(n);
    for (auto& x : x0) x = std::uniform_int_distribution<int>(1, 3)(rng);
    RationalVector b = t.multiply(x0);
    return PolyhedronSpec(std::move(t), std::move(b));
}

/// The 6 x 9 example network (steady state Sx = 0).
inline RationalMatrix example_network_matrix() {
    return matrix({{1, -1, 0, 0, 0, -1, 0, 0, 0},
                   {0, 1, -1, 0, 1, 0, 0, -1, 0},
                   {0, 0, 1, -1, 1, 0, 0, 0, 0},
                   {0, 0, 0, 0, -1, 1, 1, 0, 0},
                   {0, 0, 0, 0, 0, 1, -1, -1, 0},
                   {0, 0, 0, 0, 0, 0, 0, 1, -1}});
}

/// The example network with sum(x) = 1 appended.
inline PolyhedronSpec example_network_normalized() { return with_ones_row(example_network_matrix(), RationalVector(6, Rational(0))); }

/// Exact vertex set of example_network_normalized(), frozen from the brute-force
/// oracle and an independent symbolic enumeration.
inline std::vector<RationalVector> example_network_vertices() {
    auto q = [](const char* s) { return Rational(s); };
    return {
        {q("1/11"), q("0"), q("2/11"), q("4/11"), q("2/11"), q("1/11"), q("1/11"), q("0"), q("0")},
        {q("1/6"), q("0"), q("0"), q("1/6"), q("1/6"), q("1/6"), q("0"), q("1/6"), q("1/6")},
        {q("1/4"), q("1/4"), q("1/4"), q("1/4"), q("0"), q("0"), q("0"), q("0"), q("0")},
    };
}

}  // namespace kmodenum::testing

#endif  // KMODENUM_TESTS_INSTANCES_HPP
