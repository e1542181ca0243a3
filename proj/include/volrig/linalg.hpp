#ifndef VOLRIG_LINALG_HPP
#define VOLRIG_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "volrig/matrix.hpp"

namespace volrig {

/*
 * Exact rank/kernel kernels.
 *
 * Rational rank goes through fraction-free (Bareiss) elimination on a
 * denominator-cleared integer copy, so intermediate entries are minors of
 * the input rather than arbitrary fractions. Pivoting is always "first
 * nonzero in column order", which keeps every routine deterministic.
 */

struct RankCertificate {
    int rank = 0;
    std::string field_kind;                         // "rational" or "prime(p)"
    std::optional<std::uint64_t> seed;              // set when the matrix came from a sampled point
    std::vector<std::pair<int, int>> pivot_trace;   // (row, col) in elimination order
};

template <FieldScalar F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    F s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Determinant by fraction-free elimination with row swaps. Works over any
// exact field; divisions are by earlier pivots and stay exact.
template <FieldScalar F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return F(1);
    F prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return F(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = F(0);
        }
        prev = m(k, k);
    }
    return sign == 1 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

namespace detail {

// Bareiss rank over integers (rows already denominator-cleared).
inline RankCertificate bareiss_rank(std::vector<std::vector<mpz_class>>& b, std::size_t cols) {
    RankCertificate cert;
    cert.field_kind = "rational";
    const std::size_t rows = b.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && b[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(b[piv], b[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = b[i][j] * b[r][c] - b[i][c] * b[r][j];
                mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            b[i][c] = 0;
        }
        prev = b[r][c];
        cert.pivot_trace.emplace_back(static_cast<int>(r), static_cast<int>(c));
        ++r;
    }
    cert.rank = static_cast<int>(r);
    return cert;
}

} // namespace detail

inline RankCertificate rank_of(const Matrix<Rational>& m) {
    std::vector<std::vector<mpz_class>> b(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            b[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    return detail::bareiss_rank(b, m.cols());
}

inline RankCertificate rank_of(const Matrix<Fp>& m) {
    Matrix<Fp> b = m;
    RankCertificate cert;
    cert.field_kind = "prime(" + std::to_string(Fp::modulus()) + ")";
    const std::size_t rows = b.rows(), cols = b.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && b(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(b(piv, j), b(r, j));
        const Fp inv = b(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (b(i, c).is_zero()) continue;
            const Fp f = b(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) b(i, j) -= f * b(r, j);
        }
        cert.pivot_trace.emplace_back(static_cast<int>(r), static_cast<int>(c));
        ++r;
    }
    cert.rank = static_cast<int>(r);
    return cert;
}

// In-place reduced row echelon form; returns pivot column indices.
template <FieldScalar F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Exact basis of the right kernel; size is cols - rank.
template <FieldScalar F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    Matrix<F> r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of a nonsingular square system, nullopt when singular.
template <FieldScalar F>
std::optional<std::vector<F>> solve_square(const Matrix<F>& a, const std::vector<F>& rhs) {
    if (a.rows() != a.cols() || rhs.size() != a.rows())
        throw DimensionError("solve_square: shape mismatch");
    const std::size_t n = a.rows();
    Matrix<F> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = rhs[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (!pivots.empty() && pivots.back() == n))
        return std::nullopt;
    std::vector<F> x(n, F(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

// Projection of x onto the affine hull of `points` (which must be affinely
// independent; checked through the Gram determinant of the differences).
template <FieldScalar F>
std::vector<F> affine_projection(const std::vector<F>& x, const std::vector<std::vector<F>>& points) {
    if (points.empty()) throw ArgumentError("affine_projection: no points");
    const std::size_t d = x.size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionError("affine_projection: dimension mismatch");

    const std::size_t m = points.size() - 1;
    Matrix<F> gram(m, m);
    std::vector<std::vector<F>> diff(m, std::vector<F>(d));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < d; ++c) diff[i][c] = points[i + 1][c] - points[0][c];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(diff[i], diff[j]);

    std::vector<F> rhs(m, F(0));
    for (std::size_t i = 0; i < m; ++i) {
        F s(0);
        for (std::size_t c = 0; c < d; ++c) s += diff[i][c] * (x[c] - points[0][c]);
        rhs[i] = s;
    }
    auto lambda = solve_square(gram, rhs);
    if (!lambda) throw DegeneracyError("affine_projection: points are affinely dependent");
    std::vector<F> q = points[0];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < d; ++c) q[c] += (*lambda)[i] * diff[i][c];
    return q;
}

// dvec minus its orthogonal projection onto span(spanning). The spanning
// set may be dependent or empty.
template <FieldScalar F>
std::vector<F> orth_complement_projection(const std::vector<F>& dvec,
                                          const std::vector<std::vector<F>>& spanning) {
    const std::size_t d = dvec.size();
    std::vector<std::vector<F>> basis;
    if (!spanning.empty()) {
        Matrix<F> s(spanning.size(), d);
        for (std::size_t i = 0; i < spanning.size(); ++i) {
            if (spanning[i].size() != d) throw DimensionError("orth_complement_projection: dimension mismatch");
            for (std::size_t c = 0; c < d; ++c) s(i, c) = spanning[i][c];
        }
        Matrix<F> red = s;
        const std::size_t nb = rref(red).size();
        for (std::size_t i = 0; i < nb; ++i) basis.push_back(red.row(i));
    }
    if (basis.empty()) return dvec;

    const std::size_t m = basis.size();
    Matrix<F> gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(basis[i], basis[j]);
    std::vector<F> rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = dot(basis[i], dvec);
    auto lambda = solve_square(gram, rhs);
    if (!lambda) throw DegeneracyError("orth_complement_projection: Gram matrix singular");

    std::vector<F> out = dvec;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < d; ++c) out[c] -= (*lambda)[i] * basis[i][c];
    return out;
}

// Reduce a rational matrix mod the active prime. Throws when some
// denominator vanishes mod p (caller re-randomizes).
inline Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m) {
    Matrix<Fp> r(m.rows(), m.cols());
    const std::uint64_t p = Fp::modulus();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            mpz_class den_mod = q.den() % p;
            if (den_mod == 0) throw DegeneracyError("reduce_mod_p: denominator divisible by p");
            mpz_class num_mod = q.num() % p;
            if (num_mod < 0) num_mod += p;
            Fp num = Fp::from_residue(num_mod.get_ui());
            Fp den = Fp::from_residue(den_mod.get_ui());
            r(i, j) = num / den;
        }
    return r;
}

} // namespace volrig

#endif
