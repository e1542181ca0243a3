#ifndef VOLRIG_EXTERIOR_HPP
#define VOLRIG_EXTERIOR_HPP

#include <vector>

#include "volrig/combinat.hpp"
#include "volrig/linalg.hpp"

namespace volrig {

// Enumerations of k-subsets are capped so a typo cannot allocate gigabytes.
inline constexpr std::uint64_t kCompoundSizeCap = 100000;

// Coordinates of an element of the k-th exterior power of F^d in the
// canonical basis {e_I : I a k-subset of [d]}, lexicographically ordered.
template <FieldScalar F>
struct Plucker {
    int ambient_dim = 0;
    int grade = 0;
    std::vector<F> coords;
};

namespace detail {

inline void check_grade(int k, int d, const char* who) {
    if (k < 1 || k > d)
        throw DimensionError(std::string(who) + ": grade " + std::to_string(k) +
                             " out of range for dimension " + std::to_string(d));
    if (binomial(d, k) > kCompoundSizeCap)
        throw SizeLimitError(std::string(who) + ": C(" + std::to_string(d) + "," +
                             std::to_string(k) + ") exceeds size cap");
}

} // namespace detail

// x_1 ^ ... ^ x_k in F^d; coordinate I is the I-th maximal minor of the
// d x k matrix with the x_i as columns.
template <FieldScalar F>
Plucker<F> wedge(const std::vector<std::vector<F>>& vectors, int d) {
    const int k = static_cast<int>(vectors.size());
    detail::check_grade(k, d, "wedge");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != d)
            throw DimensionError("wedge: vector length differs from ambient dimension");

    Plucker<F> w;
    w.ambient_dim = d;
    w.grade = k;
    const auto subsets = subsets_lex(d, k);
    w.coords.reserve(subsets.size());
    for (const auto& rows : subsets) {
        Matrix<F> minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = vectors[j][rows[i]];
        w.coords.push_back(det(minor));
    }
    return w;
}

// Induced inner product on the exterior power; by Cauchy-Binet it is the
// plain scalar product of Plucker coordinate vectors.
template <FieldScalar F>
F exterior_inner(const Plucker<F>& a, const Plucker<F>& b) {
    if (a.ambient_dim != b.ambient_dim || a.grade != b.grade)
        throw DimensionError("exterior_inner: grade or ambient dimension mismatch");
    return dot(a.coords, b.coords);
}

// k-th compound matrix of a square matrix: all k x k minors, rows and
// columns in the lexicographic subset order.
template <FieldScalar F>
Matrix<F> compound(const Matrix<F>& a, int k) {
    if (a.rows() != a.cols()) throw DimensionError("compound: matrix not square");
    const int n = static_cast<int>(a.rows());
    detail::check_grade(k, n, "compound");

    const auto subsets = subsets_lex(n, k);
    Matrix<F> c(subsets.size(), subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            Matrix<F> minor(k, k);
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s) minor(r, s) = a(subsets[i][r], subsets[j][s]);
            c(i, j) = det(minor);
        }
    return c;
}

namespace detail {

// Vol^2 with the single-point convention Vol({pt})^2 = 1, matching the
// volume recursion Vol(D)^2 = (1/k^2) |p_i - p_i^D|^2 Vol(D - v_i)^2.
template <FieldScalar F>
F vol_squared_any(const std::vector<std::vector<F>>& points) {
    if (points.size() == 1) return F(1);
    const int k = static_cast<int>(points.size()) - 1;
    const int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw DimensionError("vol_squared: points have mixed dimensions");
    if (k > d) return F(0);

    Matrix<F> gram(k, k);
    std::vector<std::vector<F>> diff(k, std::vector<F>(d));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < d; ++c) diff[i][c] = points[i + 1][c] - points[0][c];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram(i, j) = dot(diff[i], diff[j]);
    const F kfact = factorial_in<F>(k);
    return det(gram) / (kfact * kfact);
}

} // namespace detail

// Squared simplex volume (1/k!)^2 det(M^T M) for k+1 points; zero when the
// points are affinely dependent or k exceeds the ambient dimension.
template <FieldScalar F>
F vol_squared(const std::vector<std::vector<F>>& points) {
    if (points.size() < 2) throw ArgumentError("vol_squared: need at least 2 points");
    return detail::vol_squared_any(points);
}

} // namespace volrig

#endif
