#include "volrig/rigidity.hpp"

namespace volrig {

KneserReport kneser_verification(int k) {
    if (k < 2) throw ArgumentError("kneser_verification: need k >= 2");
    KneserReport rep;
    rep.k = k;
    rep.d = k + 1;
    const int nv = k + 2; // |V| = d+1, ambient dimension d+1 = k+2

    const Hypergraph h = Hypergraph::complete_uniform(nv, k);

    // standard-basis realisation p(v_i) = e_i in R^{k+2}
    Realisation<Rational> p;
    p.dim = nv;
    for (int i = 0; i < nv; ++i) {
        std::vector<Rational> x(nv, Rational(0));
        x[i] = Rational(1);
        p.coords.emplace(h.vertices()[i], std::move(x));
    }

    Matrix<Rational> r = rigidity_matrix(h, p);
    rep.rank_r = rank_of(r).rank;
    rep.target = static_cast<int>(binomial(rep.d + 1, 2));

    // M1: divide every row by the shared squared volume of a (k-1)-point
    // standard-basis simplex (= 1 when k = 2, where the factor is the
    // volume of a single point).
    Rational w2(1);
    if (k - 1 >= 2) {
        std::vector<std::vector<Rational>> pts;
        for (int i = 0; i < k - 1; ++i) {
            std::vector<Rational> x(nv, Rational(0));
            x[i] = Rational(1);
            pts.push_back(std::move(x));
        }
        w2 = vol_squared(pts);
    }
    Matrix<Rational> m1 = r;
    for (std::size_t i = 0; i < m1.rows(); ++i)
        for (std::size_t j = 0; j < m1.cols(); ++j) m1(i, j) /= w2;

    // M2: multiply rows by -(k-1), then divide column (i,i) by -(k-1).
    const Rational neg_km1(-(k - 1));
    Matrix<Rational> m2 = m1;
    for (std::size_t i = 0; i < m2.rows(); ++i)
        for (std::size_t j = 0; j < m2.cols(); ++j) m2(i, j) *= neg_km1;
    for (int i = 0; i < nv; ++i) {
        const std::size_t col = static_cast<std::size_t>(i) * nv + i;
        for (std::size_t row = 0; row < m2.rows(); ++row) m2(row, col) /= neg_km1;
    }

    // M3: keep only the columns (h,i) with h < i (coordinate h inside the
    // block of vertex i).
    std::vector<std::size_t> kept;
    for (int i = 0; i < nv; ++i)
        for (int hh = 0; hh < i; ++hh)
            kept.push_back(static_cast<std::size_t>(i) * nv + hh);
    std::vector<std::size_t> all_rows(m2.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    Matrix<Rational> m3 = m2.submatrix(all_rows, kept);

    // Pairs (h,i), h < i, listed in the column order of M3.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nv; ++i)
        for (int hh = 0; hh < i; ++hh) pairs.emplace_back(hh, i);
    auto pair_index = [&](int a, int b) {
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (pairs[t].first == a && pairs[t].second == b) return t;
        throw ArgumentError("kneser_verification: bad pair");
    };

    // Independently built Kneser K(d+1,2) adjacency: pairs adjacent iff disjoint.
    Matrix<Rational> kneser(pairs.size(), pairs.size());
    for (std::size_t s = 0; s < pairs.size(); ++s)
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const auto [a, b] = pairs[s];
            const auto [c, e] = pairs[t];
            const bool disjoint = a != c && a != e && b != c && b != e;
            kneser(s, t) = disjoint ? Rational(1) : Rational(0);
        }

    // Relabel row D by the pair V \ D and compare entrywise.
    const auto& edges = h.edges();
    bool match = edges.size() == pairs.size();
    for (std::size_t row = 0; row < edges.size() && match; ++row) {
        std::vector<bool> in_edge(nv, false);
        for (const auto& v : edges[row]) in_edge[h.vertex_index(v)] = true;
        int a = -1, b = -1;
        for (int i = 0; i < nv; ++i)
            if (!in_edge[i]) (a < 0 ? a : b) = i;
        const std::size_t s = pair_index(a, b);
        for (std::size_t t = 0; t < pairs.size() && match; ++t)
            if (m3(row, t) != kneser(s, t)) match = false;
    }
    rep.entrywise_match = match;
    rep.det_nonzero = !det(m3).is_zero();
    return rep;
}

} // namespace volrig
