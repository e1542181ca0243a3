#ifndef VOLRIG_RIGIDITY_HPP
#define VOLRIG_RIGIDITY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "volrig/exterior.hpp"
#include "volrig/hypergraph.hpp"
#include "volrig/realisation.hpp"

namespace volrig {

namespace detail {

// Adjugate via cofactors; defined for every square matrix, singular or not.
template <FieldScalar F>
Matrix<F> adjugate(const Matrix<F>& g) {
    const std::size_t n = g.rows();
    Matrix<F> adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = F(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<F> minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = g(r, c);
                    ++cc;
                }
                ++rr;
            }
            F cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = cof; // transpose of the cofactor matrix
        }
    return adj;
}

inline std::string edge_label(const Edge& e) {
    std::string s;
    for (const auto& v : e) s += (s.empty() ? "" : ",") + v;
    return s;
}

} // namespace detail

/*
 * Volume rigidity matrix R(H,p): one row per hyperedge, d columns per
 * vertex (vertex-major, vertices in canonical order).
 *
 * Rows are computed as the gradient of Vol(p(D))^2 scaled by k^2/2
 * (k = |D|-1). Writing G for the Gram matrix of the difference vectors
 * m_j = p(v_j) - p(v_0), the gradient of det G with respect to p(v_i) is
 * 2 M adj(G) e_i, so the block at v_i is (k^2/k!^2) M adj(G) e_i and the
 * block at the base vertex is minus the sum of the others (translation
 * invariance). This is a polynomial in p, hence defined at degenerate
 * configurations, and equals the textbook entry
 * (p_i - p_i^D) Vol(p(D - v_i))^2 whenever the projection exists.
 */
template <FieldScalar F>
Matrix<F> rigidity_matrix(const Hypergraph& h, const Realisation<F>& p) {
    const int d = p.dim;
    const auto& verts = h.vertices();
    const auto& edges = h.edges();
    const std::size_t n = verts.size();

    Matrix<F> r(edges.size(), n * static_cast<std::size_t>(d));

    std::vector<std::string> row_labels, col_labels;
    row_labels.reserve(edges.size());
    col_labels.reserve(n * d);
    for (const auto& v : verts)
        for (int c = 0; c < d; ++c) col_labels.push_back(v + ":" + std::to_string(c));

    for (std::size_t row = 0; row < edges.size(); ++row) {
        const Edge& e = edges[row];
        row_labels.push_back(detail::edge_label(e));
        const int k = static_cast<int>(e.size()) - 1;
        if (k < 1) throw ArgumentError("rigidity_matrix: hyperedge of size < 2");

        std::vector<const std::vector<F>*> pts;
        pts.reserve(e.size());
        for (const auto& v : e) {
            const std::vector<F>& x = p.at(v);
            if (static_cast<int>(x.size()) != d)
                throw ArgumentError("rigidity_matrix: realisation dimension mismatch");
            pts.push_back(&x);
        }

        // M: d x k difference matrix; G = M^T M.
        Matrix<F> m(d, k), gram(k, k);
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < d; ++c) m(c, j) = (*pts[j + 1])[c] - (*pts[0])[c];
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                F s(0);
                for (int c = 0; c < d; ++c) s += m(c, i) * m(c, j);
                gram(i, j) = s;
            }
        const Matrix<F> adj = detail::adjugate(gram);

        const F kfact = factorial_in<F>(k);
        const F scale = F(k) * F(k) / (kfact * kfact);

        std::vector<F> base_block(d, F(0));
        for (int i = 1; i <= k; ++i) {
            const std::size_t vi = h.vertex_index(e[i]);
            for (int c = 0; c < d; ++c) {
                F s(0);
                for (int b = 0; b < k; ++b) s += m(c, b) * adj(b, i - 1);
                const F entry = scale * s;
                r(row, vi * d + c) = entry;
                base_block[c] -= entry;
            }
        }
        const std::size_t v0 = h.vertex_index(e[0]);
        for (int c = 0; c < d; ++c) r(row, v0 * d + c) = base_block[c];
    }

    r.set_row_labels(std::move(row_labels));
    r.set_col_labels(std::move(col_labels));
    return r;
}

/*
 * Spanning set of the trivial infinitesimal motions of p: d translations
 * followed by the C(d,2) elementary skew rotations v -> S p(v), pairs
 * (a,b) in lexicographic order. The span generally has dimension smaller
 * than d + C(d,2) when the points do not affinely span.
 */
template <FieldScalar F>
std::vector<std::vector<F>> trivial_motions(const Realisation<F>& p) {
    const int d = p.dim;
    const auto verts = p.vertex_order();
    const std::size_t n = verts.size();
    std::vector<std::vector<F>> motions;

    for (int c = 0; c < d; ++c) {
        std::vector<F> m(n * d, F(0));
        for (std::size_t vi = 0; vi < n; ++vi) m[vi * d + c] = F(1);
        motions.push_back(std::move(m));
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            std::vector<F> m(n * d, F(0));
            for (std::size_t vi = 0; vi < n; ++vi) {
                const std::vector<F>& x = p.at(verts[vi]);
                m[vi * d + a] = x[b];
                m[vi * d + b] = -x[a];
            }
            motions.push_back(std::move(m));
        }
    return motions;
}

// Exact dimension of the trivial motion space at p.
template <FieldScalar F>
int trivial_motion_dim(const Realisation<F>& p) {
    const auto motions = trivial_motions(p);
    if (motions.empty()) return 0;
    Matrix<F> m(motions.size(), motions[0].size());
    for (std::size_t i = 0; i < motions.size(); ++i)
        for (std::size_t j = 0; j < motions[i].size(); ++j) m(i, j) = motions[i][j];
    return static_cast<int>(rref(m).size());
}

struct RigidityReport {
    int rank = 0;
    int kernel_dim = 0;
    int trivial_dim = 0;
    int target_rank = 0;
    int dof = 0;
    std::string verdict; // "rigid" | "flexible-evidence" | "degenerate"
    RankCertificate certificate;
    std::string field;
    std::uint64_t seed = 0;
    int trials = 0;
    // Schwartz-Zippel style bound on the probability that a
    // flexible-evidence verdict misses a generically rigid hypergraph.
    // Artifact-level estimate from hyperedge-size degree bounds.
    double sz_bound = 0.0;

    bool rigid() const { return verdict == "rigid"; }
};

namespace detail {

inline double sz_failure_bound(const Hypergraph& h, int target_rank, int trials, double field_size) {
    // Entries in row D are polynomials of degree 2|D|-3 in the coordinates;
    // a target-rank minor has degree at most the sum of the largest
    // target_rank row degrees.
    std::vector<int> degs;
    degs.reserve(h.n_edges());
    for (const auto& e : h.edges()) degs.push_back(2 * static_cast<int>(e.size()) - 3);
    std::sort(degs.rbegin(), degs.rend());
    double total = 0;
    for (int i = 0; i < target_rank && i < static_cast<int>(degs.size()); ++i) total += degs[i];
    double per_trial = total / field_size;
    if (per_trial > 1.0) per_trial = 1.0;
    double bound = 1.0;
    for (int t = 0; t < trials; ++t) bound *= per_trial;
    return bound;
}

} // namespace detail

/*
 * Randomized certification of generic infinitesimal volume rigidity.
 * Hitting the target rank at one sampled point certifies the generic rank
 * (one-sided); falling short on every trial yields "flexible-evidence"
 * with a Schwartz-Zippel failure bound. Trial i samples at seed + i.
 */
template <FieldScalar F>
RigidityReport rigidity_report(const Hypergraph& h, int d, int trials, std::uint64_t seed) {
    if (d < 1) throw ArgumentError("rigidity_report: dimension must be positive");
    if (trials < 1) throw ArgumentError("rigidity_report: trials must be positive");
    RigidityReport rep;
    rep.field = FieldTraits<F>::name;
    rep.seed = seed;
    rep.trials = trials;

    const int n = static_cast<int>(h.n_vertices());
    const int cols = n * d;

    int best_rank = -1;
    Realisation<F> best_p;
    RankCertificate best_cert;
    std::uint64_t best_seed = seed;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        Realisation<F> p = random_realisation<F>(h.vertices(), d, trial_seed);
        Matrix<F> r = rigidity_matrix(h, p);
        RankCertificate cert = rank_of(r);
        cert.seed = trial_seed;
        if (cert.rank > best_rank) {
            best_rank = cert.rank;
            best_p = std::move(p);
            best_cert = std::move(cert);
            best_seed = trial_seed;
        }
    }

    rep.rank = best_rank;
    rep.kernel_dim = cols - best_rank;
    rep.trivial_dim = trivial_motion_dim(best_p);
    rep.dof = rep.kernel_dim - rep.trivial_dim;
    rep.certificate = best_cert;
    rep.certificate.seed = best_seed;

    if (n >= d + 1) {
        rep.target_rank = d * n - static_cast<int>(binomial(d + 1, 2));
    } else {
        // Points cannot affinely span R^d; use the exact trivial-motion
        // dimension at the sample in place of C(d+1,2).
        rep.target_rank = cols - rep.trivial_dim;
    }

    if (n < d) {
        rep.verdict = "degenerate";
    } else if (rep.rank == rep.target_rank) {
        rep.verdict = "rigid";
    } else {
        rep.verdict = "flexible-evidence";
        const double field_size = FieldTraits<F>::kind == FieldKind::prime
                                      ? static_cast<double>(Fp::modulus())
                                      : static_cast<double>(2 * kRationalCoordRange + 1);
        rep.sz_bound = detail::sz_failure_bound(h, rep.target_rank, trials, field_size);
    }
    return rep;
}

inline RigidityReport rigidity_report(const Hypergraph& h, int d, int trials, std::uint64_t seed,
                                      FieldKind field) {
    return field == FieldKind::rational ? rigidity_report<Rational>(h, d, trials, seed)
                                        : rigidity_report<Fp>(h, d, trials, seed);
}

// Degrees of freedom at the best sampled realisation.
inline int dof(const Hypergraph& h, int d, int trials, std::uint64_t seed,
               FieldKind field = FieldKind::prime) {
    return rigidity_report(h, d, trials, seed, field).dof;
}

struct KneserReport {
    int k = 0;
    int d = 0;              // d = k+1
    int rank_r = 0;         // rank of R(K_{k+2}^k, standard basis) over Q
    int target = 0;         // C(d+1,2)
    bool entrywise_match = false;
    bool det_nonzero = false;
    bool pass() const { return entrywise_match && det_nonzero && rank_r >= target; }
};

/*
 * Reproduces the rank argument for K_{k+2}^k at the standard-basis
 * realisation in R^{d+1}, d = k+1: scale rows by the common squared
 * volume (M1), rescale rows by -(k-1) and the (i,i) columns by 1/-(k-1)
 * (M2), delete the columns (h,i) with h >= i (M3), and compare M3 with
 * the Kneser graph K(d+1,2) adjacency matrix. Returns the comparison,
 * det M3 != 0, and the rank of the full rigidity matrix.
 */
KneserReport kneser_verification(int k);

} // namespace volrig

#endif
