#ifndef VOLRIG_REALISATION_HPP
#define VOLRIG_REALISATION_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "volrig/linalg.hpp"

namespace volrig {

// Exact map from vertices to coordinate vectors in F^dim.
template <FieldScalar F>
struct Realisation {
    int dim = 0;
    std::map<std::string, std::vector<F>> coords;

    const std::vector<F>& at(const std::string& v) const {
        auto it = coords.find(v);
        if (it == coords.end()) throw ArgumentError("Realisation: no coordinates for vertex '" + v + "'");
        if (static_cast<int>(it->second.size()) != dim)
            throw DimensionError("Realisation: vertex '" + v + "' has wrong dimension");
        return it->second;
    }

    std::vector<std::string> vertex_order() const {
        std::vector<std::string> vs;
        vs.reserve(coords.size());
        for (const auto& [v, _] : coords) vs.push_back(v);
        return vs;
    }

};

// Dimension of the affine hull of the realised points.
template <FieldScalar F>
int affine_hull_dim(const Realisation<F>& p) {
    if (p.coords.empty()) return -1;
    const auto verts = p.vertex_order();
    Matrix<F> diff(verts.size() - 1, p.dim);
    const std::vector<F>& base = p.at(verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const std::vector<F>& q = p.at(verts[i]);
        for (int c = 0; c < p.dim; ++c) diff(i - 1, c) = q[c] - base[c];
    }
    Matrix<F> r = diff;
    return static_cast<int>(rref(r).size());
}

/*
 * Deterministic RNG used for all sampling. mt19937_64 has a fully
 * specified output sequence, and the range reductions below use rejection
 * sampling, so coordinates are reproducible across platforms for a fixed
 * seed. Derived seeds are plain arithmetic: trial i uses seed + i.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do { r = gen_(); } while (r >= limit);
        return r % n;
    }

    // Uniform integer in [lo, hi].
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

inline constexpr long long kRationalCoordRange = 1000000; // coordinates in [-10^6, 10^6]

inline Realisation<Rational> random_realisation_rational(const std::vector<std::string>& vertices,
                                                         int d, std::uint64_t seed) {
    Rng rng(seed);
    Realisation<Rational> p;
    p.dim = d;
    // iterate in sorted order so the draw sequence is canonical
    std::map<std::string, std::vector<Rational>> coords;
    for (const auto& v : std::set<std::string>(vertices.begin(), vertices.end())) {
        std::vector<Rational> x;
        x.reserve(d);
        for (int c = 0; c < d; ++c)
            x.emplace_back(rng.int_in(-kRationalCoordRange, kRationalCoordRange));
        coords.emplace(v, std::move(x));
    }
    p.coords = std::move(coords);
    return p;
}

inline Realisation<Fp> random_realisation_prime(const std::vector<std::string>& vertices,
                                                int d, std::uint64_t seed) {
    Rng rng(seed);
    Realisation<Fp> p;
    p.dim = d;
    std::map<std::string, std::vector<Fp>> coords;
    for (const auto& v : std::set<std::string>(vertices.begin(), vertices.end())) {
        std::vector<Fp> x;
        x.reserve(d);
        for (int c = 0; c < d; ++c) x.push_back(Fp::from_residue(rng.below(Fp::modulus())));
        coords.emplace(v, std::move(x));
    }
    p.coords = std::move(coords);
    return p;
}

template <FieldScalar F>
Realisation<F> random_realisation(const std::vector<std::string>& vertices, int d, std::uint64_t seed);

template <>
inline Realisation<Rational> random_realisation<Rational>(const std::vector<std::string>& vertices,
                                                          int d, std::uint64_t seed) {
    return random_realisation_rational(vertices, d, seed);
}

template <>
inline Realisation<Fp> random_realisation<Fp>(const std::vector<std::string>& vertices,
                                              int d, std::uint64_t seed) {
    return random_realisation_prime(vertices, d, seed);
}

} // namespace volrig

#endif
