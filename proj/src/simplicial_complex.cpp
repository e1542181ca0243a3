#include "volrig/simplicial_complex.hpp"

#include <algorithm>
#include <map>

#include "volrig/combinat.hpp"
#include "volrig/errors.hpp"

namespace volrig {

namespace {

constexpr std::size_t kFaceEnumerationCap = 1000000;

std::vector<Vertex> sorted_set(std::vector<Vertex> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // both sorted
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Drop faces contained in another face of the list; sort and deduplicate.
std::vector<std::vector<Vertex>> prune_to_facets(std::vector<std::vector<Vertex>> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (i == j) continue;
            if (faces[i].size() < faces[j].size() && subset_of(faces[i], faces[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(faces[i]);
    }
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Vertex>> facets) {
    for (auto& f : facets) {
        f = sorted_set(std::move(f));
        if (f.empty()) throw ArgumentError("SimplicialComplex: empty facet");
    }
    facets_ = prune_to_facets(std::move(facets));
    std::set<Vertex> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    vertices_.assign(vs.begin(), vs.end());
}

bool SimplicialComplex::is_face(const std::vector<Vertex>& x) const {
    const std::vector<Vertex> s = sorted_set(x);
    if (s.empty()) return !facets_.empty();
    for (const auto& f : facets_)
        if (subset_of(s, f)) return true;
    return false;
}

std::vector<std::vector<Vertex>> SimplicialComplex::faces_of_cardinality(std::size_t card) const {
    std::set<std::vector<Vertex>> faces;
    std::size_t budget = kFaceEnumerationCap;
    for (const auto& f : facets_) {
        if (f.size() < card) continue;
        const std::uint64_t count = binomial(static_cast<int>(f.size()), static_cast<int>(card));
        if (count > budget) throw SizeLimitError("faces_of_cardinality: enumeration exceeds size cap");
        budget -= static_cast<std::size_t>(count);
        for (const auto& idx : subsets_lex(static_cast<int>(f.size()), static_cast<int>(card))) {
            std::vector<Vertex> face;
            face.reserve(card);
            for (int i : idx) face.push_back(f[i]);
            faces.insert(std::move(face));
        }
    }
    return {faces.begin(), faces.end()};
}

Hypergraph SimplicialComplex::skeleton(int k) const {
    if (k < 1) throw ArgumentError("skeleton: k must be >= 1");
    auto faces = faces_of_cardinality(static_cast<std::size_t>(k) + 1);
    if (faces.empty())
        throw ArgumentError("skeleton: complex has no " + std::to_string(k) + "-faces");
    return Hypergraph(vertices_, std::move(faces), k + 1);
}

SimplicialComplex SimplicialComplex::link(const std::vector<Vertex>& x) const {
    const std::vector<Vertex> s = sorted_set(x);
    if (!is_face(s)) throw ArgumentError("link: X is not a face");
    std::vector<std::vector<Vertex>> lf;
    for (const auto& f : facets_) {
        if (!subset_of(s, f)) continue;
        std::vector<Vertex> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) lf.push_back(std::move(rest));
    }
    if (lf.empty()) throw ArgumentError("link: link of X is empty");
    return SimplicialComplex(std::move(lf));
}

SimplicialComplex SimplicialComplex::star(const std::vector<Vertex>& x) const {
    const std::vector<Vertex> s = sorted_set(x);
    if (!is_face(s)) throw ArgumentError("star: X is not a face");
    // Facets containing X absorb every face of L_X, but keep the union
    // form of the definition and prune.
    std::vector<std::vector<Vertex>> faces;
    for (const auto& f : facets_)
        if (subset_of(s, f)) faces.push_back(f);
    for (const auto& f : facets_) {
        if (!subset_of(s, f)) continue;
        std::vector<Vertex> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) faces.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::cone(const std::vector<Vertex>& z) const {
    const std::vector<Vertex> zs = sorted_set(z);
    if (zs.empty()) throw ArgumentError("cone: Z must be nonempty");
    for (const Vertex& v : zs)
        if (std::binary_search(vertices_.begin(), vertices_.end(), v))
            throw ArgumentError("cone: vertex '" + v + "' already in the complex");
    std::vector<std::vector<Vertex>> facets;
    facets.reserve(facets_.size());
    for (const auto& f : facets_) {
        std::vector<Vertex> g = f;
        g.insert(g.end(), zs.begin(), zs.end());
        facets.push_back(sorted_set(std::move(g)));
    }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex SimplicialComplex::contract(const Vertex& u, const Vertex& v) const {
    if (u == v) throw ArgumentError("contract: u and v must differ");
    const bool has_u = std::binary_search(vertices_.begin(), vertices_.end(), u);
    const bool has_v = std::binary_search(vertices_.begin(), vertices_.end(), v);
    if (!has_u || !has_v) throw ArgumentError("contract: vertex not in complex");
    std::vector<std::vector<Vertex>> facets;
    facets.reserve(facets_.size());
    for (const auto& f : facets_) {
        if (!std::binary_search(f.begin(), f.end(), u)) {
            facets.push_back(f);
            continue;
        }
        std::vector<Vertex> g;
        g.reserve(f.size());
        for (const Vertex& w : f) g.push_back(w == u ? v : w);
        facets.push_back(sorted_set(std::move(g)));
    }
    return SimplicialComplex(std::move(facets));
}

std::vector<std::string> SimplicialComplex::manifold_warnings() const {
    std::vector<std::string> warnings;
    if (facets_.empty()) return warnings;
    const std::size_t d1 = facets_.front().size();
    bool mixed = false;
    for (const auto& f : facets_)
        if (f.size() != d1) mixed = true;
    if (mixed) {
        warnings.push_back("facets have mixed cardinality");
        return warnings;
    }
    if (d1 < 2) return warnings;
    std::map<std::vector<Vertex>, int> ridge_count;
    for (const auto& f : facets_)
        for (const auto& idx : subsets_lex(static_cast<int>(d1), static_cast<int>(d1 - 1))) {
            std::vector<Vertex> r;
            for (int i : idx) r.push_back(f[i]);
            ++ridge_count[r];
        }
    for (const auto& [ridge, count] : ridge_count) {
        if (count == 2) continue;
        std::string label;
        for (const auto& v : ridge) label += (label.empty() ? "" : ",") + v;
        warnings.push_back("ridge {" + label + "} lies in " + std::to_string(count) + " facets");
    }
    return warnings;
}

namespace {

SimplicialComplex cross_polytope(int m) {
    if (m < 2) throw ArgumentError("cross-polytope: dimension must be >= 2");
    // vertices 2i-1, 2i form the i-th antipodal pair
    std::vector<std::vector<Vertex>> facets;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<Vertex> f;
        for (int i = 0; i < m; ++i)
            f.push_back(std::to_string(2 * i + 1 + ((mask >> i) & 1)));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex simplex_boundary(int d) {
    if (d < 1) throw ArgumentError("simplex-boundary: dimension must be >= 1");
    std::vector<std::vector<Vertex>> facets;
    for (const auto& idx : subsets_lex(d + 1, d)) {
        std::vector<Vertex> f;
        for (int i : idx) f.push_back(std::to_string(i + 1));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex bipyramid() {
    // equator {1,2,3}, apexes 4 and 5
    return SimplicialComplex({{"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"},
                              {"1", "2", "5"}, {"1", "3", "5"}, {"2", "3", "5"}});
}

SimplicialComplex icosahedron() {
    // two pentagonal caps (apexes 1 and 12) joined by an antiprism band
    static const int faces[20][3] = {
        {1, 2, 3},   {1, 3, 4},   {1, 4, 5},   {1, 5, 6},   {1, 6, 2},
        {12, 7, 8},  {12, 8, 9},  {12, 9, 10}, {12, 10, 11}, {12, 11, 7},
        {2, 3, 7},   {3, 4, 8},   {4, 5, 9},   {5, 6, 10},  {6, 2, 11},
        {7, 8, 3},   {8, 9, 4},   {9, 10, 5},  {10, 11, 6}, {11, 7, 2}};
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : faces)
        facets.push_back({std::to_string(f[0]), std::to_string(f[1]), std::to_string(f[2])});
    return SimplicialComplex(std::move(facets));
}

} // namespace

SimplicialComplex SimplicialComplex::preset(const std::string& name, int dim) {
    if (name == "simplex-boundary") return simplex_boundary(dim);
    if (name == "cross-polytope") return cross_polytope(dim);
    if (name == "octahedron") return cross_polytope(3);
    if (name == "sixteen-cell") return cross_polytope(4);
    if (name == "bipyramid") return bipyramid();
    if (name == "icosahedron") return icosahedron();
    throw ArgumentError("preset: unknown name '" + name + "'");
}

} // namespace volrig
