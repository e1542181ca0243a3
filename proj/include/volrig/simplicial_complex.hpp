#ifndef VOLRIG_SIMPLICIAL_COMPLEX_HPP
#define VOLRIG_SIMPLICIAL_COMPLEX_HPP

#include <set>
#include <string>
#include <vector>

#include "volrig/hypergraph.hpp"

namespace volrig {

/*
 * Abstract simplicial complex stored by its facets (maximal faces). The
 * closure under inclusion is implicit; face queries enumerate subsets of
 * facets on demand under an explicit size guard.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<std::vector<Vertex>> facets);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::vector<Vertex>>& facets() const { return facets_; }

    bool is_face(const std::vector<Vertex>& x) const; // x need not be sorted

    // All faces with `card` vertices, sorted, deduplicated.
    std::vector<std::vector<Vertex>> faces_of_cardinality(std::size_t card) const;

    // (k+1)-uniform hypergraph of the k-faces; k >= 1 and at least one
    // k-face must exist.
    Hypergraph skeleton(int k) const;

    SimplicialComplex link(const std::vector<Vertex>& x) const;
    SimplicialComplex star(const std::vector<Vertex>& x) const;

    // Simplicial cone S * Z with a fresh vertex set Z.
    SimplicialComplex cone(const std::vector<Vertex>& z) const;

    // Edge contraction at the facet level; commutes with skeleton().
    SimplicialComplex contract(const Vertex& u, const Vertex& v) const;

    // Advisory only: facets of mixed cardinality and ridges lying in != 2
    // facets, reported as human-readable warnings. Never an error; the
    // library does not verify manifoldness.
    std::vector<std::string> manifold_warnings() const;

    // Named generators: "simplex-boundary" (dim d), "cross-polytope"
    // (dim m), "octahedron", "sixteen-cell", "bipyramid", "icosahedron".
    static SimplicialComplex preset(const std::string& name, int dim = 0);

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Vertex>> facets_;
};

} // namespace volrig

#endif
