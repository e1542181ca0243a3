#ifndef VOLRIG_HYPERGRAPH_HPP
#define VOLRIG_HYPERGRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace volrig {

using Vertex = std::string;
using Edge = std::vector<Vertex>; // kept sorted

// Partition of the hyperedge index set into strongly connected components.
struct ComponentPartition {
    std::vector<std::vector<std::size_t>> blocks;
};

/*
 * Hypergraph H = (V, E). Vertices are opaque strings ordered
 * lexicographically; hyperedges are vertex sets, stored sorted and
 * deduplicated so serialization is canonical.
 *
 * Hyperedges of size 1 are tolerated by the container (the coning
 * machinery produces them via H_w when k = 2); the rigidity matrix has its
 * own size >= 2 precondition.
 */
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
               std::optional<int> uniformity = std::nullopt);

    // Complete k-uniform hypergraph on n vertices named "1".."n".
    static Hypergraph complete_uniform(int n, int k);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> uniformity() const { return uniformity_; }

    std::size_t n_vertices() const { return vertices_.size(); }
    std::size_t n_edges() const { return edges_.size(); }

    bool has_vertex(const Vertex& v) const;
    std::size_t vertex_index(const Vertex& v) const; // throws on unknown vertex
    bool has_edge(const Edge& e) const;              // e need not be sorted

    // Contract u onto v: drop hyperedges containing both, redirect u to v
    // elsewhere, deduplicate.
    Hypergraph contract(const Vertex& u, const Vertex& v) const;

    // Strongly connected components via (k-1)-overlap adjacency closure.
    ComponentPartition strong_components() const;

    // Whether the given component block contains a copy of K_{k+1}^k.
    bool contains_complete(const std::vector<std::size_t>& block) const;

    // Sub-hypergraph induced on a vertex subset (edges fully inside it).
    Hypergraph induced(const std::set<Vertex>& verts) const;

    Hypergraph union_with(const Hypergraph& other) const;

    // True when every edge of `part` is an edge of *this.
    bool contains_subhypergraph(const Hypergraph& part) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    // Effective uniformity: declared or inferred; throws when edges are mixed-size.
    int require_uniformity(const char* who) const;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::optional<int> uniformity_;
};

} // namespace volrig

#endif
