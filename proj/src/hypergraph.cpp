#include "volrig/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "volrig/combinat.hpp"
#include "volrig/errors.hpp"

namespace volrig {

namespace {

Edge sorted_unique(Edge e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

std::size_t overlap(const Edge& a, const Edge& b) {
    // both sorted
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++n; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return n;
}

} // namespace

Hypergraph::Hypergraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::optional<int> uniformity)
    : uniformity_(uniformity) {
    vertices_ = std::move(vertices);
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    edges_.reserve(edges.size());
    for (Edge& e : edges) {
        Edge s = sorted_unique(std::move(e));
        if (s.empty()) throw ArgumentError("Hypergraph: empty hyperedge");
        for (const Vertex& v : s)
            if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                throw ArgumentError("Hypergraph: hyperedge uses unknown vertex '" + v + "'");
        if (uniformity_ && static_cast<int>(s.size()) != *uniformity_)
            throw ArgumentError("Hypergraph: hyperedge size " + std::to_string(s.size()) +
                                " violates declared uniformity " + std::to_string(*uniformity_));
        edges_.push_back(std::move(s));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::complete_uniform(int n, int k) {
    if (k < 2 || k > n)
        throw ArgumentError("complete_uniform: need 2 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    std::vector<Vertex> verts;
    verts.reserve(n);
    for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<Edge> edges;
    for (const auto& idx : subsets_lex(n, k)) {
        Edge e;
        e.reserve(k);
        for (int i : idx) e.push_back(verts[i]);
        edges.push_back(std::move(e));
    }
    return Hypergraph(std::move(verts), std::move(edges), k);
}

bool Hypergraph::has_vertex(const Vertex& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Hypergraph::vertex_index(const Vertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw ArgumentError("Hypergraph: unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Hypergraph::has_edge(const Edge& e) const {
    Edge s = sorted_unique(e);
    return std::binary_search(edges_.begin(), edges_.end(), s);
}

Hypergraph Hypergraph::contract(const Vertex& u, const Vertex& v) const {
    if (u == v) throw ArgumentError("contract: u and v must differ");
    if (!has_vertex(u) || !has_vertex(v))
        throw ArgumentError("contract: vertex not in hypergraph");

    std::vector<Vertex> verts;
    for (const Vertex& w : vertices_)
        if (w != u) verts.push_back(w);

    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        const bool has_u = std::binary_search(e.begin(), e.end(), u);
        const bool has_v = std::binary_search(e.begin(), e.end(), v);
        if (has_u && has_v) continue; // deleted by contraction
        if (!has_u) {
            edges.push_back(e);
            continue;
        }
        Edge f;
        f.reserve(e.size());
        for (const Vertex& w : e) f.push_back(w == u ? v : w);
        edges.push_back(sorted_unique(std::move(f)));
    }
    return Hypergraph(std::move(verts), std::move(edges), uniformity_);
}

int Hypergraph::require_uniformity(const char* who) const {
    if (uniformity_) return *uniformity_;
    if (edges_.empty()) throw ArgumentError(std::string(who) + ": hypergraph has no edges");
    const std::size_t k = edges_.front().size();
    for (const Edge& e : edges_)
        if (e.size() != k)
            throw ArgumentError(std::string(who) + ": hypergraph is not uniform");
    return static_cast<int>(k);
}

ComponentPartition Hypergraph::strong_components() const {
    const int k = require_uniformity("strong_components");
    const std::size_t m = edges_.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (overlap(edges_[i], edges_[j]) == static_cast<std::size_t>(k - 1)) {
                std::size_t a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);
    ComponentPartition part;
    for (auto& [root, members] : groups) part.blocks.push_back(std::move(members));
    return part;
}

bool Hypergraph::contains_complete(const std::vector<std::size_t>& block) const {
    const int k = require_uniformity("contains_complete");
    std::set<Edge> block_edges;
    std::set<Vertex> support_set;
    for (std::size_t i : block) {
        if (i >= edges_.size()) throw ArgumentError("contains_complete: edge index out of range");
        block_edges.insert(edges_[i]);
        support_set.insert(edges_[i].begin(), edges_[i].end());
    }
    std::vector<Vertex> support(support_set.begin(), support_set.end());
    const int n = static_cast<int>(support.size());
    if (n < k + 1) return false;
    if (binomial(n, k + 1) > 1000000)
        throw SizeLimitError("contains_complete: candidate enumeration exceeds size cap");
    for (const auto& idx : subsets_lex(n, k + 1)) {
        bool all_in = true;
        for (const auto& sub : subsets_lex(k + 1, k)) {
            Edge e;
            e.reserve(k);
            for (int s : sub) e.push_back(support[idx[s]]);
            if (!block_edges.count(e)) { all_in = false; break; }
        }
        if (all_in) return true;
    }
    return false;
}

Hypergraph Hypergraph::induced(const std::set<Vertex>& verts) const {
    std::vector<Vertex> vs;
    for (const Vertex& v : vertices_)
        if (verts.count(v)) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        bool inside = true;
        for (const Vertex& v : e)
            if (!verts.count(v)) { inside = false; break; }
        if (inside) es.push_back(e);
    }
    return Hypergraph(std::move(vs), std::move(es), uniformity_);
}

Hypergraph Hypergraph::union_with(const Hypergraph& other) const {
    std::vector<Vertex> vs = vertices_;
    vs.insert(vs.end(), other.vertices_.begin(), other.vertices_.end());
    std::vector<Edge> es = edges_;
    es.insert(es.end(), other.edges_.begin(), other.edges_.end());
    std::optional<int> unif;
    if (uniformity_ && other.uniformity_ && *uniformity_ == *other.uniformity_) unif = uniformity_;
    return Hypergraph(std::move(vs), std::move(es), unif);
}

bool Hypergraph::contains_subhypergraph(const Hypergraph& part) const {
    for (const Edge& e : part.edges())
        if (!std::binary_search(edges_.begin(), edges_.end(), e)) return false;
    return true;
}

} // namespace volrig
