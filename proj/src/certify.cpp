#include "volrig/certify.hpp"

#include <set>

namespace volrig {

bool glue_plan(const Hypergraph& h, const std::vector<Hypergraph>& parts, int d) {
    if (parts.empty()) throw ArgumentError("glue_plan: no parts given");

    std::set<Edge> covered;
    for (const Hypergraph& part : parts) {
        if (!h.contains_subhypergraph(part))
            throw ArgumentError("glue_plan: a part has a hyperedge outside H");
        covered.insert(part.edges().begin(), part.edges().end());
    }
    for (const Edge& e : h.edges())
        if (!covered.count(e))
            throw ArgumentError("glue_plan: parts do not cover all hyperedges of H");

    std::vector<std::set<Vertex>> blocks;
    blocks.reserve(parts.size());
    for (const Hypergraph& part : parts)
        blocks.emplace_back(part.vertices().begin(), part.vertices().end());

    auto overlap = [](const std::set<Vertex>& a, const std::set<Vertex>& b) {
        std::size_t n = 0;
        for (const Vertex& v : a) n += b.count(v);
        return n;
    };

    while (blocks.size() > 1) {
        std::size_t bi = 0, bj = 1, best = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                const std::size_t o = overlap(blocks[i], blocks[j]);
                if (o > best) { best = o; bi = i; bj = j; }
            }
        if (best < static_cast<std::size_t>(d)) return false;
        blocks[bi].insert(blocks[bj].begin(), blocks[bj].end());
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return true;
}

} // namespace volrig
