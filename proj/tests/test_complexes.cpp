#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "test_util.hpp"
#include "volrig/simplicial_complex.hpp"

using namespace volrig;

namespace {

// Independent face oracle for cones: T is a face of closure(S*Z) iff
// T minus Z is a face of S (or empty).
std::size_t cone_kface_count_oracle(const SimplicialComplex& s, const std::vector<Vertex>& z,
                                    int k) {
    std::vector<Vertex> all = s.vertices();
    all.insert(all.end(), z.begin(), z.end());
    std::sort(all.begin(), all.end());
    const std::set<Vertex> zset(z.begin(), z.end());
    std::size_t count = 0;
    for (const auto& idx : subsets_lex(static_cast<int>(all.size()), k + 1)) {
        std::vector<Vertex> rest;
        for (int i : idx)
            if (!zset.count(all[i])) rest.push_back(all[i]);
        if (rest.empty() || s.is_face(rest)) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("complete_uniform counts and errors") {
    const Hypergraph k42 = Hypergraph::complete_uniform(4, 2);
    CHECK(k42.n_edges() == 6);
    CHECK(k42.uniformity() == 2);

    CHECK(Hypergraph::complete_uniform(5, 3).n_edges() == 10);

    const Hypergraph k74 = Hypergraph::complete_uniform(7, 4);
    CHECK(k74.n_edges() == 35);
    // every 3-subset lies in exactly n-k = 4 hyperedges
    for (const auto& tri : subsets_lex(7, 3)) {
        std::size_t hits = 0;
        for (const auto& e : k74.edges()) {
            bool inside = true;
            for (int i : tri)
                if (!std::binary_search(e.begin(), e.end(), std::to_string(i + 1))) inside = false;
            if (inside) ++hits;
        }
        CHECK(hits == 4);
    }

    CHECK_THROWS_AS(Hypergraph::complete_uniform(3, 4), ArgumentError);
    CHECK_THROWS_AS(Hypergraph::complete_uniform(4, 1), ArgumentError);
}

TEST_CASE("hypergraph construction validates and canonicalizes") {
    Hypergraph h({"b", "a", "c"}, {{"c", "a"}, {"a", "c"}});
    CHECK(h.vertices() == std::vector<Vertex>{"a", "b", "c"});
    CHECK(h.n_edges() == 1); // deduplicated
    CHECK(h.edges()[0] == Edge{"a", "c"});
    CHECK_THROWS_AS(Hypergraph({"a"}, {{"a", "z"}}), ArgumentError);
    CHECK_THROWS_AS(Hypergraph({"a", "b", "c"}, {{"a", "b", "c"}}, 2), ArgumentError);
}

TEST_CASE("presets") {
    const SimplicialComplex bipyr = SimplicialComplex::preset("bipyramid");
    CHECK(bipyr.vertices().size() == 5);
    CHECK(bipyr.facets().size() == 6);

    const SimplicialComplex s3 = SimplicialComplex::preset("simplex-boundary", 3);
    CHECK(s3.vertices().size() == 4);
    CHECK(s3.facets().size() == 4);

    const SimplicialComplex cell16 = SimplicialComplex::preset("cross-polytope", 4);
    CHECK(cell16.vertices().size() == 8);
    CHECK(cell16.facets().size() == 16);
    // no facet contains an antipodal pair 2i-1, 2i
    for (const auto& f : cell16.facets())
        for (int i = 1; i <= 4; ++i) {
            const bool both = std::binary_search(f.begin(), f.end(), std::to_string(2 * i - 1)) &&
                              std::binary_search(f.begin(), f.end(), std::to_string(2 * i));
            CHECK_FALSE(both);
        }
    CHECK(SimplicialComplex::preset("sixteen-cell") == cell16);

    const SimplicialComplex ico = SimplicialComplex::preset("icosahedron");
    CHECK(ico.vertices().size() == 12);
    CHECK(ico.facets().size() == 20);
    CHECK(ico.skeleton(1).n_edges() == 30);
    CHECK(ico.manifold_warnings().empty());
    // every vertex has degree 5
    for (const auto& v : ico.vertices()) {
        std::size_t deg = 0;
        for (const auto& f : ico.facets())
            if (std::binary_search(f.begin(), f.end(), v)) ++deg;
        CHECK(deg == 5);
    }

    CHECK_THROWS_AS(SimplicialComplex::preset("dodecahedron"), ArgumentError);
}

TEST_CASE("skeleton") {
    const SimplicialComplex s3 = SimplicialComplex::preset("simplex-boundary", 3);
    CHECK(s3.skeleton(1) == Hypergraph::complete_uniform(4, 2));

    const SimplicialComplex octa = SimplicialComplex::preset("octahedron");
    CHECK(octa.skeleton(2).n_edges() == 8);

    // cone over the bipyramid with two fresh vertices: 3-face count by
    // independent closure enumeration
    const SimplicialComplex bipyr = SimplicialComplex::preset("bipyramid");
    const SimplicialComplex coned = bipyr.cone({"6", "7"});
    const Hypergraph h3 = coned.skeleton(3);
    CHECK(h3.n_edges() == cone_kface_count_oracle(bipyr, {"6", "7"}, 3));
    CHECK(h3.n_edges() == 21);

    CHECK_THROWS_AS(octa.skeleton(3), ArgumentError);
    CHECK_THROWS_AS(octa.skeleton(0), ArgumentError);
}

TEST_CASE("link") {
    const SimplicialComplex s3 = SimplicialComplex::preset("simplex-boundary", 3);
    const SimplicialComplex l = s3.link({"1"});
    CHECK(l.facets() == std::vector<std::vector<Vertex>>{{"2", "3"}, {"2", "4"}, {"3", "4"}});

    const SimplicialComplex octa = SimplicialComplex::preset("octahedron");
    const SimplicialComplex lv = octa.link({"1"});
    CHECK(lv.vertices().size() == 4);
    CHECK(lv.facets().size() == 4);
    for (const auto& f : lv.facets()) CHECK(f.size() == 2); // a 4-cycle

    // link of a vertex of the 16-cell is an octahedron
    const SimplicialComplex cell16 = SimplicialComplex::preset("sixteen-cell");
    const SimplicialComplex lk = cell16.link({"1"});
    CHECK(lk.vertices().size() == 6);
    CHECK(lk.facets().size() == 8);
    std::size_t non_adjacent_pairs = 0;
    for (std::size_t i = 0; i < lk.vertices().size(); ++i)
        for (std::size_t j = i + 1; j < lk.vertices().size(); ++j)
            if (!lk.is_face({lk.vertices()[i], lk.vertices()[j]})) ++non_adjacent_pairs;
    CHECK(non_adjacent_pairs == 3); // three antipodal pairs

    CHECK_THROWS_AS(octa.link({"1", "2"}), ArgumentError); // antipodal, not a face
}

TEST_CASE("star") {
    const SimplicialComplex s3 = SimplicialComplex::preset("simplex-boundary", 3);
    const SimplicialComplex st = s3.star({"1"});
    CHECK(st.facets() ==
          std::vector<std::vector<Vertex>>{{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}});

    const SimplicialComplex octa = SimplicialComplex::preset("octahedron");
    CHECK(octa.star({"1"}).facets().size() == 4);

    const SimplicialComplex cell16 = SimplicialComplex::preset("sixteen-cell");
    CHECK(cell16.star({"1"}).facets().size() == 8);

    // St_X = L_X union {faces containing X}, checked by full closure
    // enumeration at desk scale
    for (std::size_t card = 1; card <= 3; ++card) {
        const auto star_faces = octa.star({"1"}).faces_of_cardinality(card);
        std::set<std::vector<Vertex>> expected;
        if (card <= 2)
            for (const auto& f : octa.link({"1"}).faces_of_cardinality(card)) expected.insert(f);
        for (const auto& f : octa.faces_of_cardinality(card))
            if (std::binary_search(f.begin(), f.end(), Vertex("1"))) expected.insert(f);
        CHECK(std::set<std::vector<Vertex>>(star_faces.begin(), star_faces.end()) == expected);
    }
}

TEST_CASE("cone") {
    const SimplicialComplex tri = SimplicialComplex::preset("simplex-boundary", 2);
    const SimplicialComplex c = tri.cone({"z"});
    CHECK(c.facets().size() == 3);
    for (const auto& f : c.facets()) {
        CHECK(f.size() == 3);
        CHECK(std::binary_search(f.begin(), f.end(), Vertex("z")));
    }

    const SimplicialComplex bipyr = SimplicialComplex::preset("bipyramid");
    const SimplicialComplex bc = bipyr.cone({"6", "7"});
    CHECK(bc.facets().size() == 6);
    for (const auto& f : bc.facets()) CHECK(f.size() == 5);

    CHECK(SimplicialComplex::preset("octahedron").cone({"z"}).facets().size() == 8);

    CHECK_THROWS_AS(bipyr.cone({"1"}), ArgumentError);
    CHECK_THROWS_AS(bipyr.cone(std::vector<Vertex>{}), ArgumentError);
}

TEST_CASE("hypergraph contract") {
    const Hypergraph k4 = Hypergraph::complete_uniform(4, 2);
    const Hypergraph k3 = k4.contract("1", "2");
    CHECK(k3.n_vertices() == 3);
    CHECK(k3.n_edges() == 3);

    // octahedron 2-skeleton contracted along an edge: 6 triangles on 5 vertices
    const Hypergraph octa2 = SimplicialComplex::preset("octahedron").skeleton(2);
    const Hypergraph contracted = octa2.contract("1", "3");
    CHECK(contracted.n_vertices() == 5);
    CHECK(contracted.n_edges() == 6);

    // duplicates are removed when D-u+v already exists
    Hypergraph dup({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    const Hypergraph dc = dup.contract("1", "3");
    CHECK(dc.n_edges() == 1);

    CHECK_THROWS_AS(k4.contract("1", "1"), ArgumentError);
    CHECK_THROWS_AS(k4.contract("1", "9"), ArgumentError);
}

TEST_CASE("complex contract and the cone identity") {
    const SimplicialComplex octa = SimplicialComplex::preset("octahedron");
    const SimplicialComplex contracted = octa.contract("1", "3");
    CHECK(contracted.vertices().size() == 5);
    CHECK(contracted.facets().size() == 6);
    CHECK(contracted.manifold_warnings().empty()); // a triangular bipyramid

    CHECK_THROWS_AS(octa.contract("1", "99"), ArgumentError);

    // (S*z)/uv = (S/uv)*z, facet for facet
    const SimplicialComplex lhs = octa.cone({"z"}).contract("1", "3");
    const SimplicialComplex rhs = octa.contract("1", "3").cone({"z"});
    CHECK(lhs == rhs);
}

TEST_CASE("skeleton commutes with contraction") {
    struct Case {
        SimplicialComplex s;
        Vertex u, v;
    };
    std::vector<Case> cases;
    cases.push_back({SimplicialComplex::preset("octahedron"), "1", "3"});
    cases.push_back({SimplicialComplex::preset("bipyramid"), "1", "4"});
    cases.push_back({SimplicialComplex::preset("sixteen-cell"), "1", "3"});
    cases.push_back({SimplicialComplex::preset("simplex-boundary", 4), "1", "2"});
    cases.push_back({SimplicialComplex::preset("icosahedron"), "2", "3"});

    // random small complexes
    Rng rng(97);
    for (int it = 0; it < 25; ++it) {
        const int n = 5 + static_cast<int>(rng.below(3));
        std::vector<std::vector<Vertex>> facets;
        const int nf = 3 + static_cast<int>(rng.below(4));
        for (int f = 0; f < nf; ++f) {
            const int size = 3 + static_cast<int>(rng.below(2));
            std::set<Vertex> fs;
            while (static_cast<int>(fs.size()) < size)
                fs.insert(std::to_string(1 + rng.below(n)));
            facets.emplace_back(fs.begin(), fs.end());
        }
        SimplicialComplex s(facets);
        if (s.vertices().size() < 2) continue;
        const Vertex u = s.vertices()[rng.below(s.vertices().size())];
        Vertex v = u;
        while (v == u) v = s.vertices()[rng.below(s.vertices().size())];
        cases.push_back({std::move(s), u, v});
    }

    for (const auto& c : cases) {
        const SimplicialComplex sc = c.s.contract(c.u, c.v);
        for (int k = 1; k <= 4; ++k) {
            bool lhs_ok = true, rhs_ok = true;
            Hypergraph lhs, rhs;
            try {
                lhs = sc.skeleton(k);
            } catch (const ArgumentError&) {
                lhs_ok = false;
            }
            try {
                rhs = c.s.skeleton(k).contract(c.u, c.v);
            } catch (const ArgumentError&) {
                rhs_ok = false;
            }
            if (!lhs_ok || !rhs_ok) continue;
            CHECK(lhs.edges() == rhs.edges());
        }
    }
}

TEST_CASE("strong components") {
    const Hypergraph k53 = Hypergraph::complete_uniform(5, 3);
    CHECK(k53.strong_components().blocks.size() == 1);

    // two disjoint K_4^3 copies
    std::vector<Edge> edges;
    for (const auto& idx : subsets_lex(4, 3)) {
        Edge a, b;
        for (int i : idx) {
            a.push_back("a" + std::to_string(i));
            b.push_back("b" + std::to_string(i));
        }
        edges.push_back(a);
        edges.push_back(b);
    }
    std::vector<Vertex> verts;
    for (int i = 0; i < 4; ++i) {
        verts.push_back("a" + std::to_string(i));
        verts.push_back("b" + std::to_string(i));
    }
    const Hypergraph two(verts, edges, 3);
    const ComponentPartition parts = two.strong_components();
    CHECK(parts.blocks.size() == 2);

    // sharing one vertex is not enough: overlap 1 < k-1 = 2
    std::vector<Edge> shared_edges;
    std::vector<Vertex> shared_verts{"s"};
    for (int i = 1; i < 4; ++i) {
        shared_verts.push_back("a" + std::to_string(i));
        shared_verts.push_back("b" + std::to_string(i));
    }
    for (const auto& idx : subsets_lex(4, 3)) {
        Edge a, b;
        for (int i : idx) {
            a.push_back(i == 0 ? "s" : "a" + std::to_string(i));
            b.push_back(i == 0 ? "s" : "b" + std::to_string(i));
        }
        shared_edges.push_back(a);
        shared_edges.push_back(b);
    }
    const Hypergraph shared(shared_verts, shared_edges, 3);
    CHECK(shared.strong_components().blocks.size() == 2);

    // partition sanity: blocks cover all edges, and no cross-block pair
    // has overlap k-1
    for (const auto& h : {k53, two, shared}) {
        const auto p = h.strong_components();
        std::size_t covered = 0;
        for (const auto& b : p.blocks) covered += b.size();
        CHECK(covered == h.n_edges());
        for (std::size_t bi = 0; bi < p.blocks.size(); ++bi)
            for (std::size_t bj = bi + 1; bj < p.blocks.size(); ++bj)
                for (std::size_t ei : p.blocks[bi])
                    for (std::size_t ej : p.blocks[bj]) {
                        const Edge& a = h.edges()[ei];
                        const Edge& b = h.edges()[ej];
                        std::vector<Vertex> inter;
                        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                              std::back_inserter(inter));
                        CHECK(inter.size() != a.size() - 1);
                    }
    }

    Hypergraph mixed({"1", "2", "3"}, {{"1", "2"}, {"1", "2", "3"}});
    CHECK_THROWS_AS(mixed.strong_components(), ArgumentError);
}

TEST_CASE("contains_complete") {
    const Hypergraph k53 = Hypergraph::complete_uniform(5, 3);
    const auto blocks = k53.strong_components().blocks;
    REQUIRE(blocks.size() == 1);
    CHECK(k53.contains_complete(blocks[0]));

    Hypergraph single({"1", "2", "3"}, {{"1", "2", "3"}}, 3);
    CHECK_FALSE(single.contains_complete(single.strong_components().blocks[0]));

    // H_w from the induction on complete hypergraphs: all (k-1)-subsets of
    // [d], here k=3, d=5 -> K_5^2
    const Hypergraph hw = Hypergraph::complete_uniform(5, 2);
    for (const auto& b : hw.strong_components().blocks) CHECK(hw.contains_complete(b));
}

TEST_CASE("manifold advisory warnings") {
    CHECK(SimplicialComplex::preset("octahedron").manifold_warnings().empty());
    CHECK(SimplicialComplex::preset("sixteen-cell").manifold_warnings().empty());

    // drop one facet: its ridges now lie in a single facet
    auto facets = SimplicialComplex::preset("octahedron").facets();
    facets.pop_back();
    const SimplicialComplex holey(facets);
    CHECK_FALSE(holey.manifold_warnings().empty());

    const SimplicialComplex mixed({{"1", "2", "3"}, {"3", "4"}});
    CHECK(mixed.manifold_warnings() == std::vector<std::string>{"facets have mixed cardinality"});
}

TEST_CASE("faces and is_face") {
    const SimplicialComplex octa = SimplicialComplex::preset("octahedron");
    CHECK(octa.is_face({"1"}));
    CHECK(octa.is_face({"1", "3"}));
    CHECK_FALSE(octa.is_face({"1", "2"})); // antipodal
    CHECK(octa.is_face({}));
    CHECK(octa.faces_of_cardinality(2).size() == 12);
    CHECK(octa.faces_of_cardinality(1).size() == 6);
    CHECK(octa.faces_of_cardinality(4).empty());
}
