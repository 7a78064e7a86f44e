#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pack8/canon.hpp"
#include "pack8/covers.hpp"
#include "pack8/gamma0.hpp"
#include "pack8/graph.hpp"
#include "pack8/planarity.hpp"

using namespace pack8;

TEST_CASE("a base with m edges has 2^m double covers") {
    Graph k4 = complete_graph(4);
    CHECK(enumerate_double_covers(k4).size() == 64);
    Graph c5 = cycle_graph(5);
    CHECK(enumerate_double_covers(c5).size() == 32);
}

TEST_CASE("the all-parallel lift is two disjoint copies of the base") {
    Graph base = complete_graph(4);
    DoubleCover c = lift(base, 0);
    CHECK(!c.graph.is_connected());
    CHECK(c.graph.edge_count() == 2 * base.edge_count());
    Graph first = c.graph.induced(0x0fu);
    CHECK(are_isomorphic(first, base));
}

TEST_CASE("quotient of every lift recovers the base") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph base(n);
        // random connected base
        for (int v = 1; v < n; ++v) base.add_edge(v, static_cast<int>(rng() % v));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!base.has_edge(u, v) && rng() % 3 == 0) base.add_edge(u, v);
        int m = base.edge_count();
        std::uint32_t signs = static_cast<std::uint32_t>(rng()) & ((1u << m) - 1);
        DoubleCover c = lift(base, signs);
        CHECK(quotient(c) == base);
        // The involution is an automorphism of the cover.
        Graph mapped = c.graph.relabeled(c.involution);
        CHECK(mapped == c.graph);
    }
}

TEST_CASE("connected non-isomorphic double covers of K4") {
    // Oracle: enumerate all 2^6 covers, keep connected, dedup by canonical
    // form.
    std::set<CanonicalForm> classes;
    for (const DoubleCover& c : enumerate_double_covers(complete_graph(4))) {
        if (!c.graph.is_connected()) continue;
        classes.insert(canonical_form(c.graph));
    }
    CHECK(classes.size() == 2);
    // The cube is one of them: Q3 double-covers K4.
    CHECK(classes.count(canonical_form(cube_graph())) == 1);
}

TEST_CASE("antipodal girth: cube as double cover of K4 fails") {
    Graph q3 = cube_graph();
    std::vector<int> inv(8);
    for (int v = 0; v < 8; ++v) inv[v] = v ^ 7;  // antipodal = bit complement
    // Verify the pairing is an automorphism and the distance is 3.
    CHECK(q3.relabeled(inv) == q3);
    CHECK(q3.bfs_distance(0, 7) == 3);
    CHECK(!antipodal_girth_ok(q3, inv));
}

TEST_CASE("antipodal girth: icosahedron fails the n=8 threshold") {
    Graph ico = icosahedron_graph();
    std::vector<int> inv(12);
    for (int v = 0; v < 12; ++v) inv[v] = (v + 6) % 12;
    CHECK(ico.relabeled(inv) == ico);
    CHECK(ico.bfs_distance(0, 6) == 3);
    CHECK(!antipodal_girth_ok(ico, inv));
}

TEST_CASE("antipodal girth: adjacent pair fails immediately") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(0, 1);
    std::vector<int> inv{2, 3, 0, 1};
    CHECK(!antipodal_girth_ok(g, inv));
}

TEST_CASE("switching reduction produces the same Gamma1 classes as full enumeration") {
    // Small bases: every connected graph on 4..5 vertices with min degree 2.
    std::vector<Graph> bases;
    for (int order = 4; order <= 5; ++order)
        for (const Graph& g : all_graphs_max_degree(order, 5))
            if (g.is_connected() && g.min_degree() >= 2) bases.push_back(g);
    REQUIRE(bases.size() > 5);
    Gamma1Options full, reduced;
    full.switching_reduction = false;
    reduced.switching_reduction = true;
    auto a = build_gamma1(bases, full);
    auto b = build_gamma1(bases, reduced);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(canonical_form(a[i].graph) == canonical_form(b[i].graph));
        CHECK(paired_canonical_form(a[i].graph, a[i].involution) ==
              paired_canonical_form(b[i].graph, b[i].involution));
    }
}

TEST_CASE("gamma1 members pass their own filters and dedup is label-independent") {
    std::vector<Graph> bases;
    for (const Graph& g : all_graphs_max_degree(5, 5))
        if (g.is_connected() && g.min_degree() >= 2) bases.push_back(g);
    auto out = build_gamma1(bases);
    for (const auto& mem : out) {
        CHECK(mem.graph.is_connected());
        CHECK(is_planar(mem.graph));
        CHECK(antipodal_girth_ok(mem.graph, mem.involution));
        CHECK(!has_wheel_subgraph(mem.graph));
        CHECK(quotient({mem.graph, mem.involution, Graph(mem.base_order)}).order() ==
              mem.base_order);
    }
    // Shuffling input labels must not change the output key set.
    std::mt19937_64 rng(31);
    std::vector<Graph> shuffled;
    for (const Graph& g : bases) {
        std::vector<int> p(g.order());
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        shuffled.push_back(g.relabeled(p));
    }
    auto out2 = build_gamma1(shuffled);
    REQUIRE(out2.size() == out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        CHECK(canonical_form(out[i].graph) == canonical_form(out2[i].graph));
}
