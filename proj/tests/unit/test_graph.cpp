#include <doctest.h>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "holonomy/bfs.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/graph.hpp"

using namespace holonomy;
using namespace holonomy::testing;

namespace {

// All-pairs distances by Floyd-Warshall, for small graphs only.
std::vector<std::vector<Distance>> floyd(const ColoredGraph& g) {
    const std::size_t n = g.vertex_count();
    const Distance inf = kUnreached / 2;
    std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, inf));
    for (VertexId v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Color c : kColors)
            if (g.has_edge(v, c)) d[v][g.neighbor(v, c)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = kUnreached;
    return d;
}

ColoredGraph without_edge(const ColoredGraph& g, VertexId u, Color drop) {
    ColoredGraph h(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Color c : kColors) {
            const VertexId w = g.neighbor(v, c);
            if (w != kNoVertex && v < w && !(c == drop && (v == u || w == u))) h.add_edge(v, w, c);
        }
    return h;
}

// Shortest cycle as min over edges uv of 1 + d(u, v) without that edge.
Distance brute_girth(const ColoredGraph& g) {
    Distance best = kUnreached;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Color c : kColors) {
            const VertexId w = g.neighbor(v, c);
            if (w == kNoVertex || w < v) continue;
            const auto d = bfs_distances(without_edge(g, v, c), v);
            if (d[w] != kUnreached) best = std::min(best, d[w] + 1);
        }
    return best;
}

}  // namespace

TEST_CASE("edges are checked for properness") {
    ColoredGraph g(3);
    g.add_edge(0, 1, Color::A);
    CHECK(g.neighbor(1, Color::A) == 0);
    CHECK_THROWS_AS(g.add_edge(1, 2, Color::A), Error);
    CHECK_THROWS_AS(g.add_edge(2, 2, Color::B), Error);
    g.add_edge(1, 2, Color::B);
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_count(Color::A) == 1);
    CHECK(is_proper(g));
    g.freeze();
    CHECK_THROWS_AS(g.add_vertex(), Error);
}

TEST_CASE("append_copy reproduces the prefix, including from itself") {
    ColoredGraph g(3);
    g.add_edge(0, 1, Color::A);
    g.add_edge(1, 2, Color::C);
    const VertexId off = g.append_copy(g, 2, VertexMeta{1, Role::Copy, 1});
    CHECK(off == 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.neighbor(3, Color::A) == 4);
    // The edge to vertex 2 leaves the prefix and is not copied.
    CHECK_FALSE(g.has_edge(4, Color::C));
    CHECK(g.meta(4).role == Role::Copy);
    CHECK(is_proper(g));
}

TEST_CASE("role tags round-trip") {
    const std::vector<VertexMeta> metas{{0, Role::G0, 0},       {3, Role::H, 0},      {3, Role::NetPart, 2},
                                        {2, Role::WordPath, 0}, {4, Role::Frontier, 0}, {5, Role::PathAnchor, 0},
                                        {3, Role::Copy, 2},     {0, Role::None, 0}};
    for (const auto& m : metas) {
        const auto back = parse_role_tag(role_tag(m), m.stage);
        REQUIRE(back);
        CHECK(*back == m);
    }
    CHECK(role_tag({3, Role::NetPart, 1}) == "R_3_1");
    CHECK_FALSE(parse_role_tag("Q_1", 0));
}

TEST_CASE("induced subgraph and relabel keep colors") {
    Rng rng(7);
    const auto g = random_proper_graph(rng, 30, 0.8);
    const auto perm = shuffled(rng, 30);
    const auto h = relabel(g, perm);
    for (VertexId v = 0; v < 30; ++v)
        for (Color c : kColors) {
            const VertexId w = g.neighbor(v, c);
            CHECK(h.neighbor(perm[v], c) == (w == kNoVertex ? kNoVertex : perm[w]));
        }
    const std::vector<VertexId> pick{5, 2, 9};
    const auto s = induced_subgraph(g, pick);
    CHECK(s.vertex_count() == 3);
    for (VertexId i = 0; i < 3; ++i)
        for (Color c : kColors) {
            const VertexId w = g.neighbor(pick[i], c);
            const auto it = std::find(pick.begin(), pick.end(), w);
            const VertexId expect = it == pick.end() ? kNoVertex : static_cast<VertexId>(it - pick.begin());
            CHECK(s.neighbor(i, c) == expect);
        }
}

TEST_CASE("BFS distances agree with Floyd-Warshall on random graphs") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_proper_graph(rng, 5 + rng.below(30), 0.3 + 0.1 * static_cast<double>(rng.below(7)));
        const auto all = floyd(g);
        for (VertexId s = 0; s < g.vertex_count(); ++s) CHECK(bfs_distances(g, s) == all[s]);
        bool connected = true;
        for (auto d : all[0]) connected = connected && d != kUnreached;
        CHECK(is_connected(g) == connected);
        if (connected) {
            Distance diam = 0;
            for (const auto& row : all)
                for (auto d : row) diam = std::max(diam, d);
            CHECK(exact_diameter(g) == diam);
            CHECK(diameter_lower_bound(g) <= diam);
            const auto e = eccentricity(g, 0);
            CHECK(e.value == *std::max_element(all[0].begin(), all[0].end()));
            CHECK(all[0][e.farthest] == e.value);
        }
    }
}

TEST_CASE("color-restricted BFS and reachability") {
    const auto g = path_graph(6);  // A B A B A
    const auto d = bfs_distances(g, std::vector<VertexId>{0}, kUnreached, ColorMask{Color::A});
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreached);
    CHECK(reachable(g, 2, ColorMask{Color::A}) == std::vector<VertexId>{2, 3});
    CHECK(bfs_distances(g, 0, 2)[3] == kUnreached);
}

TEST_CASE("girth agrees with edge-deletion oracle") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_proper_graph(rng, 4 + rng.below(24), 0.9);
        const Distance expect = brute_girth(g);
        CHECK(girth(g) == expect);
        // Capped search reports only cycles shorter than the cap.
        CHECK(girth(g, 6) == (expect < 6 ? expect : kUnreached));
        CycleProbe probe(g.vertex_count());
        Distance best = kUnreached;
        for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::min(best, probe.shortest_cycle_at(g, v, kUnreached));
        CHECK(best == expect);
    }
}

TEST_CASE("d_bridges agrees with edge-deletion oracle") {
    Rng rng(9);
    int with_cycle = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = random_connected_graph(rng, 6 + rng.below(20), 0.3);
        bool expect = true;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const VertexId w = g.neighbor(v, Color::D);
            if (w == kNoVertex || w < v) continue;
            if (is_connected(without_edge(g, v, Color::D))) expect = false;
        }
        with_cycle += !expect;
        CHECK(d_bridges(g) == expect);
    }
    CHECK(with_cycle > 0);
}

TEST_CASE("boundary and pairwise distance") {
    const auto g = path_graph(10);
    std::vector<bool> member(10, false);
    for (int i = 3; i < 7; ++i) member[i] = true;
    CHECK(boundary(g, member) == std::vector<VertexId>{3, 6});
    const std::vector<VertexId> src{1, 5, 9};
    CHECK(min_pairwise_distance(g, src) == 4);
    const std::vector<VertexId> one{4};
    CHECK(min_pairwise_distance(g, one) == kUnreached);
}
