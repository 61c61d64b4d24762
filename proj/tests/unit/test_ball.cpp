#include <doctest.h>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "holonomy/ball.hpp"
#include "holonomy/blocks.hpp"

using namespace holonomy;
using namespace holonomy::testing;

TEST_CASE("ball is the spanned subgraph of the radius-r neighborhood") {
    const auto g = make_cycle_block(5);  // 10-cycle
    const auto b = ball(g, 0, 2);
    CHECK(b.members == std::vector<VertexId>{0, 1, 2, 8, 9});
    CHECK(b.adjacency[b.root_index][0] != RootedBall::kAbsent);
    // Endpoints 2 and 8 are not joined, so the ball is a path.
    int edges = 0;
    for (std::uint32_t i = 0; i < b.size(); ++i) edges += ball_degree(b, i);
    CHECK(edges == 8);
    CHECK(canonical_code(ball(g, 0, 0)).root_degree() == 0);
    CHECK(canonical_code(ball(g, 0, 1)).root_degree() == 2);
    CHECK(canonical_code(ball(g, 0, 5)).vertex_count() == 10);
}

TEST_CASE("canonical code matches exhaustive rooted isomorphism on 1000 cases") {
    Rng rng(1234);
    int mismatches = 0, iso = 0, non_iso = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 4 + rng.below(47);
        const auto g = random_proper_graph(rng, n, 0.4 + 0.1 * static_cast<double>(rng.below(6)));
        const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng.below(3));
        const VertexId x = static_cast<VertexId>(rng.below(n));
        RootedBall a = ball(g, x, r);
        RootedBall b;
        if (trial % 2 == 0) {
            const auto perm = shuffled(rng, n);
            b = ball(relabel(g, perm), perm[x], r);
        } else {
            b = ball(g, static_cast<VertexId>(rng.below(n)), r);
        }
        if (a.size() > 12 || b.size() > 12) {
            // Keep the exhaustive search cheap; shrink to radius 1.
            a = ball(g, x, 1);
            b = trial % 2 == 0 ? a : ball(g, b.root, 1);
        }
        const bool expect = IsoSearch(a, b).run();
        (expect ? iso : non_iso)++;
        const bool got = canonical_code(a) == canonical_code(b);
        mismatches += got != expect;
        if (got) CHECK(canonical_code(a).fingerprint() == canonical_code(b).fingerprint());
    }
    CHECK(mismatches == 0);
    CHECK(iso > 400);
    CHECK(non_iso > 100);
}

TEST_CASE("single-BFS fingerprinter equals per-radius canonical codes") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_proper_graph(rng, 10 + rng.below(200), 0.8);
        const std::uint32_t R = 5;
        BallFingerprinter fp(g, R);
        std::vector<Fingerprint> out(R + 1);
        for (VertexId x = 0; x < g.vertex_count(); x += 7) {
            fp.run(x, out);
            for (std::uint32_t r = 0; r <= R; ++r) CHECK(out[r] == canonical_code(ball(g, x, r)).fingerprint());
        }
    }
}

TEST_CASE("fingerprints separate radii and codes") {
    const auto g = make_cycle_block(6);
    const auto c1 = canonical_code(ball(g, 0, 1));
    const auto c2 = canonical_code(ball(g, 0, 2));
    CHECK(c1.fingerprint() != c2.fingerprint());
    // Color-preserving reflections make an alternating cycle homogeneous.
    CHECK(canonical_code(ball(g, 0, 3)) == canonical_code(ball(g, 1, 3)));
    const auto p = path_graph(5);  // ends carry A and B
    CHECK(canonical_code(ball(p, 0, 1)) != canonical_code(ball(p, 1, 1)));
    CHECK(canonical_code(ball(p, 0, 2)) != canonical_code(ball(p, 4, 2)));
    CHECK(c1.fingerprint().hex().size() == 32);
}

TEST_CASE("balls grow with r and codes carry the root degree") {
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(49);
        const auto g = random_proper_graph(rng, n, 0.5);
        const VertexId x = static_cast<VertexId>(rng.below(n));
        for (std::uint32_t r = 0; r < 4; ++r) {
            const auto inner = ball(g, x, r), outer = ball(g, x, r + 1);
            CHECK(std::includes(outer.members.begin(), outer.members.end(), inner.members.begin(),
                                inner.members.end()));
            if (r > 0) CHECK(static_cast<std::size_t>(canonical_code(inner).root_degree()) == g.degree(x));
        }
    }
}
