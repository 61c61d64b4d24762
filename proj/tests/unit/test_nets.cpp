#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "holonomy/blocks.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/nets.hpp"

using namespace holonomy;
using namespace holonomy::testing;

TEST_CASE("greedy 6-net on the 20-cycle is {0, 6, 12}") {
    const auto g = make_cycle_block(10);
    CHECK(greedy_maximal_net(g, 6) == std::vector<VertexId>{0, 6, 12});
    std::vector<bool> forbidden(20, false);
    forbidden[0] = true;
    CHECK(greedy_maximal_net(g, 6, forbidden) == std::vector<VertexId>{1, 7, 13});
}

TEST_CASE("greedy nets are maximal per exhaustive enumeration") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng.below(11);
        const auto g = random_connected_graph(rng, n, 0.3);
        const Distance spacing = 2 + static_cast<Distance>(rng.below(4));
        std::vector<bool> forbidden;
        if (trial % 3 == 0) {
            forbidden.assign(n, false);
            for (std::size_t i = 0; i < n; ++i) forbidden[i] = rng.below(4) == 0;
        }
        const auto net = greedy_maximal_net(g, spacing, forbidden);
        const auto maximal = all_maximal_nets(g, spacing, forbidden);
        CHECK(maximal.count(net) == 1);
    }
}

TEST_CASE("net density stays below 1/d on 200 random graphs") {
    Rng rng(77);
    int hypotheses = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 20 + rng.below(400);
        const auto g = random_connected_graph(rng, n, 0.05 * static_cast<double>(rng.below(4)));
        const std::uint64_t d = 3 + rng.below(6);
        const auto net = greedy_maximal_net(g, 2 * d);
        const auto check = check_density(g, net, d);
        hypotheses += check.hypotheses_hold;
        if (check.hypotheses_hold) CHECK(check.passed);
    }
    CHECK(hypotheses > 100);
}

TEST_CASE("density hypotheses are reported, not assumed") {
    const auto g = make_cycle_block(3);
    CHECK_FALSE(check_density(g, std::vector<VertexId>{0}, 2).hypotheses_hold);
    CHECK_FALSE(check_density(g, std::vector<VertexId>{0}, 3).hypotheses_hold);
    const auto big = make_cycle_block(50);
    const auto c = check_density(big, greedy_maximal_net(big, 10), 5);
    CHECK(c.hypotheses_hold);
    CHECK(c.passed);
    CHECK(c.ratio == doctest::Approx(0.1));
}

TEST_CASE("schedules must increase") {
    CHECK_THROWS_AS(NetSchedule({3, 3}), Error);
    CHECK_THROWS_AS(NetSchedule({0, 4}), Error);
    CHECK_NOTHROW(NetSchedule({2, 5}));
    CHECK_THROWS_AS(NetSchedule({99, 1000}, true), Error);
    CHECK_NOTHROW(NetSchedule({100, 1000}, true));
}

TEST_CASE("multi-scale partition meets its contract") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = make_cycle_block(200 + rng.below(800));
        const std::uint64_t s1 = 2 + rng.below(3);
        const NetSchedule schedule({s1, s1 * 4, s1 * 12});
        const auto part = partition_nets(g, schedule, std::nullopt, 2);
        REQUIRE(part.parts.size() == 4);
        std::size_t total = 0;
        for (std::size_t i = 0; i < part.parts.size(); ++i) {
            total += part.parts[i].members.size();
            if (i < 3) {
                CHECK(part.parts[i].min_separation >= 2 * schedule[i]);
                CHECK(part.parts[i].covering_radius <= 10 * schedule[i]);
            }
        }
        CHECK(total == g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(std::count(part.parts[part.part_of[v]].members.begin(), part.parts[part.part_of[v]].members.end(),
                             v) == 1);
    }
}

TEST_CASE("partition refuses graphs that are too small") {
    const auto g = make_cycle_block(20);
    CHECK_THROWS_AS(partition_nets(g, NetSchedule({2, 5})), Error);
}

TEST_CASE("verify_partition catches corruption") {
    const auto g = make_cycle_block(100);
    const NetSchedule schedule({3, 10});
    auto part = partition_nets(g, schedule, std::nullopt, 2);
    auto dup = part;
    dup.parts[1].members.push_back(dup.parts[0].members.front());
    CHECK_FALSE(verify_partition(g, schedule, dup).empty());
    auto close = part;
    // Move a remainder vertex adjacent to a net point into R_1.
    const VertexId p = close.parts[0].members.front();
    const VertexId q = g.neighbor(p, Color::A);
    auto& rest = close.parts[2].members;
    if (auto it = std::find(rest.begin(), rest.end(), q); it != rest.end()) {
        rest.erase(it);
        close.parts[0].members.push_back(q);
        CHECK_FALSE(verify_partition(g, schedule, close).empty());
    }
    CHECK(verify_partition(g, schedule, part).empty());
}
