#pragma once

// Hand-rolled generators for property tests. Every graph is properly colored
// by construction: each color class is a random partial matching.
#include <algorithm>
#include <numeric>
#include <vector>

#include "holonomy/graph.hpp"
#include "holonomy/rng.hpp"

namespace holonomy::testing {

inline std::vector<VertexId> shuffled(Rng& rng, std::size_t n) {
    std::vector<VertexId> v(n);
    std::iota(v.begin(), v.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
}

/// Each color pairs off about `fill` of the vertices (0..1).
inline ColoredGraph random_proper_graph(Rng& rng, std::size_t n, double fill, ColorMask colors = ColorMask::all()) {
    ColoredGraph g(n);
    for (Color c : kColors) {
        if (!colors.contains(c)) continue;
        const auto order = shuffled(rng, n);
        const auto pairs = static_cast<std::size_t>(fill * static_cast<double>(n) / 2.0);
        for (std::size_t i = 0; i + 1 < order.size() && i / 2 < pairs; i += 2) g.add_edge(order[i], order[i + 1], c);
    }
    g.freeze();
    return g;
}

/// Connected: a random spanning path colored A/B alternately, plus random
/// C and D matchings on the remaining slots.
inline ColoredGraph random_connected_graph(Rng& rng, std::size_t n, double extra) {
    ColoredGraph g(n);
    const auto order = shuffled(rng, n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(order[i], order[i + 1], i % 2 == 0 ? Color::A : Color::B);
    for (Color c : {Color::C, Color::D}) {
        const auto o = shuffled(rng, n);
        for (std::size_t i = 0; i + 1 < n; i += 2)
            if (static_cast<double>(rng.below(1000)) < 1000.0 * extra) g.add_edge(o[i], o[i + 1], c);
    }
    g.freeze();
    return g;
}

/// Path 0 - 1 - ... - (n-1) with alternating A/B colors.
inline ColoredGraph path_graph(std::size_t n) {
    ColoredGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1), i % 2 == 0 ? Color::A : Color::B);
    g.freeze();
    return g;
}

}  // namespace holonomy::testing
