#include "holonomy/action.hpp"

#include <array>

#include "holonomy/bfs.hpp"
#include "holonomy/errors.hpp"

namespace holonomy {

VertexId apply(const ColoredGraph& g, const Word& w, VertexId x) {
    for (std::size_t i = 1; i <= w.length(); ++i) x = step(g, x, w.applied(i));
    return x;
}

std::vector<VertexId> action_path(const ColoredGraph& g, const Word& w, VertexId x) {
    std::vector<VertexId> path{x};
    for (std::size_t i = 1; i <= w.length(); ++i) path.push_back(x = step(g, x, w.applied(i)));
    return path;
}

ColoredGraph schreier_graph(std::span<const GeneratorImage> generators) {
    std::size_t n = 0;
    for (const auto& gen : generators) n = std::max(n, gen.image.size());
    ColoredGraph g(n);
    for (const auto& gen : generators) {
        if (gen.image.size() != n) fail(ErrorKind::Config, "generator images act on different point sets");
        for (VertexId v = 0; v < n; ++v) {
            const VertexId w = gen.image[v];
            if (w >= n || gen.image[w] != v)
                fail(ErrorKind::Config, std::string("generator ") + to_char(gen.color) + " is not an involution");
            if (v < w) g.add_edge(v, w, gen.color);
        }
    }
    return g;
}

std::vector<GeneratorImage> generator_images(const ColoredGraph& g, ColorMask colors) {
    std::vector<GeneratorImage> out;
    for (Color c : kColors) {
        if (!colors.contains(c)) continue;
        GeneratorImage gen{c, std::vector<VertexId>(g.vertex_count())};
        for (VertexId v = 0; v < g.vertex_count(); ++v) gen.image[v] = step(g, v, c);
        out.push_back(std::move(gen));
    }
    return out;
}

std::vector<VertexId> orbit(const ColoredGraph& g, VertexId x, ColorMask generators) {
    return reachable(g, x, generators);
}

namespace {

bool returns_within(const ColoredGraph& g, VertexId origin, VertexId at, int last, std::uint32_t remaining,
                    const std::array<Color, kColorCount>& letters, int letter_count) {
    for (int i = 0; i < letter_count; ++i) {
        const Color c = letters[i];
        if (index(c) == last) continue;
        const VertexId next = step(g, at, c);
        if (next == origin) return true;
        if (remaining > 1 && returns_within(g, origin, next, index(c), remaining - 1, letters, letter_count))
            return true;
    }
    return false;
}

}  // namespace

bool is_free(const ColoredGraph& g, VertexId x, std::uint32_t k, ColorMask generators) {
    if (k == 0) return true;
    std::array<Color, kColorCount> letters{};
    int count = 0;
    for (Color c : kColors)
        if (generators.contains(c)) letters[count++] = c;
    // Stay rule: a missing generator edge at x already fixes x.
    for (int i = 0; i < count; ++i)
        if (!g.has_edge(x, letters[i])) return false;
    return !returns_within(g, x, x, -1, k, letters, count);
}

}  // namespace holonomy
