#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "holonomy/graph.hpp"
#include "holonomy/words.hpp"

namespace holonomy {

/// One generator step: follow the c-edge if present, otherwise stay.
inline VertexId step(const ColoredGraph& g, VertexId x, Color c) {
    const VertexId w = g.neighbor(x, c);
    return w == kNoVertex ? x : w;
}

/// Action of a word on a vertex by the path rule, rightmost letter first.
VertexId apply(const ColoredGraph& g, const Word& w, VertexId x);

/// Vertices visited while applying w to x (x first, result last).
std::vector<VertexId> action_path(const ColoredGraph& g, const Word& w, VertexId x);

/// Permutation image of one generator on {0, ..., n-1}.
struct GeneratorImage {
    Color color;
    std::vector<VertexId> image;
};

/// Schreier graph of an action given by generator images. Fixed points get
/// no edge of that color. Throws Error(Config) if an image is not an
/// involution of the point set.
ColoredGraph schreier_graph(std::span<const GeneratorImage> generators);

/// Reads the generator images back off a colored graph.
std::vector<GeneratorImage> generator_images(const ColoredGraph& g, ColorMask colors = ColorMask::all());

/// Closure of {x} under the listed generators, ascending ids.
std::vector<VertexId> orbit(const ColoredGraph& g, VertexId x, ColorMask generators = ColorMask::all());

/// Radius-k freeness over a set of generators: true iff no nonempty reduced
/// word over `generators` of length <= k fixes x. Walks every reduced word
/// by depth-first search with the stay rule, so the cost per vertex is the
/// number of such words (93 for three generators at k = 5).
bool is_free(const ColoredGraph& g, VertexId x, std::uint32_t k,
             ColorMask generators = ColorMask::free_subgroup());

}  // namespace holonomy
