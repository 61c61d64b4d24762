#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "holonomy/graph.hpp"

namespace holonomy {

using Distance = std::uint32_t;
inline constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

/// Multi-source BFS over edges whose color is in `colors`, stopping at
/// `max_depth`. Unreached vertices get kUnreached.
std::vector<Distance> bfs_distances(const ColoredGraph& g, std::span<const VertexId> sources,
                                    Distance max_depth = kUnreached,
                                    ColorMask colors = ColorMask::all());

inline std::vector<Distance> bfs_distances(const ColoredGraph& g, VertexId source,
                                           Distance max_depth = kUnreached) {
    return bfs_distances(g, std::span<const VertexId>(&source, 1), max_depth);
}

/// Vertices reachable from x using only the given colors, ascending ids.
std::vector<VertexId> reachable(const ColoredGraph& g, VertexId x, ColorMask colors);

bool is_connected(const ColoredGraph& g);

/// Largest finite BFS distance from x, and a vertex attaining it (lowest id).
struct Eccentricity {
    Distance value = 0;
    VertexId farthest = 0;
};
Eccentricity eccentricity(const ColoredGraph& g, VertexId x);

/// Double-sweep lower bound on the diameter of a connected graph.
Distance diameter_lower_bound(const ColoredGraph& g, VertexId start = 0);

/// Exact diameter by BFS from every vertex (small graphs only).
Distance exact_diameter(const ColoredGraph& g);

/// Length of the shortest cycle, or kUnreached if none shorter than `cap`.
/// Only cycles of length < cap are searched for.
Distance girth(const ColoredGraph& g, Distance cap = kUnreached);

/// BFS cycle probe from a single vertex with reusable scratch space.
/// The value at v bounds the shortest cycle through v from above and is
/// attained for some vertex of every shortest cycle, so the minimum over any
/// vertex set meeting every automorphism class of the graph is its girth.
class CycleProbe {
public:
    explicit CycleProbe(std::size_t vertex_count);
    Distance shortest_cycle_at(const ColoredGraph& g, VertexId v, Distance cap);

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<Distance> depth_;
    std::vector<std::int8_t> parent_color_;
    std::vector<VertexId> queue_;
    std::uint32_t epoch_ = 0;
};

Distance girth_at(const ColoredGraph& g, VertexId v, Distance cap);

/// Vertices of `set` with a neighbor outside `set` (set given as a membership mask).
std::vector<VertexId> boundary(const ColoredGraph& g, const std::vector<bool>& member);

/// Minimum distance between two distinct sources, by a labelled multi-source BFS.
/// Returns kUnreached when fewer than two sources share a component.
Distance min_pairwise_distance(const ColoredGraph& g, std::span<const VertexId> sources);

}  // namespace holonomy
