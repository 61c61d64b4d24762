#include "holonomy/bfs.hpp"

#include <algorithm>

namespace holonomy {

std::vector<Distance> bfs_distances(const ColoredGraph& g, std::span<const VertexId> sources,
                                    Distance max_depth, ColorMask colors) {
    std::vector<Distance> dist(g.vertex_count(), kUnreached);
    std::vector<VertexId> queue;
    queue.reserve(sources.size());
    for (VertexId s : sources) {
        if (dist[s] == kUnreached) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        if (dist[u] >= max_depth) continue;
        for (Color c : kColors) {
            if (!colors.contains(c)) continue;
            const VertexId w = g.neighbor(u, c);
            if (w != kNoVertex && dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<VertexId> reachable(const ColoredGraph& g, VertexId x, ColorMask colors) {
    auto dist = bfs_distances(g, std::span<const VertexId>(&x, 1), kUnreached, colors);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dist[v] != kUnreached) out.push_back(v);
    return out;
}

bool is_connected(const ColoredGraph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, VertexId{0});
    return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kUnreached; });
}

Eccentricity eccentricity(const ColoredGraph& g, VertexId x) {
    auto dist = bfs_distances(g, x);
    Eccentricity e{0, x};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] != kUnreached && dist[v] > e.value) e = {dist[v], v};
    }
    return e;
}

Distance diameter_lower_bound(const ColoredGraph& g, VertexId start) {
    if (g.vertex_count() == 0) return 0;
    const auto first = eccentricity(g, start);
    const auto second = eccentricity(g, first.farthest);
    return std::max(first.value, second.value);
}

Distance exact_diameter(const ColoredGraph& g) {
    Distance best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v).value);
    return best;
}

CycleProbe::CycleProbe(std::size_t vertex_count)
    : stamp_(vertex_count, 0), depth_(vertex_count, 0), parent_color_(vertex_count, -1) {}

Distance CycleProbe::shortest_cycle_at(const ColoredGraph& g, VertexId v, Distance cap) {
    // BFS with parent-edge tracking (two vertices may share edges of two colors).
    // Any non-tree edge (u,w) closes a walk of length d(u)+d(w)+1 containing a
    // cycle; the minimum over a vertex set meeting every cycle is the girth.
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    queue_.clear();
    queue_.push_back(v);
    stamp_[v] = epoch_;
    depth_[v] = 0;
    parent_color_[v] = -1;
    Distance best = cap;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId u = queue_[head];
        if (2 * depth_[u] >= best) break;
        for (Color c : kColors) {
            if (index(c) == parent_color_[u]) continue;
            const VertexId w = g.neighbor(u, c);
            if (w == kNoVertex) continue;
            if (stamp_[w] == epoch_) {
                best = std::min(best, depth_[u] + depth_[w] + 1);
            } else {
                stamp_[w] = epoch_;
                depth_[w] = depth_[u] + 1;
                parent_color_[w] = static_cast<std::int8_t>(index(c));
                queue_.push_back(w);
            }
        }
    }
    return best >= cap ? kUnreached : best;
}

Distance girth_at(const ColoredGraph& g, VertexId v, Distance cap) {
    CycleProbe probe(g.vertex_count());
    return probe.shortest_cycle_at(g, v, cap);
}

Distance girth(const ColoredGraph& g, Distance cap) {
    CycleProbe probe(g.vertex_count());
    Distance best = cap;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Distance here = probe.shortest_cycle_at(g, v, best);
        if (here != kUnreached) best = std::min(best, here);
    }
    return best >= cap ? kUnreached : best;
}

std::vector<VertexId> boundary(const ColoredGraph& g, const std::vector<bool>& member) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!member[v]) continue;
        for (Color c : kColors) {
            const VertexId w = g.neighbor(v, c);
            if (w != kNoVertex && !member[w]) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

Distance min_pairwise_distance(const ColoredGraph& g, std::span<const VertexId> sources) {
    std::vector<Distance> dist(g.vertex_count(), kUnreached);
    std::vector<VertexId> owner(g.vertex_count(), kNoVertex);
    std::vector<VertexId> queue;
    Distance best = kUnreached;
    for (VertexId s : sources) {
        if (owner[s] != kNoVertex) return 0;  // duplicate source
        dist[s] = 0;
        owner[s] = s;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        if (best != kUnreached && 2 * dist[u] >= best) break;
        for (Color c : kColors) {
            const VertexId w = g.neighbor(u, c);
            if (w == kNoVertex) continue;
            if (owner[w] == kNoVertex) {
                owner[w] = owner[u];
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            } else if (owner[w] != owner[u]) {
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

}  // namespace holonomy
