#include "holonomy/nets.hpp"

#include <algorithm>
#include <sstream>

#include "holonomy/errors.hpp"

namespace holonomy {

NetSchedule::NetSchedule(std::vector<std::uint64_t> scales, bool strict_floor) : scales_(std::move(scales)) {
    std::uint64_t floor = 100;  // 10^(i+1) for i = 1
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        if (scales_[i] == 0) fail(ErrorKind::Config, "net scales must be positive");
        if (i > 0 && scales_[i] <= scales_[i - 1]) fail(ErrorKind::Config, "net scales must increase strictly");
        if (strict_floor && scales_[i] < floor) {
            std::ostringstream msg;
            msg << "s_" << (i + 1) << " = " << scales_[i] << " is below the floor " << floor;
            fail(ErrorKind::Config, msg.str());
        }
        floor = floor > UINT64_MAX / 10 ? UINT64_MAX : floor * 10;
    }
}

std::vector<VertexId> greedy_maximal_net(const ColoredGraph& g, std::uint64_t spacing,
                                         const std::vector<bool>& forbidden) {
    if (spacing < 1) fail(ErrorKind::Config, "net spacing must be positive");
    const std::size_t n = g.vertex_count();
    const Distance cap = spacing > kUnreached - 1 ? kUnreached - 1 : static_cast<Distance>(spacing);
    // near[v] = min(distance to the accepted set, cap). A vertex is only
    // re-expanded when its value strictly drops, so the total work is
    // bounded by cap times the number of vertices, usually far less.
    std::vector<Distance> near(n, cap);
    std::vector<VertexId> net;
    std::vector<VertexId> frontier;
    std::vector<VertexId> next;
    for (VertexId v = 0; v < n; ++v) {
        if (near[v] < cap || (!forbidden.empty() && forbidden[v])) continue;
        net.push_back(v);
        near[v] = 0;
        frontier.assign(1, v);
        for (Distance d = 1; d < cap && !frontier.empty(); ++d) {
            next.clear();
            for (VertexId u : frontier) {
                for (Color c : kColors) {
                    const VertexId w = g.neighbor(u, c);
                    if (w != kNoVertex && near[w] > d) {
                        near[w] = d;
                        next.push_back(w);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    return net;
}

DensityCheck check_density(const ColoredGraph& g, std::span<const VertexId> net, std::uint64_t d,
                           std::optional<Distance> known_diameter) {
    DensityCheck out;
    const std::size_t n = g.vertex_count();
    out.ratio = n == 0 ? 0.0 : static_cast<double>(net.size()) / static_cast<double>(n);
    out.bound = d == 0 ? 0.0 : 1.0 / static_cast<double>(d);
    if (d <= 2) {
        out.note = "hypothesis d > 2 fails";
        return out;
    }
    Distance diam = 0;
    if (known_diameter) {
        diam = *known_diameter;
    } else {
        diam = diameter_lower_bound(g);
        if (diam < 2 * d && n <= 4096) diam = exact_diameter(g);
    }
    if (diam < 2 * d) {
        std::ostringstream msg;
        msg << "hypothesis diam >= 2d fails (diam " << (known_diameter ? "" : ">= ") << diam << ", 2d = " << 2 * d
            << ")";
        out.note = msg.str();
        return out;
    }
    out.hypotheses_hold = true;
    // Exact rational comparison |A| * d <= |V|.
    out.passed = static_cast<std::uint64_t>(net.size()) * d <= n;
    if (!out.passed) out.note = "density bound violated";
    return out;
}

namespace {

Distance covering_radius(const ColoredGraph& g, std::span<const VertexId> centers, VertexId* witness) {
    if (centers.empty()) return kUnreached;
    auto dist = bfs_distances(g, centers);
    Distance worst = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] > worst || (dist[v] == kUnreached && worst != kUnreached)) {
            worst = dist[v];
            if (witness) *witness = v;
        }
    }
    return worst;
}

}  // namespace

std::string verify_partition(const ColoredGraph& g, const NetSchedule& schedule, NetPartition& partition) {
    const std::size_t n = g.vertex_count();
    const std::size_t parts = schedule.size() + 1;
    std::ostringstream err;
    if (partition.parts.size() != parts) {
        err << "expected " << parts << " parts, found " << partition.parts.size();
        return err.str();
    }
    std::vector<std::uint16_t> seen(n, UINT16_MAX);
    for (std::size_t i = 0; i < parts; ++i) {
        for (VertexId v : partition.parts[i].members) {
            if (v >= n) {
                err << "vertex " << v << " out of range in part " << i + 1;
                return err.str();
            }
            if (seen[v] != UINT16_MAX) {
                err << "vertex " << v << " lies in parts " << seen[v] + 1 << " and " << i + 1;
                return err.str();
            }
            seen[v] = static_cast<std::uint16_t>(i);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (seen[v] == UINT16_MAX) {
            err << "vertex " << v << " is in no part";
            return err.str();
        }
    }
    partition.part_of = std::move(seen);

    for (std::size_t i = 0; i < schedule.size(); ++i) {
        auto& part = partition.parts[i];
        const std::uint64_t s = schedule[i];
        part.scale = s;
        part.min_separation = min_pairwise_distance(g, part.members);
        if (part.min_separation != kUnreached && part.min_separation < 2 * s) {
            err << "R_" << i + 1 << " has two points at distance " << part.min_separation << " < " << 2 * s;
            return err.str();
        }
        VertexId witness = 0;
        part.covering_radius = covering_radius(g, part.members, &witness);
        if (part.covering_radius > 10 * s) {
            err << "R_" << i + 1 << " leaves vertex " << witness << " at distance "
                << (part.covering_radius == kUnreached ? std::string("inf") : std::to_string(part.covering_radius))
                << " > 10 s_" << i + 1;
            return err.str();
        }
        // Maximality: every vertex outside R_1..R_i is within 2s_i - 1 of R_i.
        auto dist = bfs_distances(g, part.members, static_cast<Distance>(2 * s - 1));
        for (VertexId v = 0; v < n; ++v) {
            if (partition.part_of[v] < i) continue;
            if (dist[v] == kUnreached) {
                err << "R_" << i + 1 << " is not maximal: vertex " << v << " could be added";
                return err.str();
            }
        }
    }
    partition.parts.back().scale = 0;
    return {};
}

NetPartition partition_nets(const ColoredGraph& g, const NetSchedule& schedule, std::optional<Distance> known_diameter,
                            std::uint64_t diam_factor) {
    if (schedule.size() == 0) fail(ErrorKind::Config, "empty net schedule");
    if (schedule.size() >= UINT16_MAX) fail(ErrorKind::Config, "too many net scales");
    const std::uint64_t need = diam_factor * schedule[schedule.size() - 1];
    Distance diam = known_diameter ? *known_diameter : diameter_lower_bound(g);
    if (!known_diameter && diam <= need && g.vertex_count() <= 4096) diam = exact_diameter(g);
    if (diam <= need) {
        std::ostringstream msg;
        msg << "partition_nets needs diam > " << need << " but only " << diam << " is certified";
        fail(ErrorKind::Config, msg.str());
    }

    const std::size_t n = g.vertex_count();
    NetPartition out;
    out.parts.resize(schedule.size() + 1);
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        out.parts[i].members = greedy_maximal_net(g, 2 * schedule[i], taken);
        for (VertexId v : out.parts[i].members) taken[v] = true;
    }
    auto& rest = out.parts.back().members;
    for (VertexId v = 0; v < n; ++v)
        if (!taken[v]) rest.push_back(v);

    if (auto problem = verify_partition(g, schedule, out); !problem.empty()) fail(ErrorKind::Invariant, problem);
    return out;
}

}  // namespace holonomy
