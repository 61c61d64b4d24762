#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"

namespace holonomy {

/// Scales s_1 < s_2 < ... < s_n of a multi-scale net partition.
class NetSchedule {
public:
    NetSchedule() = default;
    /// Throws Error(Config) unless strictly increasing and positive. With
    /// `strict_floor`, additionally requires s_i >= 10^(i+1).
    explicit NetSchedule(std::vector<std::uint64_t> scales, bool strict_floor = false);

    std::size_t size() const { return scales_.size(); }
    std::uint64_t operator[](std::size_t i) const { return scales_[i]; }  // 0-based
    std::span<const std::uint64_t> scales() const { return scales_; }

private:
    std::vector<std::uint64_t> scales_;
};

/// Greedy maximal net: scans vertices in ascending id and keeps every vertex
/// outside `forbidden` at distance >= spacing from all kept ones.
std::vector<VertexId> greedy_maximal_net(const ColoredGraph& g, std::uint64_t spacing,
                                         const std::vector<bool>& forbidden = {});

struct DensityCheck {
    double ratio = 0.0;      // |A| / |V|
    double bound = 0.0;      // 1 / d
    bool hypotheses_hold = false;  // d > 2 and diam >= 2d (certified)
    bool passed = false;     // ratio <= bound; only meaningful when hypotheses hold
    std::string note;
};

/// Density bound for a 2d-net. The diameter hypothesis is certified by a
/// double-sweep lower bound, falling back to the exact diameter on small
/// graphs; `known_diameter` skips the search when the caller has a certificate.
DensityCheck check_density(const ColoredGraph& g, std::span<const VertexId> net, std::uint64_t d,
                           std::optional<Distance> known_diameter = std::nullopt);

struct NetPart {
    std::uint64_t scale = 0;  // s_i; 0 for the remainder part
    std::vector<VertexId> members;
    Distance min_separation = kUnreached;  // measured, for i <= n
    Distance covering_radius = 0;          // measured, for i <= n
};

struct NetPartition {
    std::vector<NetPart> parts;  // R_1..R_n then the remainder R_{n+1}
    /// part index (0-based) of each vertex
    std::vector<std::uint16_t> part_of;
};

/// Multi-scale partition V = R_1 ⊔ ... ⊔ R_n ⊔ R_{n+1}: R_i is a maximal
/// 2s_i-net avoiding earlier parts; the remainder is everything else.
/// Precondition diam(g) > diam_factor * s_n (certified as in check_density,
/// or via `known_diameter`). Postconditions (separation >= 2s_i, covering
/// radius <= 10 s_i, disjoint cover) are verified before returning; a
/// violation throws Error(Invariant) naming a witness.
NetPartition partition_nets(const ColoredGraph& g, const NetSchedule& schedule,
                            std::optional<Distance> known_diameter = std::nullopt,
                            std::uint64_t diam_factor = 10);

/// Verification of an existing partition: separation, covering radius and
/// disjoint cover. Returns an empty string when all hold.
std::string verify_partition(const ColoredGraph& g, const NetSchedule& schedule, NetPartition& partition);

}  // namespace holonomy
