#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holonomy/ball.hpp"
#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"
#include "holonomy/words.hpp"

namespace holonomy {

using TypeId = std::uint32_t;
inline constexpr TypeId kNoType = 0xFFFFFFFFu;

/// Types of B_r(x) for every x in a region and every r <= r_max.
///
/// Type ids are dense per radius, numbered by first occurrence in ascending
/// vertex order, so tables are deterministic. Balls are identified by
/// 128-bit fingerprints of their canonical codes; every first occurrence and
/// a stride sample of later ones are recomputed through the explicit code,
/// and a fingerprint shared by two different codes aborts the computation.
class TypeTable {
public:
    struct Level {
        std::vector<TypeId> type_of;  // per region position
        std::vector<Fingerprint> fingerprint;
        std::vector<std::uint64_t> count;
        std::vector<TypeId> parent;  // type at radius r - 1; empty at r = 0
        std::vector<VertexId> representative;
        std::vector<std::uint8_t> root_degree;  // degree of the root inside the ball
    };

    std::uint32_t r_max() const { return static_cast<std::uint32_t>(levels_.size()) - 1; }
    std::span<const VertexId> region() const { return region_; }
    bool contains(VertexId v) const { return v < pos_of_.size() && pos_of_[v] != kNoVertex; }
    /// Type of B_r(v), or kNoType outside the region.
    TypeId type_at(VertexId v, std::uint32_t r) const {
        return contains(v) ? levels_[r].type_of[pos_of_[v]] : kNoType;
    }
    const Level& level(std::uint32_t r) const { return levels_.at(r); }
    std::size_t type_count(std::uint32_t r) const { return levels_.at(r).count.size(); }
    std::uint64_t audited() const { return audited_; }

private:
    friend TypeTable compute_types(const ColoredGraph&, std::uint32_t, std::span<const VertexId>, std::uint32_t);

    std::vector<VertexId> region_;
    std::vector<VertexId> pos_of_;
    std::vector<Level> levels_;
    std::uint64_t audited_ = 0;
};

/// Empty `region` means every vertex. `audit_stride` = 0 disables the
/// stride sample (first occurrences are always audited). Throws
/// Error(Invariant) on a fingerprint collision or a refinement mismatch.
TypeTable compute_types(const ColoredGraph& g, std::uint32_t r_max, std::span<const VertexId> region = {},
                        std::uint32_t audit_stride = 1009);

/// Exact refinement check: parent(type_{r+1}(x)) = type_r(x) for all x and
/// τ(α) = Σ τ(β) over the children β of α.
bool refinement_consistent(const TypeTable& table);

/// Vertices v < prefix with d(v, frontier) > r, ascending.
std::vector<VertexId> stable_region(const ColoredGraph& g, VertexId frontier, std::uint32_t r,
                                    std::uint64_t prefix = UINT64_MAX);

struct GenericityReport {
    std::size_t subset_size = 0;
    /// Per radius: distinct types on the subset, the largest class met by a
    /// subset vertex (counted over the whole table region) and the number of
    /// subset vertices whose type is unique in the table.
    std::vector<std::uint64_t> classes;
    std::vector<std::uint64_t> largest_class;
    std::vector<std::uint64_t> separated;
    std::optional<std::uint32_t> separating_radius;
    /// Per radius r < r_max: fraction of types realized on the table region
    /// that split into two or more types at r + 1.
    std::vector<double> splitting;
    bool refines = true;
    bool passed = false;
};

/// Pass iff at some r <= r_max every subset vertex has a type no other
/// table vertex shares.
GenericityReport genericity_report(const TypeTable& table, std::span<const VertexId> subset);

struct HolonomyEntry {
    std::uint32_t radius = 0;
    TypeId type = kNoType;
    Fingerprint fingerprint;
    std::uint64_t count = 0;
    Distance m_alpha = kUnreached;  // kUnreached: some stable vertex never meets the type
    VertexId farthest = kNoVertex;
};

/// max over stable x of d(x, nearest region vertex of type α).
/// Throws Error(Config) if no region vertex has the type.
HolonomyEntry holonomy_radius(const ColoredGraph& g, const TypeTable& table, std::uint32_t r, TypeId alpha,
                              std::span<const VertexId> stable);

/// holonomy_radius for every type at radius r realized by a stable vertex.
std::vector<HolonomyEntry> holonomy_report(const ColoredGraph& g, const TypeTable& table, std::uint32_t r,
                                           std::span<const VertexId> stable);

struct DefectEntry {
    TypeId type = kNoType;
    std::int64_t tau = 0;     // τ(α) on Ω
    std::int64_t pushed = 0;  // Σ τ(s) over (r+1)-types s with type_r(w x) = α
    std::int64_t defect() const { return tau - pushed; }
};

struct DefectReport {
    std::uint32_t radius = 0;
    Color generator = Color::A;
    std::uint64_t omega_size = 0;
    std::uint64_t boundary = 0;  // |∂Ω|
    std::int64_t max_defect = 0;
    bool within_bound = false;   // max |defect| <= 2 |∂Ω|
    std::vector<DefectEntry> entries;
};

/// Needs r + 1 <= r_max and Ω together with its 1-neighborhood inside the
/// table region (Error(Config) otherwise). Throws Error(Invariant) if two
/// vertices of one (r+1)-type send the generator to different r-types.
DefectReport pushforward_defect(const ColoredGraph& g, const TypeTable& table, std::uint32_t r, Color generator,
                                std::span<const VertexId> omega);

struct TransportResult {
    bool found = false;
    Word word;
    VertexId endpoint = kNoVertex;
    std::uint32_t explored_depth = 0;
};

/// Shortest word w (|w| <= budget) with type_r(w x) = beta, searched by BFS
/// over the orbit of x with colors tried in A < B < C < D order.
TransportResult transport_check(const ColoredGraph& g, const TypeTable& table, VertexId x, std::uint32_t r,
                                TypeId beta, std::uint32_t budget);

/// r,type_fingerprint,count,parent_fingerprint
void write_type_csv(const TypeTable& table, std::ostream& out);
/// radius,type_fingerprint,count,m_alpha
void write_holonomy_csv(std::span<const HolonomyEntry> entries, std::ostream& out);

}  // namespace holonomy
