#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"
#include "holonomy/nets.hpp"

namespace holonomy {

enum class ScheduleMode { Paper, Desk };

std::string to_string(ScheduleMode mode);
ScheduleMode schedule_mode_from_string(const std::string& text);

struct ConstructionConfig {
    std::uint64_t m = 12;
    std::uint32_t levels = 3;
    ScheduleMode schedule = ScheduleMode::Desk;
    std::uint64_t diam_multiplier = 10;
    Distance girth_target = 12;
    std::uint32_t chord_span = 13;
    std::uint64_t seed = 0;
    std::uint64_t max_vertices = 40'000'000;

    /// Throws Error(Config) naming the first violated constraint.
    void validate() const;
};

/// Scale s_i given |V(G_{i-1})|. Throws Error(Budget) when it does not fit
/// in 64 bits.
std::uint64_t schedule_scale(const ConstructionConfig& config, std::uint32_t i, std::uint64_t previous_size);

/// Half-open vertex id range.
struct IdRange {
    VertexId begin = 0;
    VertexId end = 0;
    std::size_t size() const { return end - begin; }
    bool contains(VertexId v) const { return v >= begin && v < end; }
};

/// All copies of G_of attached along one net part. Copy j occupies
/// [first + j*size, first + (j+1)*size) and hangs from attach[j] by a D-edge
/// at its vertex first + j*size + root.
struct CopyGroup {
    std::uint32_t of = 0;
    std::uint64_t size = 0;
    VertexId root = 0;
    VertexId first = 0;
    std::vector<VertexId> attach;
};

struct NetDiagnostics {
    std::uint64_t scale = 0;
    std::uint64_t count = 0;
    Distance min_separation = kUnreached;
    Distance covering_radius = 0;
    double density = 0.0;
    bool density_hypotheses = false;
    bool density_passed = false;
};

struct BlockInfo {
    std::string kind;  // "triangle", "cycle" or "cubic"
    Distance diameter_bound = 0;
    Distance girth = 0;
    std::uint64_t sheets = 0;
    std::array<std::int32_t, 7> voltages{};
    std::uint32_t min_chord_span = 0;
};

struct WordPath {
    std::uint64_t index = 0;  // n with w = nth_word(n)
    std::string text;
    VertexId anchor = kNoVertex;   // x_n
    std::vector<VertexId> path;    // y_0 (when present), y_1, ..., y_k
    VertexId witness = kNoVertex;  // start vertex moved by the word
};

struct StageLog {
    std::uint32_t stage = 0;
    IdRange h;
    IdRange omega;
    std::vector<std::uint64_t> scales;        // s_1..s_n
    std::vector<std::vector<VertexId>> nets;  // R^n_1..R^n_n, global ids
    std::uint64_t remainder_count = 0;        // |R^n_{n+1}|
    std::vector<NetDiagnostics> net_checks;
    std::vector<CopyGroup> copies;
    VertexId prev_attach = kNoVertex;  // vertex of R^n_n joined to r_{n-1}
    VertexId prev_root = kNoVertex;    // r_{n-1}
    std::optional<WordPath> word;
    VertexId x = kNoVertex;
    VertexId r = kNoVertex;
    BlockInfo block;
    std::uint64_t graph_size = 0;  // |V(G_n)|
    double attachment_ratio = 0.0;      // |V(G_n) \ V(H_n)| / |V(H_n)|
    double outside_fraction = 0.0;      // |V(G_n) \ V(H_n)| / |V(G_n)|
};

struct BuildLog {
    ConstructionConfig config;
    VertexId p = 0;
    std::vector<StageLog> stages;  // stages[n-1] describes stage n

    std::uint32_t levels() const { return static_cast<std::uint32_t>(stages.size()); }
    const StageLog& stage(std::uint32_t n) const { return stages.at(n - 1); }
    /// Ω_n = V(G_n) \ V(G_{n-1}); Ω_0 = {p}.
    IdRange omega(std::uint32_t n) const;
    /// |V(G_n)|; |V(G_0)| = 1.
    std::uint64_t size(std::uint32_t n) const;
    /// Frontier vertex of the whole build, r_N.
    VertexId frontier() const { return stages.back().r; }
};

struct BuildResult {
    ColoredGraph graph;
    BuildLog log;
};

/// Staged construction G_0 ⊂ G_1 ⊂ ... ⊂ G_N. Stage n appends its vertices,
/// so V(G_n) is the id prefix [0, |V(G_n)|). Throws Error(Config) on an
/// invalid config, Error(Budget) when a stage is infeasible and
/// Error(Invariant) when a self-check fails.
BuildResult build(const ConstructionConfig& config);

struct WitnessResult {
    std::uint64_t index = 0;
    std::string word;
    VertexId start = kNoVertex;
    VertexId image = kNoVertex;
    bool moved = false;
};

/// For every word path of stages 2..n_max+1: apply the word to its witness.
std::vector<WitnessResult> faithfulness_witnesses(const ColoredGraph& g, const BuildLog& log, std::uint32_t n_max);

struct BoundaryFacts {
    std::uint32_t stage = 0;
    std::vector<VertexId> graph_boundary;  // ∂G_n inside G_N (n < N) or frontier candidates (n = N)
    std::vector<VertexId> omega_boundary;  // ∂Ω_n inside G_N
    double decay = 0.0;                    // |∂G_n| / |V(G_n)|
};

/// Boundaries of every G_n and Ω_n measured in the full graph. For n = N,
/// ∂G_N is the singleton {r_N} by convention once r_N is checked to have a
/// free D slot and no outside neighbor.
std::vector<BoundaryFacts> boundary_facts(const ColoredGraph& g, const BuildLog& log);

}  // namespace holonomy
