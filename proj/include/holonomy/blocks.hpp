#pragma once

#include <array>
#include <cstdint>

#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"

namespace holonomy {

/// 2i-cycle with alternating A and B edges; vertex j is joined to j+1 by A
/// when j is even and by B when j is odd.
ColoredGraph make_cycle_block(std::uint64_t half_length);

struct CubicBlockOptions {
    Distance min_diameter = 1;
    Distance girth_target = 4;
    /// Minimum span of a C-chord along the A/B Hamiltonian cycle; odd and
    /// at least girth_target - 1.
    std::uint32_t chord_span = 3;
    std::uint64_t seed = 0;
    /// Refuse blocks with more vertices than this.
    std::uint64_t max_vertices = 40'000'000;
    /// Bound on voltage magnitudes tried first; grown when the search stalls.
    std::int32_t voltage_bound = 3;
    /// Hits examined before the most economical one is taken.
    std::uint32_t candidates = 6;
    /// Random voltage draws per bound before the bound grows.
    std::uint32_t draws_per_bound = 400'000;
};

struct CubicBlock {
    ColoredGraph graph;
    /// Number of sheets of the cyclic cover (14 vertices per sheet).
    std::uint64_t sheets = 0;
    /// C-chord voltages of the seven base points.
    std::array<std::int32_t, 7> voltages{};
    Distance girth = 0;          // exact
    Distance diameter_bound = 0; // certified lower bound: eccentricity of vertex 0
    std::uint32_t min_chord_span = 0;
    std::uint64_t draws = 0;     // voltage draws examined
};

/// Connected, properly 3-edge-colored cubic graph with girth >= girth_target
/// and diameter >= min_diameter.
///
/// The block is a cyclic cover of the Heawood graph (points i ~ lines i,
/// i+1, i+3 of the Fano plane, colored A, B, C). Voltages are gauge-fixed so
/// the A/B subgraph lifts to one Hamiltonian cycle; the seven C voltages
/// are drawn from the seeded generator until enough girth hits are found.
/// Vertex ids follow the Hamiltonian cycle, so the output is an A/B
/// alternating cycle with a C perfect matching of chords. Throws
/// Error(Config) on bad options and Error(Budget) when the block would
/// exceed max_vertices or no voltage assignment is found.
CubicBlock make_cubic_block(const CubicBlockOptions& options);

}  // namespace holonomy
