#pragma once

#include <cstdint>
#include <vector>

#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"

namespace holonomy {

/// Z2 * Z2 acting on {1..n}: A swaps 2j-1 and 2j, B swaps 2j and 2j+1 and
/// fixes 1. Label j is vertex j - 1. The last label is the truncation
/// frontier: its missing edge is an artifact of the window, not a fixed point.
/// Throws Error(Config) for n < 3.
ColoredGraph dihedral_graph(std::uint32_t n);

struct DihedralReport {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    /// Labels farther than r from the frontier.
    std::vector<std::uint32_t> stable_labels;
    std::uint64_t stable_types = 0;       // distinct r-types among stable labels
    std::uint64_t largest_class = 0;      // most stable labels sharing one r-type
    bool generic = false;                 // every stable label has its own r-type
    Distance m_alpha_vertex1 = 0;         // holonomy radius of the r-type of label 1
    std::uint32_t transport_budget = 0;
    bool transport_found = false;         // from the stable label farthest from 1
    std::uint32_t transport_from = 0;
};

/// Types, holonomy radius of label 1 and a transport attempt from the far
/// end with the given word budget.
DihedralReport dihedral_demo(std::uint32_t n, std::uint32_t r, std::uint32_t transport_budget);

}  // namespace holonomy
