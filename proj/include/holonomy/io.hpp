#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "holonomy/construction.hpp"
#include "holonomy/graph.hpp"

namespace holonomy {

/// Graph file as read, before any properness check.
struct RawGraph {
    std::size_t vertices = 0;
    struct Edge {
        VertexId u, v;
        Color color;
    };
    std::vector<Edge> edges;
    std::vector<VertexMeta> meta;
};

/// {"vertices": N, "edges": [[u,v,"A"],...], "meta": [{"stage":k,"role":"..."},...]}
/// Edges are emitted once each with u < v, sorted by (u, v, color).
void write_graph_json(const ColoredGraph& g, std::ostream& out);
void write_graph_json(const ColoredGraph& g, const std::string& path);

/// Streaming reader; never materializes a document tree. Throws
/// Error(Config) on malformed input (bad JSON, unknown colors or roles,
/// ids out of range).
RawGraph read_graph_json(std::istream& in);
RawGraph read_graph_json(const std::string& path);

/// Assembles a frozen graph. Throws Error(Invariant) on loops or color clashes.
ColoredGraph assemble(const RawGraph& raw);

/// First properness violation in the raw edge list, or empty.
std::string properness_problem(const RawGraph& raw);

void write_build_log(const BuildLog& log, std::ostream& out);
void write_build_log(const BuildLog& log, const std::string& path);
BuildLog read_build_log(std::istream& in);
BuildLog read_build_log(const std::string& path);

}  // namespace holonomy
