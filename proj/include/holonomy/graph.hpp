#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holonomy {

/// Edge colors. The numeric order A < B < C < D is the exploration order
/// used by canonical ball coding, so it must not change.
enum class Color : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline constexpr int kColorCount = 4;
inline constexpr std::array<Color, kColorCount> kColors{Color::A, Color::B, Color::C, Color::D};

constexpr int index(Color c) { return static_cast<int>(c); }
constexpr char to_char(Color c) { return static_cast<char>('A' + index(c)); }
std::optional<Color> color_from_char(char ch);

/// Bit set over colors.
class ColorMask {
public:
    constexpr ColorMask() = default;
    constexpr ColorMask(std::initializer_list<Color> colors) {
        for (Color c : colors) bits_ |= static_cast<std::uint8_t>(1u << index(c));
    }
    static constexpr ColorMask all() { return ColorMask{Color::A, Color::B, Color::C, Color::D}; }
    static constexpr ColorMask free_subgroup() { return ColorMask{Color::A, Color::B, Color::C}; }

    constexpr bool contains(Color c) const { return (bits_ >> index(c)) & 1u; }
    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool operator==(const ColorMask&) const = default;

private:
    std::uint8_t bits_ = 0;
};

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Provenance role of a vertex inside the staged construction.
enum class Role : std::uint8_t {
    None,
    G0,        // the original single vertex p
    H,         // vertex of a stage block not otherwise classified (stage 1 triangle)
    NetPart,   // member of R^n_i, index = i
    WordPath,  // vertex y^n_j of a word path
    Frontier,  // the distinguished vertex r_n
    PathAnchor,// the vertex x_n carrying the word path
    Copy,      // vertex of an attached copy of G_k, index = k
};

struct VertexMeta {
    std::uint16_t stage = 0;
    Role role = Role::None;
    std::uint16_t index = 0;

    bool operator==(const VertexMeta&) const = default;
};

/// Renders the role as it appears in graph files: "H_3", "R_3_1", "word_path",
/// "r_3", "x_3", "copy_of_G_2", "G_0", or "none".
std::string role_tag(const VertexMeta& meta);
std::optional<VertexMeta> parse_role_tag(std::string_view tag, std::uint16_t stage);

/// Properly edge-colored graph with at most one neighbor per color per vertex.
///
/// Adjacency is four flat arrays (one per color) holding the partner id or
/// kNoVertex. The graph is append-only until freeze(); afterwards every
/// mutating call throws, and concurrent reads are safe.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(std::size_t vertex_count, VertexMeta meta = {});

    VertexId add_vertex(VertexMeta meta = {});
    /// Adds `count` vertices; returns the id of the first.
    VertexId add_vertices(std::size_t count, VertexMeta meta = {});

    /// Pairs u and v in color c. Throws Error(Invariant) on loops or when
    /// either endpoint already has a c-colored edge.
    void add_edge(VertexId u, VertexId v, Color c);

    /// Appends a copy of the subgraph induced on ids [0, prefix) of `source`
    /// (all of it by default). Returns the offset of the copy.
    VertexId append_copy(const ColoredGraph& source, std::size_t prefix, VertexMeta meta);
    VertexId append_copy(const ColoredGraph& source, VertexMeta meta);

    void set_meta(VertexId v, VertexMeta meta);
    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    std::size_t vertex_count() const { return meta_.size(); }
    std::size_t edge_count() const;
    std::size_t edge_count(Color c) const;

    VertexId neighbor(VertexId v, Color c) const { return adj_[index(c)][v]; }
    bool has_edge(VertexId v, Color c) const { return neighbor(v, c) != kNoVertex; }
    int degree(VertexId v) const;
    const VertexMeta& meta(VertexId v) const { return meta_[v]; }

    std::span<const VertexId> pairing(Color c) const { return adj_[index(c)]; }

private:
    void require_mutable() const;

    std::array<std::vector<VertexId>, kColorCount> adj_;
    std::vector<VertexMeta> meta_;
    bool frozen_ = false;
};

/// Full scan: every pairing is an involution without fixed points.
bool is_proper(const ColoredGraph& g);

/// Subgraph induced on the listed vertices (new ids follow list order).
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const VertexId> vertices);

/// Copy of g with vertex v renamed perm[v].
ColoredGraph relabel(const ColoredGraph& g, std::span<const VertexId> perm);

/// True iff every D-colored edge is a bridge.
bool d_bridges(const ColoredGraph& g);

}  // namespace holonomy
