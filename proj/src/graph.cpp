#include "holonomy/graph.hpp"

#include <charconv>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

std::optional<Color> color_from_char(char ch) {
    if (ch >= 'A' && ch <= 'D') return static_cast<Color>(ch - 'A');
    return std::nullopt;
}

std::string role_tag(const VertexMeta& meta) {
    const std::string n = std::to_string(meta.stage);
    switch (meta.role) {
        case Role::None: return "none";
        case Role::G0: return "G_0";
        case Role::H: return "H_" + n;
        case Role::NetPart: return "R_" + n + "_" + std::to_string(meta.index);
        case Role::WordPath: return "word_path";
        case Role::Frontier: return "r_" + n;
        case Role::PathAnchor: return "x_" + n;
        case Role::Copy: return "copy_of_G_" + std::to_string(meta.index);
    }
    return "none";
}

namespace {

std::optional<std::uint16_t> parse_u16(std::string_view s) {
    std::uint16_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::optional<VertexMeta> parse_role_tag(std::string_view tag, std::uint16_t stage) {
    VertexMeta meta{stage, Role::None, 0};
    auto starts = [&](std::string_view prefix) { return tag.substr(0, prefix.size()) == prefix; };
    if (tag == "none") return meta;
    if (tag == "G_0") return VertexMeta{stage, Role::G0, 0};
    if (tag == "word_path") return VertexMeta{stage, Role::WordPath, 0};
    if (starts("copy_of_G_")) {
        auto k = parse_u16(tag.substr(10));
        if (!k) return std::nullopt;
        return VertexMeta{stage, Role::Copy, *k};
    }
    if (starts("R_")) {
        auto rest = tag.substr(2);
        auto sep = rest.find('_');
        if (sep == std::string_view::npos) return std::nullopt;
        auto i = parse_u16(rest.substr(sep + 1));
        if (!i || !parse_u16(rest.substr(0, sep))) return std::nullopt;
        return VertexMeta{stage, Role::NetPart, *i};
    }
    if (starts("H_") && parse_u16(tag.substr(2))) return VertexMeta{stage, Role::H, 0};
    if (starts("r_") && parse_u16(tag.substr(2))) return VertexMeta{stage, Role::Frontier, 0};
    if (starts("x_") && parse_u16(tag.substr(2))) return VertexMeta{stage, Role::PathAnchor, 0};
    return std::nullopt;
}

ColoredGraph::ColoredGraph(std::size_t vertex_count, VertexMeta meta) {
    for (auto& a : adj_) a.assign(vertex_count, kNoVertex);
    meta_.assign(vertex_count, meta);
}

void ColoredGraph::require_mutable() const {
    if (frozen_) fail(ErrorKind::Invariant, "graph is frozen");
}

VertexId ColoredGraph::add_vertex(VertexMeta meta) { return add_vertices(1, meta); }

VertexId ColoredGraph::add_vertices(std::size_t count, VertexMeta meta) {
    require_mutable();
    const auto first = static_cast<VertexId>(meta_.size());
    if (meta_.size() + count >= kNoVertex) fail(ErrorKind::Budget, "vertex id space exhausted");
    for (auto& a : adj_) a.resize(a.size() + count, kNoVertex);
    meta_.resize(meta_.size() + count, meta);
    return first;
}

void ColoredGraph::add_edge(VertexId u, VertexId v, Color c) {
    require_mutable();
    const auto n = vertex_count();
    if (u >= n || v >= n) fail(ErrorKind::Invariant, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::Invariant, "loop rejected at vertex " + std::to_string(u));
    auto& pairing = adj_[index(c)];
    for (VertexId x : {u, v}) {
        if (pairing[x] != kNoVertex)
            fail(ErrorKind::Invariant,
                 std::string("color ") + to_char(c) + " occupied at " + std::to_string(x));
    }
    pairing[u] = v;
    pairing[v] = u;
}

VertexId ColoredGraph::append_copy(const ColoredGraph& source, std::size_t prefix, VertexMeta meta) {
    require_mutable();
    const VertexId offset = add_vertices(prefix, meta);
    for (int c = 0; c < kColorCount; ++c) {
        const auto& src = source.adj_[c];
        auto& dst = adj_[c];
        for (std::size_t v = 0; v < prefix; ++v) {
            if (src[v] != kNoVertex && src[v] < prefix) dst[offset + v] = offset + src[v];
        }
    }
    return offset;
}

VertexId ColoredGraph::append_copy(const ColoredGraph& source, VertexMeta meta) {
    return append_copy(source, source.vertex_count(), meta);
}

void ColoredGraph::set_meta(VertexId v, VertexMeta meta) {
    require_mutable();
    meta_[v] = meta;
}

std::size_t ColoredGraph::edge_count(Color c) const {
    std::size_t ends = 0;
    for (VertexId w : adj_[index(c)]) ends += (w != kNoVertex);
    return ends / 2;
}

std::size_t ColoredGraph::edge_count() const {
    std::size_t total = 0;
    for (Color c : kColors) total += edge_count(c);
    return total;
}

int ColoredGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& a : adj_) d += (a[v] != kNoVertex);
    return d;
}

bool is_proper(const ColoredGraph& g) {
    const auto n = g.vertex_count();
    for (Color c : kColors) {
        auto pairing = g.pairing(c);
        for (VertexId v = 0; v < n; ++v) {
            const VertexId w = pairing[v];
            if (w == kNoVertex) continue;
            if (w >= n || w == v || pairing[w] != v) return false;
        }
    }
    return true;
}

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const VertexId> vertices) {
    std::vector<VertexId> local(g.vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<VertexId>(i);
    ColoredGraph sub(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        sub.set_meta(static_cast<VertexId>(i), g.meta(vertices[i]));
        for (Color c : kColors) {
            const VertexId w = g.neighbor(vertices[i], c);
            if (w == kNoVertex || local[w] == kNoVertex || local[w] < i) continue;
            sub.add_edge(static_cast<VertexId>(i), local[w], c);
        }
    }
    return sub;
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const VertexId> perm) {
    ColoredGraph out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out.set_meta(perm[v], g.meta(v));
        for (Color c : kColors) {
            const VertexId w = g.neighbor(v, c);
            if (w != kNoVertex && v < w) out.add_edge(perm[v], perm[w], c);
        }
    }
    return out;
}

namespace {

// Union-find over the graph with D-edges removed.
struct DisjointSets {
    std::vector<VertexId> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    VertexId find(VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool d_bridges(const ColoredGraph& g) {
    // A D-edge is a bridge iff it does not close a cycle. Contract all non-D
    // edges first; then the D-edges must form a forest on the components.
    // (A D-edge inside a non-D component lies on a cycle; a cycle through
    // several D-edges shows up as a repeated union.)
    DisjointSets sets(g.vertex_count());
    for (Color c : {Color::A, Color::B, Color::C}) {
        auto pairing = g.pairing(c);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (pairing[v] != kNoVertex && v < pairing[v]) sets.unite(v, pairing[v]);
    }
    auto d = g.pairing(Color::D);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (d[v] == kNoVertex || d[v] < v) continue;
        if (!sets.unite(v, d[v])) return false;
    }
    return true;
}

}  // namespace holonomy
