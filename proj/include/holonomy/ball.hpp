#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "holonomy/bfs.hpp"
#include "holonomy/graph.hpp"

namespace holonomy {

/// Spanned subgraph on {y : d(root, y) <= radius} with the induced coloring.
/// Members are listed in ascending vertex id; `adjacency[i][c]` is the local
/// index of member i's c-neighbor when that neighbor is also a member.
struct RootedBall {
    VertexId root = 0;
    std::uint32_t radius = 0;
    std::vector<VertexId> members;
    std::vector<std::array<std::uint32_t, kColorCount>> adjacency;
    std::uint32_t root_index = 0;

    static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

    std::size_t size() const { return members.size(); }
};

RootedBall ball(const ColoredGraph& g, VertexId x, std::uint32_t radius);

/// 128-bit fingerprint of a canonical code.
struct Fingerprint {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    auto operator<=>(const Fingerprint&) const = default;
    std::string hex() const;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const noexcept {
        return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9E3779B97F4A7C15ull));
    }
};

/// Canonical code of a rooted ball: four entries per discovered vertex, in
/// color-ordered BFS discovery order, each the 1-based discovery index of the
/// induced neighbor of that color or 0.
struct BallType {
    std::vector<std::uint32_t> code;
    std::uint32_t radius = 0;

    /// Degree of the root inside the ball. Equals the degree in the host
    /// graph whenever radius >= 1.
    int root_degree() const;
    std::size_t vertex_count() const { return code.size() / kColorCount; }
    Fingerprint fingerprint() const;
    bool operator==(const BallType&) const = default;
};

BallType canonical_code(const RootedBall& b);

/// Streaming 128-bit hasher over 32-bit words.
class FingerprintHasher {
public:
    explicit FingerprintHasher(std::uint32_t radius);
    void add(std::uint32_t word);
    Fingerprint finish() const;

private:
    std::uint64_t a_;
    std::uint64_t b_;
    std::uint64_t n_ = 0;
};

/// Computes fingerprints of B_0(x), ..., B_R(x) from a single color-ordered
/// BFS directly on the host graph. Produces exactly
/// canonical_code(ball(g, x, r)).fingerprint() for each r. One instance per
/// thread; scratch space is sized to the graph.
class BallFingerprinter {
public:
    BallFingerprinter(const ColoredGraph& g, std::uint32_t max_radius);

    /// Writes max_radius+1 fingerprints (radius 0 first) into `out`.
    void run(VertexId x, std::span<Fingerprint> out);
    /// Number of vertices in B_R(x) from the last run.
    std::size_t last_ball_size() const { return order_.size(); }

private:
    const ColoredGraph& g_;
    std::uint32_t max_radius_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> local_;
    std::vector<VertexId> order_;
    std::vector<std::uint32_t> depth_;
    std::uint32_t epoch_ = 0;
};

}  // namespace holonomy
