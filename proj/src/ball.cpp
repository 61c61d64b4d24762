#include "holonomy/ball.hpp"

#include <algorithm>
#include <cstdio>

namespace holonomy {

namespace {

constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RootedBall ball(const ColoredGraph& g, VertexId x, std::uint32_t radius) {
    std::vector<VertexId> reached{x};
    std::vector<Distance> depth{0};
    // Small balls: a sorted member list doubles as the visited set.
    std::vector<VertexId> seen{x};
    for (std::size_t head = 0; head < reached.size(); ++head) {
        if (depth[head] >= radius) continue;
        for (Color c : kColors) {
            const VertexId w = g.neighbor(reached[head], c);
            if (w == kNoVertex) continue;
            auto it = std::lower_bound(seen.begin(), seen.end(), w);
            if (it != seen.end() && *it == w) continue;
            seen.insert(it, w);
            reached.push_back(w);
            depth.push_back(depth[head] + 1);
        }
    }
    RootedBall b;
    b.root = x;
    b.radius = radius;
    b.members = std::move(seen);
    b.adjacency.resize(b.members.size());
    auto local = [&](VertexId v) -> std::uint32_t {
        auto it = std::lower_bound(b.members.begin(), b.members.end(), v);
        if (it == b.members.end() || *it != v) return RootedBall::kAbsent;
        return static_cast<std::uint32_t>(it - b.members.begin());
    };
    for (std::size_t i = 0; i < b.members.size(); ++i) {
        for (Color c : kColors) {
            const VertexId w = g.neighbor(b.members[i], c);
            b.adjacency[i][index(c)] = (w == kNoVertex) ? RootedBall::kAbsent : local(w);
        }
    }
    b.root_index = local(x);
    return b;
}

std::string Fingerprint::hex() const {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                  static_cast<unsigned long long>(lo));
    return buf;
}

FingerprintHasher::FingerprintHasher(std::uint32_t radius)
    : a_(mix(0x243F6A8885A308D3ull ^ radius)), b_(mix(0x13198A2E03707344ull + radius)) {}

void FingerprintHasher::add(std::uint32_t word) {
    ++n_;
    a_ = mix(a_ ^ (word + 0x9E3779B97F4A7C15ull * n_));
    b_ = mix((b_ + word) * 0xD6E8FEB86659FD93ull ^ n_);
}

Fingerprint FingerprintHasher::finish() const { return {mix(a_ ^ n_), mix(b_ + 0xA0761D6478BD642Full * n_)}; }

int BallType::root_degree() const {
    int d = 0;
    for (int c = 0; c < kColorCount && c < static_cast<int>(code.size()); ++c) d += (code[c] != 0);
    return d;
}

Fingerprint BallType::fingerprint() const {
    FingerprintHasher h(radius);
    for (std::uint32_t word : code) h.add(word);
    return h.finish();
}

BallType canonical_code(const RootedBall& b) {
    const std::size_t n = b.members.size();
    std::vector<std::uint32_t> discovery(n, RootedBall::kAbsent);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    discovery[b.root_index] = 0;
    order.push_back(b.root_index);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int c = 0; c < kColorCount; ++c) {
            const std::uint32_t w = b.adjacency[order[head]][c];
            if (w == RootedBall::kAbsent || discovery[w] != RootedBall::kAbsent) continue;
            discovery[w] = static_cast<std::uint32_t>(order.size());
            order.push_back(w);
        }
    }
    BallType t;
    t.radius = b.radius;
    t.code.reserve(order.size() * kColorCount);
    for (std::uint32_t v : order) {
        for (int c = 0; c < kColorCount; ++c) {
            const std::uint32_t w = b.adjacency[v][c];
            t.code.push_back(w == RootedBall::kAbsent ? 0 : discovery[w] + 1);
        }
    }
    return t;
}

BallFingerprinter::BallFingerprinter(const ColoredGraph& g, std::uint32_t max_radius)
    : g_(g), max_radius_(max_radius), stamp_(g.vertex_count(), 0), local_(g.vertex_count(), 0) {}

void BallFingerprinter::run(VertexId x, std::span<Fingerprint> out) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    order_.clear();
    depth_.clear();
    order_.push_back(x);
    depth_.push_back(0);
    stamp_[x] = epoch_;
    local_[x] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
        if (depth_[head] >= max_radius_) break;
        for (Color c : kColors) {
            const VertexId w = g_.neighbor(order_[head], c);
            if (w == kNoVertex || stamp_[w] == epoch_) continue;
            stamp_[w] = epoch_;
            local_[w] = static_cast<std::uint32_t>(order_.size());
            order_.push_back(w);
            depth_.push_back(depth_[head] + 1);
        }
    }
    for (std::uint32_t r = 0; r <= max_radius_; ++r) {
        FingerprintHasher h(r);
        for (std::size_t i = 0; i < order_.size() && depth_[i] <= r; ++i) {
            for (Color c : kColors) {
                const VertexId w = g_.neighbor(order_[i], c);
                std::uint32_t entry = 0;
                if (w != kNoVertex && stamp_[w] == epoch_ && depth_[local_[w]] <= r) entry = local_[w] + 1;
                h.add(entry);
            }
        }
        out[r] = h.finish();
    }
}

}  // namespace holonomy
