#include "holonomy/typespace.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "holonomy/action.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

TypeTable compute_types(const ColoredGraph& g, std::uint32_t r_max, std::span<const VertexId> region,
                        std::uint32_t audit_stride) {
    TypeTable t;
    const std::size_t n = g.vertex_count();
    if (region.empty()) {
        t.region_.resize(n);
        std::iota(t.region_.begin(), t.region_.end(), VertexId{0});
    } else {
        t.region_.assign(region.begin(), region.end());
        std::sort(t.region_.begin(), t.region_.end());
        t.region_.erase(std::unique(t.region_.begin(), t.region_.end()), t.region_.end());
        if (!t.region_.empty() && t.region_.back() >= n) fail(ErrorKind::Config, "type region exceeds the graph");
    }
    t.pos_of_.assign(n, kNoVertex);
    for (std::size_t i = 0; i < t.region_.size(); ++i) t.pos_of_[t.region_[i]] = static_cast<VertexId>(i);
    t.levels_.resize(r_max + 1);
    for (auto& level : t.levels_) level.type_of.resize(t.region_.size());

    const std::uint32_t width = r_max + 1;
    const unsigned workers = worker_count();
    std::vector<std::unique_ptr<BallFingerprinter>> hashers(workers);
    std::vector<std::unordered_map<Fingerprint, TypeId, FingerprintHash>> ids(width);
    const std::size_t batch = std::size_t{1} << 16;
    std::vector<Fingerprint> fps(batch * width);

    auto audit_against = [&](VertexId x, std::uint32_t r, const Fingerprint& fast) {
        const BallType slow = canonical_code(ball(g, x, r));
        if (slow.fingerprint() != fast) {
            std::ostringstream msg;
            msg << "fast and explicit ball codes disagree at vertex " << x << ", radius " << r;
            fail(ErrorKind::Invariant, msg.str());
        }
        ++t.audited_;
        return slow;
    };

    for (std::size_t start = 0; start < t.region_.size(); start += batch) {
        const std::size_t len = std::min(batch, t.region_.size() - start);
        parallel_for(len, 2048, [&](std::size_t b, std::size_t e, unsigned w) {
            if (!hashers[w]) hashers[w] = std::make_unique<BallFingerprinter>(g, r_max);
            for (std::size_t i = b; i < e; ++i)
                hashers[w]->run(t.region_[start + i], std::span<Fingerprint>(&fps[i * width], width));
        });
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t pos = start + i;
            const VertexId x = t.region_[pos];
            const bool sample = audit_stride != 0 && pos % audit_stride == 0;
            for (std::uint32_t r = 0; r < width; ++r) {
                auto& level = t.levels_[r];
                const Fingerprint& f = fps[i * width + r];
                auto [it, inserted] = ids[r].try_emplace(f, static_cast<TypeId>(level.count.size()));
                const TypeId id = it->second;
                if (inserted) {
                    audit_against(x, r, f);
                    level.fingerprint.push_back(f);
                    level.count.push_back(0);
                    level.representative.push_back(x);
                    level.root_degree.push_back(static_cast<std::uint8_t>(r == 0 ? 0 : g.degree(x)));
                    if (r > 0) level.parent.push_back(t.levels_[r - 1].type_of[pos]);
                } else {
                    if (r > 0 && level.parent[id] != t.levels_[r - 1].type_of[pos]) {
                        std::ostringstream msg;
                        msg << "refinement mismatch at vertex " << x << ", radius " << r;
                        fail(ErrorKind::Invariant, msg.str());
                    }
                    if (sample) {
                        const BallType mine = audit_against(x, r, f);
                        const BallType theirs = canonical_code(ball(g, level.representative[id], r));
                        if (!(mine == theirs)) {
                            std::ostringstream msg;
                            msg << "fingerprint collision between vertices " << x << " and "
                                << level.representative[id] << " at radius " << r;
                            fail(ErrorKind::Invariant, msg.str());
                        }
                    }
                }
                ++level.count[id];
                level.type_of[pos] = id;
            }
        }
    }
    return t;
}

bool refinement_consistent(const TypeTable& table) {
    const auto region = table.region();
    for (std::uint32_t r = 1; r <= table.r_max(); ++r) {
        const auto& up = table.level(r);
        const auto& down = table.level(r - 1);
        for (std::size_t pos = 0; pos < region.size(); ++pos)
            if (up.parent[up.type_of[pos]] != down.type_of[pos]) return false;
        std::vector<std::uint64_t> sums(down.count.size(), 0);
        for (TypeId b = 0; b < up.count.size(); ++b) sums[up.parent[b]] += up.count[b];
        if (sums != down.count) return false;
    }
    return true;
}

std::vector<VertexId> stable_region(const ColoredGraph& g, VertexId frontier, std::uint32_t r, std::uint64_t prefix) {
    const auto dist = bfs_distances(g, frontier, r);
    std::vector<VertexId> out;
    const std::uint64_t end = std::min<std::uint64_t>(prefix, g.vertex_count());
    for (VertexId v = 0; v < end; ++v)
        if (dist[v] == kUnreached || dist[v] > r) out.push_back(v);
    return out;
}

namespace {

TypeId checked_type(const TypeTable& table, VertexId v, std::uint32_t r) {
    const TypeId t = table.type_at(v, r);
    if (t == kNoType) fail(ErrorKind::Config, "vertex " + std::to_string(v) + " lies outside the type table");
    return t;
}

}  // namespace

GenericityReport genericity_report(const TypeTable& table, std::span<const VertexId> subset) {
    GenericityReport rep;
    rep.subset_size = subset.size();
    for (std::uint32_t r = 0; r <= table.r_max(); ++r) {
        const auto& level = table.level(r);
        std::vector<TypeId> seen;
        std::uint64_t largest = 0, separated = 0;
        for (VertexId v : subset) {
            const TypeId t = checked_type(table, v, r);
            seen.push_back(t);
            largest = std::max(largest, level.count[t]);
            separated += level.count[t] == 1;
        }
        std::sort(seen.begin(), seen.end());
        rep.classes.push_back(static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin()));
        rep.largest_class.push_back(largest);
        rep.separated.push_back(separated);
        if (!rep.separating_radius && separated == subset.size()) rep.separating_radius = r;
        if (r < table.r_max()) {
            const auto& up = table.level(r + 1);
            std::vector<std::uint32_t> children(level.count.size(), 0);
            for (TypeId b = 0; b < up.count.size(); ++b) ++children[up.parent[b]];
            const auto splits = std::count_if(children.begin(), children.end(), [](auto c) { return c >= 2; });
            rep.splitting.push_back(level.count.empty() ? 0.0
                                                        : static_cast<double>(splits) / level.count.size());
        }
    }
    rep.refines = refinement_consistent(table);
    rep.passed = rep.separating_radius.has_value() && rep.refines;
    return rep;
}

HolonomyEntry holonomy_radius(const ColoredGraph& g, const TypeTable& table, std::uint32_t r, TypeId alpha,
                              std::span<const VertexId> stable) {
    const auto& level = table.level(r);
    if (alpha >= level.count.size()) fail(ErrorKind::Config, "type id out of range");
    std::vector<VertexId> sources;
    const auto region = table.region();
    for (std::size_t pos = 0; pos < region.size(); ++pos)
        if (level.type_of[pos] == alpha) sources.push_back(region[pos]);
    HolonomyEntry e;
    e.radius = r;
    e.type = alpha;
    e.fingerprint = level.fingerprint[alpha];
    e.count = sources.size();
    const auto dist = bfs_distances(g, sources);
    e.m_alpha = 0;
    if (!stable.empty()) e.farthest = stable.front();
    for (VertexId x : stable) {
        if (dist[x] == kUnreached) {
            e.m_alpha = kUnreached;
            e.farthest = x;
            break;
        }
        if (dist[x] > e.m_alpha) {
            e.m_alpha = dist[x];
            e.farthest = x;
        }
    }
    return e;
}

std::vector<HolonomyEntry> holonomy_report(const ColoredGraph& g, const TypeTable& table, std::uint32_t r,
                                           std::span<const VertexId> stable) {
    std::vector<TypeId> types;
    for (VertexId v : stable) types.push_back(checked_type(table, v, r));
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    std::vector<HolonomyEntry> out;
    for (TypeId t : types) out.push_back(holonomy_radius(g, table, r, t, stable));
    return out;
}

DefectReport pushforward_defect(const ColoredGraph& g, const TypeTable& table, std::uint32_t r, Color generator,
                                std::span<const VertexId> omega) {
    if (r + 1 > table.r_max()) fail(ErrorKind::Config, "pushforward defect at radius r needs types to r + 1");
    DefectReport rep;
    rep.radius = r;
    rep.generator = generator;
    rep.omega_size = omega.size();
    const auto& low = table.level(r);
    const auto& high = table.level(r + 1);
    std::vector<std::int64_t> tau(low.count.size(), 0), pushed(low.count.size(), 0);
    std::vector<TypeId> image(high.count.size(), kNoType);
    std::vector<bool> member(g.vertex_count(), false);
    for (VertexId x : omega) member[x] = true;
    for (VertexId x : omega) {
        const TypeId a = checked_type(table, x, r);
        const TypeId s = checked_type(table, x, r + 1);
        const TypeId moved = checked_type(table, step(g, x, generator), r);
        ++tau[a];
        // The (r+1)-ball of x determines the r-ball of its image.
        if (image[s] == kNoType) {
            image[s] = moved;
        } else if (image[s] != moved) {
            std::ostringstream msg;
            msg << "(r+1)-type of vertex " << x << " does not determine the r-type of its " << to_char(generator)
                << "-image";
            fail(ErrorKind::Invariant, msg.str());
        }
        ++pushed[moved];
    }
    rep.boundary = boundary(g, member).size();
    for (TypeId a = 0; a < low.count.size(); ++a) {
        if (tau[a] == 0 && pushed[a] == 0) continue;
        DefectEntry e{a, tau[a], pushed[a]};
        rep.max_defect = std::max<std::int64_t>(rep.max_defect, std::llabs(e.defect()));
        rep.entries.push_back(e);
    }
    rep.within_bound = rep.max_defect <= 2 * static_cast<std::int64_t>(rep.boundary);
    return rep;
}

TransportResult transport_check(const ColoredGraph& g, const TypeTable& table, VertexId x, std::uint32_t r,
                                TypeId beta, std::uint32_t budget) {
    TransportResult res;
    if (checked_type(table, x, r) == beta) {
        res.found = true;
        res.endpoint = x;
        return res;
    }
    struct Back {
        VertexId from;
        Color via;
        std::uint32_t depth;
    };
    std::unordered_map<VertexId, Back> seen{{x, {kNoVertex, Color::A, 0}}};
    std::vector<VertexId> frontier{x}, next;
    for (std::uint32_t depth = 1; depth <= budget && !frontier.empty(); ++depth) {
        next.clear();
        res.explored_depth = depth;
        for (VertexId u : frontier) {
            for (Color c : kColors) {
                const VertexId w = g.neighbor(u, c);
                if (w == kNoVertex || seen.count(w)) continue;
                seen.emplace(w, Back{u, c, depth});
                if (table.type_at(w, r) == beta) {
                    std::vector<Color> letters;  // last applied first
                    for (VertexId v = w; v != x; v = seen.at(v).from) letters.push_back(seen.at(v).via);
                    res.found = true;
                    res.word = Word::reduce(letters);
                    res.endpoint = w;
                    return res;
                }
                next.push_back(w);
            }
        }
        frontier.swap(next);
    }
    return res;
}

void write_type_csv(const TypeTable& table, std::ostream& out) {
    out << "r,type_fingerprint,count,parent_fingerprint\n";
    for (std::uint32_t r = 0; r <= table.r_max(); ++r) {
        const auto& level = table.level(r);
        for (TypeId t = 0; t < level.count.size(); ++t) {
            out << r << ',' << level.fingerprint[t].hex() << ',' << level.count[t] << ',';
            if (r > 0) out << table.level(r - 1).fingerprint[level.parent[t]].hex();
            out << '\n';
        }
    }
}

void write_holonomy_csv(std::span<const HolonomyEntry> entries, std::ostream& out) {
    out << "radius,type_fingerprint,count,m_alpha\n";
    for (const auto& e : entries) {
        out << e.radius << ',' << e.fingerprint.hex() << ',' << e.count << ',';
        if (e.m_alpha == kUnreached) out << "unwitnessed";
        else out << e.m_alpha;
        out << '\n';
    }
}

}  // namespace holonomy
