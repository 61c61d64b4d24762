#include "holonomy/construction.hpp"

#include <algorithm>
#include <sstream>

#include "holonomy/action.hpp"
#include "holonomy/blocks.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/words.hpp"

namespace holonomy {

std::string to_string(ScheduleMode mode) { return mode == ScheduleMode::Paper ? "paper" : "desk"; }

ScheduleMode schedule_mode_from_string(const std::string& text) {
    if (text == "paper") return ScheduleMode::Paper;
    if (text == "desk") return ScheduleMode::Desk;
    fail(ErrorKind::Config, "schedule must be 'paper' or 'desk', got '" + text + "'");
}

void ConstructionConfig::validate() const {
    if (schedule == ScheduleMode::Paper && m <= 10) fail(ErrorKind::Config, "paper schedule requires m > 10");
    if (m < 1) fail(ErrorKind::Config, "m must be positive");
    if (levels < 1) fail(ErrorKind::Config, "levels must be at least 1");
    if (levels > 1000) fail(ErrorKind::Config, "levels must be at most 1000");
    if (diam_multiplier < 2) fail(ErrorKind::Config, "diameter multiplier must be at least 2");
    if (girth_target < 3) fail(ErrorKind::Config, "girth target must be at least 3");
    if (chord_span % 2 == 0) fail(ErrorKind::Config, "chord span must be odd");
    if (chord_span + 1 < girth_target) fail(ErrorKind::Config, "chord span must be at least girth - 1");
    if (max_vertices < 4) fail(ErrorKind::Config, "vertex budget too small");
}

namespace {

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}

[[noreturn]] void schedule_overflow(std::uint32_t i, std::uint64_t previous_size) {
    std::ostringstream msg;
    msg << "schedule infeasible at stage " << i << ": s_" << i << " overflows 64 bits (|V(G_" << i - 1
        << ")| = " << previous_size << ")";
    fail(ErrorKind::Budget, msg.str());
}

}  // namespace

std::uint64_t schedule_scale(const ConstructionConfig& config, std::uint32_t i, std::uint64_t previous_size) {
    std::uint64_t s = 1;
    if (config.schedule == ScheduleMode::Desk) {
        if (mul_overflows(config.m, std::max<std::uint64_t>(previous_size, 1), s)) schedule_overflow(i, previous_size);
        return s;
    }
    // m^i * 2^|V(G_{i-1})|
    for (std::uint32_t k = 0; k < i; ++k)
        if (mul_overflows(s, config.m, s)) schedule_overflow(i, previous_size);
    if (previous_size >= 64 || (s >> (64 - previous_size)) != 0) schedule_overflow(i, previous_size);
    return s << previous_size;
}

IdRange BuildLog::omega(std::uint32_t n) const {
    if (n == 0) return {p, p + 1};
    return stage(n).omega;
}

std::uint64_t BuildLog::size(std::uint32_t n) const { return n == 0 ? 1 : stage(n).graph_size; }

namespace {

std::uint64_t stage_seed(std::uint64_t seed, std::uint32_t n) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (n + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void check_budget(const ConstructionConfig& config, std::uint64_t total, std::uint32_t n) {
    if (total > config.max_vertices) {
        std::ostringstream msg;
        msg << "stage " << n << " needs " << total << " vertices, over the budget of " << config.max_vertices;
        fail(ErrorKind::Budget, msg.str());
    }
}

StageLog stage_one(ColoredGraph& g, BuildLog& log) {
    // p = 0, triangle 1 2 3 with q = 1 and r_1 = 2.
    log.p = g.add_vertex({0, Role::G0, 0});
    const VertexId q = g.add_vertices(3, {1, Role::H, 0});
    g.add_edge(q, q + 1, Color::A);
    g.add_edge(q + 1, q + 2, Color::B);
    g.add_edge(q + 2, q, Color::C);
    g.add_edge(log.p, q, Color::D);
    StageLog st;
    st.stage = 1;
    st.h = {q, q + 3};
    st.omega = st.h;
    st.r = q + 1;
    g.set_meta(st.r, {1, Role::Frontier, 0});
    st.block = {"triangle", 1, 3, 0, {}, 0};
    st.graph_size = g.vertex_count();
    st.attachment_ratio = 1.0 / 3.0;
    st.outside_fraction = 1.0 / 4.0;
    return st;
}

struct Block {
    ColoredGraph graph;
    BlockInfo info;
};

Block make_block(const ConstructionConfig& config, std::uint32_t n, std::uint64_t scale, std::uint64_t room) {
    std::uint64_t need = 0;
    if (mul_overflows(config.diam_multiplier, scale, need) || need >= kNoVertex / 4) {
        std::ostringstream msg;
        msg << "stage " << n << " block needs diameter above " << config.diam_multiplier << " * " << scale;
        fail(ErrorKind::Budget, msg.str());
    }
    const auto min_diam = static_cast<Distance>(need + 1);
    Block out;
    if (n % 2 == 0) {
        if (2 * std::uint64_t{min_diam} > room) {
            std::ostringstream msg;
            msg << "stage " << n << " cycle block needs " << 2 * std::uint64_t{min_diam}
                << " vertices, over the remaining budget of " << room;
            fail(ErrorKind::Budget, msg.str());
        }
        out.graph = make_cycle_block(min_diam);
        out.info = {"cycle", min_diam, 2 * min_diam, 0, {}, 0};
    } else {
        CubicBlockOptions opt;
        opt.min_diameter = min_diam;
        opt.girth_target = config.girth_target;
        opt.chord_span = config.chord_span;
        opt.seed = stage_seed(config.seed, n);
        opt.max_vertices = room;
        auto cubic = make_cubic_block(opt);
        out.graph = std::move(cubic.graph);
        out.info = {"cubic", cubic.diameter_bound, cubic.girth, cubic.sheets, cubic.voltages, cubic.min_chord_span};
    }
    return out;
}

// Word path for w at x. Returns the path vertices and the witness.
WordPath attach_word(ColoredGraph& g, std::uint32_t n, VertexId x, std::uint64_t index) {
    const Word w = nth_word(index);
    WordPath wp;
    wp.index = index;
    wp.text = w.str();
    wp.anchor = x;
    const std::size_t k = w.length();
    const VertexMeta meta{static_cast<std::uint16_t>(n), Role::WordPath, 0};
    if (w.applied(1) != Color::D) {
        // x -D- y0 -w1- y1 -w2- ... -wk- yk; the word moves y0 to yk.
        const VertexId y0 = g.add_vertices(k + 1, meta);
        g.add_edge(x, y0, Color::D);
        for (std::size_t i = 1; i <= k; ++i) g.add_edge(y0 + i - 1, y0 + i, w.applied(i));
        for (std::size_t i = 0; i <= k; ++i) wp.path.push_back(y0 + i);
        wp.witness = y0;
    } else {
        // x -D- y1 -w2- y2 ... -wk- yk; the word moves x to yk.
        const VertexId y1 = g.add_vertices(k, meta);
        g.add_edge(x, y1, Color::D);
        for (std::size_t i = 2; i <= k; ++i) g.add_edge(y1 + i - 2, y1 + i - 1, w.applied(i));
        for (std::size_t i = 0; i < k; ++i) wp.path.push_back(y1 + i);
        wp.witness = x;
    }
    return wp;
}

StageLog stage_n(ColoredGraph& g, BuildLog& log, std::uint32_t n) {
    const auto& config = log.config;
    StageLog st;
    st.stage = n;
    const StageLog& prev = log.stage(n - 1);
    for (std::uint32_t i = 1; i <= n; ++i) st.scales.push_back(schedule_scale(config, i, log.size(i - 1)));
    const VertexId base = static_cast<VertexId>(g.vertex_count());
    check_budget(config, base, n);
    Block block = make_block(config, n, st.scales.back(), config.max_vertices - base);
    const ColoredGraph& h = block.graph;

    const NetSchedule schedule(st.scales);
    NetPartition parts = partition_nets(h, schedule, block.info.diameter_bound, config.diam_multiplier);

    std::uint64_t total = base + h.vertex_count();
    for (std::uint32_t i = 1; i < n; ++i) total += parts.parts[i - 1].members.size() * log.size(i - 1);
    total += nth_word(n - 1).length() + 1;
    check_budget(config, total, n);

    // H_n
    g.append_copy(h, {static_cast<std::uint16_t>(n), Role::H, 0});
    st.h = {base, static_cast<VertexId>(base + h.vertex_count())};
    for (std::size_t i = 0; i < parts.parts.size(); ++i) {
        const VertexMeta meta{static_cast<std::uint16_t>(n), Role::NetPart, static_cast<std::uint16_t>(i + 1)};
        for (VertexId v : parts.parts[i].members) g.set_meta(base + v, meta);
    }
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const auto& part = parts.parts[i];
        NetDiagnostics nd;
        nd.scale = schedule[i];
        nd.count = part.members.size();
        nd.min_separation = part.min_separation;
        nd.covering_radius = part.covering_radius;
        const auto density = check_density(h, part.members, schedule[i], block.info.diameter_bound);
        nd.density = density.ratio;
        nd.density_hypotheses = density.hypotheses_hold;
        nd.density_passed = density.passed;
        if (density.hypotheses_hold && !density.passed) {
            std::ostringstream msg;
            msg << "stage " << n << ": R_" << i + 1 << " violates the density bound (" << density.ratio << ")";
            fail(ErrorKind::Invariant, msg.str());
        }
        st.net_checks.push_back(nd);
        std::vector<VertexId> global(part.members.size());
        std::transform(part.members.begin(), part.members.end(), global.begin(),
                       [&](VertexId v) { return base + v; });
        st.nets.push_back(std::move(global));
    }
    const auto& remainder = parts.parts.back().members;
    st.remainder_count = remainder.size();
    if (remainder.size() < 2) {
        std::ostringstream msg;
        msg << "stage " << n << ": R_" << n + 1 << " has " << remainder.size() << " vertices, need x_n and r_n";
        fail(ErrorKind::Invariant, msg.str());
    }

    // Copies of G_{i-1} hang from every point of R^n_i by their distinguished vertex.
    for (std::uint32_t i = 1; i < n; ++i) {
        CopyGroup group;
        group.of = i - 1;
        group.size = log.size(i - 1);
        group.root = i == 1 ? log.p : log.stage(i - 1).r;
        group.first = static_cast<VertexId>(g.vertex_count());
        const VertexMeta meta{static_cast<std::uint16_t>(n), Role::Copy, static_cast<std::uint16_t>(i - 1)};
        for (VertexId v : st.nets[i - 1]) {
            const VertexId offset = g.append_copy(g, group.size, meta);
            g.add_edge(v, offset + group.root, Color::D);
            group.attach.push_back(v);
        }
        st.copies.push_back(std::move(group));
    }

    // The previous G_{n-1} itself, at r_{n-1}, to the lowest point of R^n_n.
    if (st.nets[n - 1].empty()) fail(ErrorKind::Invariant, "stage " + std::to_string(n) + ": R_n is empty");
    st.prev_attach = st.nets[n - 1].front();
    st.prev_root = prev.r;
    g.add_edge(st.prev_root, st.prev_attach, Color::D);

    // x_n: lowest point of R^n_{n+1}; r_n: farthest other point from it in H_n.
    const VertexId x_local = remainder.front();
    st.x = base + x_local;
    const auto dist = bfs_distances(h, x_local);
    VertexId r_local = remainder[1];
    for (VertexId v : remainder) {
        if (v == x_local) continue;
        if (dist[v] != kUnreached && (dist[r_local] == kUnreached || dist[v] > dist[r_local])) r_local = v;
    }
    st.r = base + r_local;
    g.set_meta(st.x, {static_cast<std::uint16_t>(n), Role::PathAnchor, 0});
    g.set_meta(st.r, {static_cast<std::uint16_t>(n), Role::Frontier, 0});
    st.word = attach_word(g, n, st.x, n - 1);

    st.block = block.info;
    st.graph_size = g.vertex_count();
    st.omega = {base, static_cast<VertexId>(g.vertex_count())};
    const double outside = static_cast<double>(st.graph_size - h.vertex_count());
    st.attachment_ratio = outside / static_cast<double>(h.vertex_count());
    st.outside_fraction = outside / static_cast<double>(st.graph_size);
    return st;
}

}  // namespace

BuildResult build(const ConstructionConfig& config) {
    config.validate();
    BuildResult out;
    out.log.config = config;
    out.log.stages.push_back(stage_one(out.graph, out.log));
    for (std::uint32_t n = 2; n <= config.levels; ++n) out.log.stages.push_back(stage_n(out.graph, out.log, n));
    if (!is_proper(out.graph)) fail(ErrorKind::Invariant, "built graph is not properly colored");
    out.graph.freeze();
    return out;
}

std::vector<WitnessResult> faithfulness_witnesses(const ColoredGraph& g, const BuildLog& log, std::uint32_t n_max) {
    std::vector<WitnessResult> out;
    for (const auto& st : log.stages) {
        if (!st.word || st.word->index > n_max) continue;
        WitnessResult r;
        r.index = st.word->index;
        r.word = st.word->text;
        r.start = st.word->witness;
        r.image = apply(g, Word::parse(r.word), r.start);
        r.moved = r.image != r.start;
        out.push_back(r);
    }
    return out;
}

std::vector<BoundaryFacts> boundary_facts(const ColoredGraph& g, const BuildLog& log) {
    std::vector<BoundaryFacts> out;
    const std::uint32_t levels = log.levels();
    std::vector<bool> member(g.vertex_count());
    for (std::uint32_t n = 0; n <= levels; ++n) {
        BoundaryFacts f;
        f.stage = n;
        const auto size = log.size(n);
        for (VertexId v = 0; v < g.vertex_count(); ++v) member[v] = v < size;
        f.graph_boundary = boundary(g, member);
        if (n == levels) {
            // G_N is everything; its frontier is r_N provided r_N can still take a D-edge.
            const VertexId r = log.frontier();
            if (f.graph_boundary.empty() && !g.has_edge(r, Color::D)) f.graph_boundary = {r};
        }
        const auto omega = log.omega(n);
        for (VertexId v = 0; v < g.vertex_count(); ++v) member[v] = omega.contains(v);
        f.omega_boundary = boundary(g, member);
        f.decay = static_cast<double>(f.graph_boundary.size()) / static_cast<double>(size);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace holonomy
