#include "holonomy/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "holonomy/errors.hpp"
#include "holonomy/rng.hpp"

namespace holonomy {

ColoredGraph make_cycle_block(std::uint64_t half_length) {
    if (half_length < 2) fail(ErrorKind::Config, "cycle block needs half-length >= 2");
    const std::uint64_t n = 2 * half_length;
    if (n >= kNoVertex) fail(ErrorKind::Budget, "cycle block too large for 32-bit ids");
    ColoredGraph g(n);
    for (VertexId j = 0; j < n; ++j) {
        const VertexId next = static_cast<VertexId>((j + 1) % n);
        g.add_edge(j, next, j % 2 == 0 ? Color::A : Color::B);
    }
    return g;
}

namespace {

constexpr int kBase = 14;
constexpr std::array<int, 3> kLineOffset{0, 1, 3};  // point i ~ line i + offset, per color

// Offset of each base vertex along the lifted A/B cycle, which visits
// p0 l0 p6 l6 p5 l5 ... p1 l1 and then drops one sheet.
constexpr int point_offset(int i) { return i == 0 ? 0 : 2 * (7 - i); }
constexpr int line_offset(int j) { return point_offset(j) + 1; }

struct Voltages {
    std::array<std::int32_t, 7> chord{};
};

std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// Cover with sheets t = 0..M-1; ids follow the lifted Hamiltonian cycle:
// base vertex with offset k in sheet t sits at position k - 14t (mod 14M).
ColoredGraph build_cover(const Voltages& volt, std::uint64_t sheets) {
    const std::int64_t m = static_cast<std::int64_t>(sheets);
    const std::int64_t n = kBase * m;
    ColoredGraph g(static_cast<std::size_t>(n));
    auto pos = [&](int offset, std::int64_t t) {
        return static_cast<VertexId>(mod(offset - kBase * t, n));
    };
    for (std::int64_t t = 0; t < m; ++t) {
        for (int i = 0; i < 7; ++i) {
            const VertexId p = pos(point_offset(i), t);
            // A keeps the sheet; B from p0 climbs one sheet so that the A/B
            // cycle closes only after all M sheets.
            g.add_edge(p, pos(line_offset(i), t), Color::A);
            g.add_edge(p, pos(line_offset((i + kLineOffset[1]) % 7), t + (i == 0 ? 1 : 0)), Color::B);
            g.add_edge(p, pos(line_offset((i + kLineOffset[2]) % 7), t + volt.chord[i]), Color::C);
        }
    }
    return g;
}

// Span of each chord along the cycle in the infinite cyclic cover.
std::uint32_t min_span(const Voltages& volt) {
    std::int64_t best = INT64_MAX;
    for (int i = 0; i < 7; ++i) {
        const std::int64_t span =
            std::llabs(line_offset((i + kLineOffset[2]) % 7) - point_offset(i) - kBase * std::int64_t{volt.chord[i]});
        best = std::min(best, span);
    }
    return static_cast<std::uint32_t>(best);
}

// Every vertex is a shift of one of ids 0..13, so probing those is exact.
Distance cover_girth(const ColoredGraph& g, Distance cap) {
    CycleProbe probe(g.vertex_count());
    Distance best = cap;
    for (VertexId v = 0; v < kBase; ++v) best = std::min(best, probe.shortest_cycle_at(g, v, best));
    return best;
}

std::uint64_t test_sheets(Distance girth_target, std::int32_t bound) {
    // A closed walk shorter than the target has |voltage sum| < target * bound,
    // so it closes in this cover iff it closes in the infinite one.
    return static_cast<std::uint64_t>(girth_target) * static_cast<std::uint64_t>(std::max(bound, 1)) + 1;
}

}  // namespace

CubicBlock make_cubic_block(const CubicBlockOptions& opt) {
    if (opt.girth_target < 3) fail(ErrorKind::Config, "girth target must be at least 3");
    if (opt.chord_span % 2 == 0) fail(ErrorKind::Config, "chord span must be odd");
    if (opt.chord_span + 1 < opt.girth_target) fail(ErrorKind::Config, "chord span must be at least girth - 1");
    if (opt.min_diameter < 1) fail(ErrorKind::Config, "block diameter must be at least 1");
    if (opt.voltage_bound < 1) fail(ErrorKind::Config, "voltage bound must be positive");

    struct Hit {
        Voltages volt;
        double sheets_per_unit;  // sheets needed per unit of eccentricity
        std::uint32_t span;
    };
    std::vector<Hit> hits;
    Rng rng(opt.seed);
    std::uint64_t draws = 0;
    std::int32_t bound = opt.voltage_bound;
    for (int round = 0; round < 4 && hits.size() < opt.candidates; ++round, ++bound) {
        const std::uint64_t sheets = test_sheets(opt.girth_target, bound);
        for (std::uint32_t k = 0; k < opt.draws_per_bound && hits.size() < opt.candidates; ++k) {
            ++draws;
            Voltages volt;
            for (auto& v : volt.chord) v = static_cast<std::int32_t>(rng.between(-bound, bound));
            const std::uint32_t span = min_span(volt);
            if (span < opt.chord_span) continue;
            const auto g = build_cover(volt, sheets);
            if (cover_girth(g, opt.girth_target) < opt.girth_target) continue;
            const std::uint64_t eval = std::max<std::uint64_t>(sheets, 160);
            const auto probe = build_cover(volt, eval);
            const Distance ecc = eccentricity(probe, 0).value;
            hits.push_back({volt, static_cast<double>(eval) / std::max<Distance>(ecc, 1), span});
        }
    }
    if (hits.empty()) {
        std::ostringstream msg;
        msg << "no cubic block with girth >= " << opt.girth_target << " and chord span >= " << opt.chord_span
            << " after " << draws << " voltage draws";
        fail(ErrorKind::Budget, msg.str());
    }
    const auto best = *std::min_element(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.sheets_per_unit < b.sheets_per_unit;
    });

    std::int32_t max_volt = 1;
    for (auto v : best.volt.chord) max_volt = std::max(max_volt, std::abs(v));
    const std::uint64_t floor_sheets = test_sheets(opt.girth_target, max_volt);
    auto check_budget = [&](std::uint64_t sheets) {
        if (sheets * kBase > opt.max_vertices || sheets * kBase >= kNoVertex) {
            std::ostringstream msg;
            msg << "cubic block with diameter >= " << opt.min_diameter << " needs about " << sheets * kBase
                << " vertices, over the budget of " << opt.max_vertices;
            fail(ErrorKind::Budget, msg.str());
        }
    };

    std::uint64_t sheets = std::max<std::uint64_t>(
        floor_sheets, static_cast<std::uint64_t>(best.sheets_per_unit * opt.min_diameter) + 1);
    check_budget(sheets);
    auto g = build_cover(best.volt, sheets);
    Distance ecc = eccentricity(g, 0).value;
    while (ecc < opt.min_diameter) {
        sheets += static_cast<std::uint64_t>(best.sheets_per_unit * (opt.min_diameter - ecc)) + 1;
        check_budget(sheets);
        g = build_cover(best.volt, sheets);
        ecc = eccentricity(g, 0).value;
    }
    // Local downward search; the eccentricity grows almost linearly in M.
    for (int step = 0; step < 4 && sheets > floor_sheets; ++step) {
        auto smaller = build_cover(best.volt, sheets - 1);
        const Distance e = eccentricity(smaller, 0).value;
        if (e < opt.min_diameter) break;
        g = std::move(smaller);
        ecc = e;
        --sheets;
    }

    CubicBlock out;
    out.girth = cover_girth(g, kUnreached);
    if (out.girth < opt.girth_target) {
        std::ostringstream msg;
        msg << "cubic block girth " << out.girth << " below target " << opt.girth_target;
        fail(ErrorKind::Invariant, msg.str());
    }
    out.graph = std::move(g);
    out.sheets = sheets;
    out.voltages = best.volt.chord;
    out.diameter_bound = ecc;
    out.min_chord_span = best.span;
    out.draws = draws;
    return out;
}

}  // namespace holonomy
