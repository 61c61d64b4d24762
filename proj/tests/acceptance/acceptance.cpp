// Acceptance run: one PASS/FAIL line per check, then one line per criterion.
// Exit status is nonzero iff any line failed.
#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "holonomy/action.hpp"
#include "holonomy/ball.hpp"
#include "holonomy/construction.hpp"
#include "holonomy/dihedral.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/nets.hpp"
#include "holonomy/typespace.hpp"
#include "holonomy/verify.hpp"

using namespace holonomy;
using namespace holonomy::testing;

namespace tol {
// Criterion 4.
constexpr std::uint32_t kSeparationRadius = 6;
constexpr std::uint32_t kHolonomyRadius = 2;
constexpr double kDihedralGrowth = 1.5;
constexpr double kCiSeconds = 120.0;
// Criterion 5.
constexpr double kEdgeMeasureMu1Max = 1.10;
constexpr double kFreeFractionMu2Min = 0.85;
constexpr double kCostMu2Min = 1.35;
constexpr double kGapMin = 0.25;
constexpr double kTvMin = 0.5;
constexpr std::uint32_t kTypeRadius = 2;
constexpr std::uint32_t kFreeRadius = 5;
constexpr double kDefaultSeconds = 600.0;
constexpr double kMemoryGiB = 8.0;
// Two-route edge measures and the counted edge measure agree to rounding.
constexpr double kCountTolerance = 1e-12;
// Slack on e(Omega_2) <= 1 + 2/m for the paper-schedule build.
constexpr double kPaperEdgeSlack = 0.01;
}  // namespace tol

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double peak_gib() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return static_cast<double>(u.ru_maxrss) / (1024.0 * 1024.0);
}

class Board {
public:
    void line(int criterion, const std::string& id, bool pass, const std::string& detail) {
        std::printf("%s  %-5s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
        std::fflush(stdout);
        auto& c = criteria_[criterion];
        c.first += pass;
        c.second += 1;
    }
    int summary() const {
        bool all = true;
        for (const auto& [k, c] : criteria_) {
            const bool pass = c.first == c.second;
            all = all && pass;
            std::printf("%s  criterion %d (%d/%d)\n", pass ? "PASS" : "FAIL", k, c.first, c.second);
        }
        return all ? 0 : 1;
    }

private:
    std::map<int, std::pair<int, int>> criteria_;
};

std::string fmt(double x, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << x;
    return s.str();
}

const CheckResult& check(const std::string& name, const std::vector<CheckResult>& checks) {
    static const CheckResult missing{"missing", false, "check not run"};
    for (const auto& c : checks)
        if (c.name == name) return c;
    return missing;
}

std::string with_detail(const std::string& text, const CheckResult& c) {
    return c.detail.empty() ? text : text + " [" + c.detail + "]";
}

ConstructionConfig ci_config(std::uint64_t seed) {
    ConstructionConfig c;
    c.m = 11;
    c.levels = 3;
    c.schedule = ScheduleMode::Desk;
    c.diam_multiplier = 2;
    c.girth_target = 8;
    c.chord_span = 9;
    c.seed = seed;
    return c;
}

ConstructionConfig default_config(std::uint64_t seed) {
    ConstructionConfig c;
    c.seed = seed;
    return c;
}

ConstructionConfig paper_strict_config(std::uint64_t seed) {
    ConstructionConfig c;
    c.m = 12;
    c.levels = 2;
    c.schedule = ScheduleMode::Paper;
    c.seed = seed;
    return c;
}

struct NetTally {
    std::uint64_t nets = 0;
    std::uint64_t with_hypotheses = 0;
    std::uint64_t failed = 0;
};

void tally_nets(const BuildLog& log, NetTally& t) {
    for (const auto& st : log.stages)
        for (const auto& nc : st.net_checks) {
            ++t.nets;
            t.with_hypotheses += nc.density_hypotheses;
            t.failed += nc.density_hypotheses && !nc.density_passed;
        }
}

// Predictions for the measure report computed from the build log alone:
// sizes, attachment counts and word paths, never the graph.
struct Counting {
    bool sizes_consistent = true;
    std::vector<double> edge_measure;  // per stage, from edge counts
    double free_lower = 0.0;           // |H_odd| / |Ω_odd|
    double cost_lower = 0.0;
    double gap_lower = 0.0;
    double tv_lower = 0.0;
};

Counting count_from_log(const BuildLog& log, std::uint32_t even, std::uint32_t odd) {
    Counting out;
    const std::uint32_t levels = log.levels();
    std::vector<std::uint64_t> edges(levels + 1, 0);
    edges[1] = 4;  // triangle and the D-edge p-q
    out.edge_measure.assign(levels + 1, 0.0);
    std::vector<std::uint64_t> outside(levels + 1, 0), attached_h(levels + 1, 0);
    for (std::uint32_t n = 2; n <= levels; ++n) {
        const auto& st = log.stage(n);
        const std::uint64_t h = st.h.size();
        std::uint64_t e = st.block.kind == "cubic" ? 3 * h / 2 : h;
        std::uint64_t vertices = h;
        for (const auto& cg : st.copies) {
            e += cg.attach.size() * (edges[cg.of] + 1);
            vertices += cg.attach.size() * cg.size;
            attached_h[n] += cg.attach.size();
        }
        e += 1;  // G_{n-1} hangs from R_n
        attached_h[n] += 1;
        if (st.word) {
            e += st.word->path.size();  // x-D-y_0 plus one edge per further letter
            vertices += st.word->path.size();
            attached_h[n] += 1;
        }
        edges[n] = edges[n - 1] + e;
        outside[n] = vertices - h;
        out.sizes_consistent = out.sizes_consistent && vertices == st.omega.size();
        // Edge ends in Ω_n: the G_{n-1} link has one end outside, r_n's
        // later link has one end inside.
        const std::uint64_t ends = 2 * e - 1 + (n < levels ? 1 : 0);
        out.edge_measure[n] = 0.5 * static_cast<double>(ends) / static_cast<double>(st.omega.size());
    }
    const auto& so = log.stage(odd);
    // A-B-C words never leave a cubic block and cannot close within its girth.
    out.free_lower = static_cast<double>(so.h.size()) / static_cast<double>(so.omega.size());
    out.cost_lower = 1.5 * out.free_lower + (1.0 - out.free_lower);
    out.gap_lower = out.cost_lower - out.edge_measure[even];
    // Radius-2 balls of cubic-block vertices contain a C-edge. In Ω_even only
    // non-block vertices and block vertices with a D-link (counted thrice for
    // their cycle neighbours) can see one.
    const auto& se = log.stage(even);
    const double mu1_c = std::min(1.0, static_cast<double>(outside[even] + 3 * attached_h[even]) /
                                           static_cast<double>(se.omega.size()));
    out.tv_lower = out.free_lower - mu1_c;
    return out;
}

void criterion2(Board& board) {
    const auto t0 = Clock::now();
    {
        Rng rng(1234);
        int mismatches = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 4 + rng.below(47);
            const auto g = random_proper_graph(rng, n, 0.4 + 0.1 * static_cast<double>(rng.below(6)));
            const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng.below(3));
            const VertexId x = static_cast<VertexId>(rng.below(n));
            VertexId y = static_cast<VertexId>(rng.below(n));
            RootedBall a = ball(g, x, r), b;
            if (trial % 2 == 0) {
                const auto perm = shuffled(rng, n);
                b = ball(relabel(g, perm), perm[x], r);
            } else {
                b = ball(g, y, r);
            }
            if (a.size() > 12 || b.size() > 12) {
                a = ball(g, x, 1);
                b = trial % 2 == 0 ? a : ball(g, y, 1);
            }
            mismatches += (canonical_code(a) == canonical_code(b)) != IsoSearch(a, b).run();
        }
        board.line(2, "2.1", mismatches == 0,
                   "canonical code vs exhaustive rooted isomorphism: 1000 cases, " + std::to_string(mismatches) +
                       " mismatches");
    }
    {
        Rng rng(2024);
        std::vector<std::vector<std::string>> words(7);
        for (std::size_t k = 1; k <= 6; ++k) words[k] = brute_words("ABC", k);
        std::uint64_t cases = 0, mismatches = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 6 + rng.below(45);
            const auto g = random_proper_graph(rng, n, 0.55 + 0.05 * static_cast<double>(rng.below(9)));
            for (VertexId x = 0; x < n; ++x)
                for (std::uint32_t k = 1; k <= 6; ++k, ++cases) mismatches += is_free(g, x, k) != brute_free(g, x, words[k]);
        }
        board.line(2, "2.2", mismatches == 0,
                   "is_free vs word enumeration, k <= 6: " + std::to_string(cases) + " cases, " +
                       std::to_string(mismatches) + " mismatches");
    }
    {
        Rng rng(31);
        int bad = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 4 + rng.below(13);
            const auto g = random_connected_graph(rng, n, 0.3);
            const Distance spacing = 2 + static_cast<Distance>(rng.below(4));
            bad += all_maximal_nets(g, spacing).count(greedy_maximal_net(g, spacing)) != 1;
        }
        board.line(2, "2.3", bad == 0, "greedy nets vs exhaustive maximal nets: 200 graphs, " + std::to_string(bad) +
                                           " not maximal");
    }
    board.line(2, "2.4", seconds_since(t0) < 60.0, "oracle runtime " + fmt(seconds_since(t0), 1) + " s < 60 s");
}

void criterion6(Board& board, const ColoredGraph& g, const BuildLog& log, const std::vector<CheckResult>& checks) {
    board.line(6, "6.1", check("refinement", checks).passed, "type partitions refine across radii 0..6 (CI build)");
    board.line(6, "6.2", check("free_fraction_monotone", checks).passed,
               with_detail("free fraction non-increasing in k on the last stage", check("free_fraction_monotone", checks)));
    Rng rng(44);
    bool in_range = true;
    for (int i = 0; i <= 10000; ++i) {
        const double c = cost_estimate(static_cast<double>(rng.below(1'000'001)) / 1e6);
        in_range = in_range && c >= 1.0 && c <= 1.5;
    }
    in_range = in_range && cost_estimate(0.0) == 1.0 && cost_estimate(1.0) == 1.5;
    board.line(6, "6.3", in_range, "cost estimate within [1, 3/2] on 10001 fractions and both ends");
    bool equal = check("edge_measure_two_route", checks).passed;
    const auto table = compute_types(g, 3);
    for (std::uint32_t n = 0; n <= log.levels(); ++n) {
        const auto omega = range_vertices(log.omega(n));
        for (std::uint32_t r = 0; r <= 3; ++r)
            equal = equal && edge_measure(empirical_measure(table, omega, r)) == edge_measure_direct(g, omega);
    }
    board.line(6, "6.4", equal, "type-based and direct edge measures equal on every stage, r <= 3, exactly");
}

void criterion4(Board& board, std::uint64_t seed, std::vector<CheckResult>& ci_checks, BuildResult& ci) {
    const auto t0 = Clock::now();
    ci = build(ci_config(seed));
    const auto& g = ci.graph;
    const auto& log = ci.log;
    ci_checks = verify_build(g, log);
    const auto table = compute_types(g, tol::kSeparationRadius);
    const auto stable = stable_region(g, log.frontier(), tol::kSeparationRadius, log.size(1));
    const auto gen = genericity_report(table, stable);
    board.line(4, "4.1", gen.passed && !stable.empty(),
               std::to_string(g.vertex_count()) + " vertices; stable G_1 (" + std::to_string(stable.size()) +
                   " vertices) separated at r = " +
                   (gen.separating_radius ? std::to_string(*gen.separating_radius) : std::string("none")) +
                   " <= " + std::to_string(tol::kSeparationRadius));
    std::size_t types = 0, unwitnessed = 0;
    Distance worst = 0;
    for (std::uint32_t r = 0; r <= tol::kHolonomyRadius; ++r)
        for (const auto& e : holonomy_report(g, table, r, stable)) {
            ++types;
            if (e.m_alpha == kUnreached) ++unwitnessed;
            else worst = std::max(worst, e.m_alpha);
        }
    board.line(4, "4.2", unwitnessed == 0 && types > 0,
               std::to_string(types) + " types at r <= 2 on stable vertices, all with finite m_alpha (max " +
                   std::to_string(worst) + ")");
    const auto d1 = dihedral_demo(100, tol::kHolonomyRadius, 100);
    const auto d2 = dihedral_demo(200, tol::kHolonomyRadius, 200);
    const double growth = static_cast<double>(d2.m_alpha_vertex1) / static_cast<double>(std::max<Distance>(d1.m_alpha_vertex1, 1));
    board.line(4, "4.3", growth >= tol::kDihedralGrowth && !d1.generic && !d2.generic,
               "dihedral m_alpha " + std::to_string(d1.m_alpha_vertex1) + " (n=100) -> " +
                   std::to_string(d2.m_alpha_vertex1) + " (n=200), ratio " + fmt(growth, 2) + " >= 1.5; largest class " +
                   std::to_string(d2.largest_class));
    const double secs = seconds_since(t0);
    board.line(4, "4.4", secs <= tol::kCiSeconds, "CI pipeline " + fmt(secs, 1) + " s <= 120 s");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::uint64_t seed = 42;
    bool skip_default = false;
    app.add_option("--seed", seed, "Seed for every build")->capture_default_str();
    app.add_flag("--skip-default", skip_default, "Skip the multi-million-vertex default build (its lines fail)");
    CLI11_PARSE(app, argc, argv);

    Board board;
    NetTally nets;

    // Small instances first.
    criterion2(board);
    BuildResult ci;
    std::vector<CheckResult> ci_checks;
    criterion4(board, seed, ci_checks, ci);
    tally_nets(ci.log, nets);
    criterion6(board, ci.graph, ci.log, ci_checks);

    const auto paper = build(paper_strict_config(seed));
    const auto paper_checks = verify_build(paper.graph, paper.log);
    tally_nets(paper.log, nets);
    {
        const auto& st = paper.log.stage(2);
        const std::uint64_t out = st.graph_size - st.h.size();
        board.line(1, "1.6", out * 12 < st.graph_size,
                   "paper schedule m = 12, stage 2: |G_2 \\ H_2| / |G_2| = " + std::to_string(out) + "/" +
                       std::to_string(st.graph_size) + " = " + fmt(st.outside_fraction, 5) + " < 1/12");
        const auto omega = range_vertices(paper.log.omega(2));
        const double e = edge_measure_direct(paper.graph, omega);
        const double bound = 1.0 + 2.0 / 12.0 + tol::kPaperEdgeSlack;
        board.line(1, "1.7", e >= 1.0 && e <= bound,
                   "paper schedule m = 12: e(Omega_2) = " + fmt(e, 5) + " in [1, " + fmt(bound, 5) + "]");
    }

    Rng rng(77);
    int random_hyp = 0, random_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 20 + rng.below(400);
        const auto g = random_connected_graph(rng, n, 0.05 * static_cast<double>(rng.below(4)));
        const std::uint64_t d = 3 + rng.below(6);
        const auto c = check_density(g, greedy_maximal_net(g, 2 * d), d);
        random_hyp += c.hypotheses_hold;
        random_bad += c.hypotheses_hold && !c.passed;
    }

    if (skip_default) {
        for (const char* id : {"1.1", "1.2", "1.3", "1.4", "1.5", "3.1", "3.2", "3.3", "5.0", "5.1"})
            board.line(id[0] - '0', id, false, "skipped (default build not run)");
        return board.summary();
    }

    const auto t0 = Clock::now();
    const auto def = build(default_config(seed));
    const double build_secs = seconds_since(t0);
    const auto& g = def.graph;
    const auto& log = def.log;
    const auto checks = verify_build(g, log);
    tally_nets(log, nets);

    const bool all_partitions = check("net_partitions", checks).passed && check("net_partitions", ci_checks).passed &&
                                check("net_partitions", paper_checks).passed;
    board.line(1, "1.1", nets.failed == 0 && random_bad == 0 && all_partitions,
               std::to_string(nets.nets) + " built nets (" + std::to_string(nets.with_hypotheses) +
                   " meeting the hypotheses) and " + std::to_string(random_hyp) +
                   " of 200 random graphs: |A|/|V| <= 1/d everywhere");
    board.line(1, "1.2", all_partitions, with_detail("each R_i a 2s_i-net covering within 10 s_i on every H_n",
                                                     check("net_partitions", checks)));
    board.line(1, "1.3", check("pushforward_defect", checks).passed,
               with_detail("pushforward defect <= 2|dOmega_n| for A-D, r <= 4, n <= 3 (" +
                               std::to_string(g.vertex_count()) + " vertices)",
                           check("pushforward_defect", checks)));
    board.line(1, "1.4", check("boundary_graph", checks).passed && check("boundary_omega", checks).passed,
               "dG_n = {r_n} and |dOmega_n| <= 2 for n <= 3");
    board.line(1, "1.5", check("d_bridges", checks).passed && check("d_edges_are_attachments", checks).passed,
               "every D-edge is a bridge and an attachment");

    board.line(3, "3.1", check("faithfulness", checks).passed,
               with_detail("each enumerated word moves its witness", check("faithfulness", checks)));
    board.line(3, "3.2", check("transitivity", checks).passed, "orbit of vertex 0 is the whole graph");
    board.line(3, "3.3", check("folner_decay", checks).passed, "|dG_n|/|V(G_n)| strictly decreasing");

    const auto table = compute_types(g, tol::kTypeRadius);
    const auto rep = gap_report(g, log, table, tol::kTypeRadius, tol::kFreeRadius);
    const auto count = count_from_log(log, rep.even_stage, rep.odd_stage);
    const bool predicted = count.edge_measure[rep.even_stage] <= tol::kEdgeMeasureMu1Max &&
                           count.free_lower >= tol::kFreeFractionMu2Min && count.cost_lower >= tol::kCostMu2Min &&
                           count.gap_lower >= tol::kGapMin && count.tv_lower >= tol::kTvMin;
    const bool agrees = count.sizes_consistent &&
                        std::fabs(count.edge_measure[rep.even_stage] - rep.edge_measure_mu1) <= tol::kCountTolerance &&
                        std::fabs(count.edge_measure[rep.odd_stage] - rep.edge_measure_mu2) <= tol::kCountTolerance &&
                        rep.free_fraction_mu2 >= count.free_lower && rep.tv_distance >= count.tv_lower;
    board.line(5, "5.0", predicted && agrees,
               "counting pass over the log: e1 " + fmt(count.edge_measure[rep.even_stage]) + ", free >= " +
                   fmt(count.free_lower) + ", cost >= " + fmt(count.cost_lower) + ", gap >= " + fmt(count.gap_lower) +
                   ", tv >= " + fmt(count.tv_lower) + (agrees ? "; measured values agree" : "; MEASURED VALUES DISAGREE"));
    board.line(5, "5.1", rep.edge_measure_mu1 <= tol::kEdgeMeasureMu1Max,
               "edge_measure(mu1, Omega_" + std::to_string(rep.even_stage) + ") = " + fmt(rep.edge_measure_mu1) + " <= 1.10");
    board.line(5, "5.2", rep.free_fraction_mu2 >= tol::kFreeFractionMu2Min,
               "free_fraction(Omega_" + std::to_string(rep.odd_stage) + ", 5) = " + fmt(rep.free_fraction_mu2) + " >= 0.85");
    board.line(5, "5.3", rep.cost_estimate_mu2 >= tol::kCostMu2Min,
               "cost_estimate(mu2) = " + fmt(rep.cost_estimate_mu2) + " >= 1.35");
    board.line(5, "5.4", rep.gap >= tol::kGapMin, "gap = " + fmt(rep.gap) + " >= 0.25");
    board.line(5, "5.5", rep.tv_distance >= tol::kTvMin, "TV(mu1, mu2) at r = 2 is " + fmt(rep.tv_distance) + " >= 0.5");
    const double secs = seconds_since(t0);
    const double mem = peak_gib();
    board.line(5, "5.6", secs <= tol::kDefaultSeconds && mem <= tol::kMemoryGiB,
               "default pipeline " + fmt(secs, 1) + " s (build " + fmt(build_secs, 1) + " s) <= 600 s, peak " +
                   fmt(mem, 2) + " GiB <= 8 GiB");
    return board.summary();
}
