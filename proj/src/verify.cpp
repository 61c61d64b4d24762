#include "holonomy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "holonomy/action.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/typespace.hpp"

namespace holonomy {

namespace {

class Checks {
public:
    void add(std::string name, bool passed, std::string detail = {}) {
        out_.push_back({std::move(name), passed, std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::vector<CheckResult> out_;
};

std::string join_ids(const std::vector<VertexId>& ids, std::size_t limit = 8) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < ids.size() && i < limit; ++i) s << (i ? "," : "") << ids[i];
    if (ids.size() > limit) s << ",...";
    s << '}';
    return s.str();
}

std::string log_consistency(const ColoredGraph& g, const BuildLog& log) {
    std::ostringstream err;
    if (log.p != 0) return "p is not vertex 0";
    if (log.size(log.levels()) != g.vertex_count()) {
        err << "log size " << log.size(log.levels()) << " differs from graph size " << g.vertex_count();
        return err.str();
    }
    for (std::uint32_t n = 1; n <= log.levels(); ++n) {
        const auto& st = log.stage(n);
        const IdRange expect{static_cast<VertexId>(log.size(n - 1)), static_cast<VertexId>(log.size(n))};
        if (st.omega.begin != expect.begin || st.omega.end != expect.end) {
            err << "omega_" << n << " is not [|V(G_" << n - 1 << ")|, |V(G_" << n << ")|)";
            return err.str();
        }
        if (st.h.begin != st.omega.begin || st.h.end > st.omega.end) {
            err << "H_" << n << " does not open omega_" << n;
            return err.str();
        }
        if (!st.h.contains(st.r) || (n > 1 && !st.h.contains(st.x))) {
            err << "distinguished vertices of stage " << n << " lie outside H_" << n;
            return err.str();
        }
        if (n > 1 && st.scales.size() != n) {
            err << "stage " << n << " lists " << st.scales.size() << " scales";
            return err.str();
        }
    }
    return {};
}

// D-edges of G_n: those of G_{n-1}, one per word path, and per copy of G_i
// its own D-edges plus the one hanging it. G_1 has exactly p-q.
std::string attachment_problem(const ColoredGraph& g, const BuildLog& log) {
    std::ostringstream err;
    std::vector<std::uint64_t> d_edges{0, 1};
    if (g.neighbor(log.p, Color::D) != log.stage(1).h.begin) return "p is not joined to q by D";
    for (std::uint32_t n = 2; n <= log.levels(); ++n) {
        const auto& st = log.stage(n);
        std::uint64_t expected = d_edges.back() + 2;
        for (const auto& cg : st.copies) {
            for (std::size_t j = 0; j < cg.attach.size(); ++j) {
                const VertexId root = static_cast<VertexId>(cg.first + j * cg.size + cg.root);
                if (g.neighbor(cg.attach[j], Color::D) != root) {
                    err << "stage " << n << ": copy of G_" << cg.of << " at " << cg.attach[j] << " is not D-attached";
                    return err.str();
                }
                // Copy j must reproduce the prefix G_of exactly.
                const VertexId off = static_cast<VertexId>(cg.first + j * cg.size);
                for (VertexId v = 0; v < cg.size; ++v) {
                    for (Color c : kColors) {
                        const VertexId w = g.neighbor(v, c);
                        const VertexId cw = g.neighbor(off + v, c);
                        const bool inside = w != kNoVertex && w < cg.size;
                        if (inside ? cw != off + w : (cw != kNoVertex && !(v == cg.root && c == Color::D))) {
                            err << "stage " << n << ": copy at " << off << " differs from G_" << cg.of
                                << " at local vertex " << v;
                            return err.str();
                        }
                    }
                }
            }
            expected += cg.attach.size() * (1 + d_edges.at(cg.of));
        }
        if (g.neighbor(st.prev_root, Color::D) != st.prev_attach) {
            err << "stage " << n << ": r_" << n - 1 << " is not joined to " << st.prev_attach;
            return err.str();
        }
        if (!st.word || g.neighbor(st.x, Color::D) != st.word->path.front()) {
            err << "stage " << n << ": word path is not D-attached at x_" << n;
            return err.str();
        }
        d_edges.push_back(expected);
    }
    const std::uint64_t expected = d_edges.back();
    if (g.edge_count(Color::D) != expected) {
        err << "found " << g.edge_count(Color::D) << " D-edges, expected " << expected;
        return err.str();
    }
    return {};
}

std::string block_problem(const ColoredGraph& h, const StageLog& st, const ConstructionConfig& config,
                          Distance& diameter) {
    std::ostringstream err;
    const std::uint64_t need = config.diam_multiplier * st.scales.back() + 1;
    const bool cubic = st.block.kind == "cubic";
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const bool ok = h.has_edge(v, Color::A) && h.has_edge(v, Color::B) && h.has_edge(v, Color::C) == cubic &&
                        !h.has_edge(v, Color::D);
        if (!ok) {
            err << "H_" << st.stage << " vertex " << v << " has the wrong color set for a " << st.block.kind
                << " block";
            return err.str();
        }
    }
    if (!is_connected(h)) return "H_" + std::to_string(st.stage) + " is disconnected";
    diameter = diameter_lower_bound(h);
    if (diameter < need) {
        err << "H_" << st.stage << " certified diameter " << diameter << " < " << need;
        return err.str();
    }
    if (cubic) {
        const Distance gr = girth(h, config.girth_target);
        if (gr != kUnreached) {
            err << "H_" << st.stage << " has a cycle of length " << gr << " < " << config.girth_target;
            return err.str();
        }
    }
    return {};
}

}  // namespace

std::vector<CheckResult> verify_build(const RawGraph& raw, const BuildLog& log, const VerifyOptions& options) {
    if (auto problem = properness_problem(raw); !problem.empty()) return {{"properness", false, problem}};
    return verify_build(assemble(raw), log, options);
}

std::vector<CheckResult> verify_build(const ColoredGraph& g, const BuildLog& log, const VerifyOptions& options) {
    Checks checks;
    checks.add("properness", is_proper(g));
    if (auto problem = log_consistency(g, log); !problem.empty()) {
        checks.add("log_consistency", false, problem);
        return checks.take();
    }
    checks.add("log_consistency", true);
    const std::uint32_t levels = log.levels();

    checks.add("transitivity", orbit(g, 0).size() == g.vertex_count(), "orbit of vertex 0 under A, B, C, D");
    checks.add("d_bridges", d_bridges(g));
    {
        const auto problem = attachment_problem(g, log);
        checks.add("d_edges_are_attachments", problem.empty(), problem);
    }

    // Blocks and net partitions, on each H_n alone.
    {
        std::string block_err, net_err;
        std::ostringstream detail;
        for (std::uint32_t n = 2; n <= levels && block_err.empty() && net_err.empty(); ++n) {
            const auto& st = log.stage(n);
            const auto ids = range_vertices(st.h);
            const ColoredGraph h = induced_subgraph(g, ids);
            Distance diam = 0;
            block_err = block_problem(h, st, log.config, diam);
            if (!block_err.empty()) break;
            NetPartition part;
            std::vector<bool> taken(h.vertex_count(), false);
            for (const auto& net : st.nets) {
                NetPart p;
                for (VertexId v : net) {
                    p.members.push_back(v - st.h.begin);
                    taken[v - st.h.begin] = true;
                }
                part.parts.push_back(std::move(p));
            }
            NetPart rest;
            for (VertexId v = 0; v < h.vertex_count(); ++v)
                if (!taken[v]) rest.members.push_back(v);
            part.parts.push_back(std::move(rest));
            const NetSchedule schedule(st.scales);
            net_err = verify_partition(h, schedule, part);
            for (std::size_t i = 0; i < schedule.size() && net_err.empty(); ++i) {
                const auto density = check_density(h, part.parts[i].members, schedule[i], diam);
                if (density.hypotheses_hold && !density.passed) {
                    std::ostringstream e;
                    e << "stage " << n << ": R_" << i + 1 << " density " << density.ratio << " > " << density.bound;
                    net_err = e.str();
                }
                detail << "s" << n << "_" << i + 1 << " cover " << part.parts[i].covering_radius << "/"
                       << 10 * schedule[i] << "; ";
            }
            if (!net_err.empty()) net_err = "stage " + std::to_string(n) + ": " + net_err;
        }
        checks.add("blocks", block_err.empty(), block_err);
        checks.add("net_partitions", net_err.empty(), net_err.empty() ? detail.str() : net_err);
    }

    // Boundaries and the Følner decay.
    {
        const auto facts = boundary_facts(g, log);
        std::string graph_err, omega_err, decay_err;
        for (const auto& f : facts) {
            const VertexId expect = f.stage == 0 ? log.p : log.stage(f.stage).r;
            if (graph_err.empty() && (f.graph_boundary.size() != 1 || f.graph_boundary.front() != expect))
                graph_err = "boundary of G_" + std::to_string(f.stage) + " is " + join_ids(f.graph_boundary);
            if (omega_err.empty() && f.omega_boundary.size() > 2)
                omega_err = "boundary of omega_" + std::to_string(f.stage) + " is " + join_ids(f.omega_boundary);
            if (decay_err.empty() && f.stage > 0 && !(f.decay < facts[f.stage - 1].decay))
                decay_err = "|dG_n|/|V(G_n)| does not drop at n = " + std::to_string(f.stage);
        }
        checks.add("boundary_graph", graph_err.empty(), graph_err);
        checks.add("boundary_omega", omega_err.empty(), omega_err);
        checks.add("folner_decay", decay_err.empty(), decay_err);
    }

    {
        const auto witnesses = faithfulness_witnesses(g, log, levels);
        std::string err;
        for (const auto& w : witnesses)
            if (!w.moved) err = "word " + w.word + " fixes vertex " + std::to_string(w.start);
        const bool complete = witnesses.size() + 1 == levels;
        checks.add("faithfulness", err.empty() && complete,
                   err.empty() ? std::to_string(witnesses.size()) + " words moved" : err);
    }

    {
        std::string err;
        for (std::uint32_t n = 1; n <= levels; ++n) {
            const auto& st = log.stage(n);
            const double outside = static_cast<double>(st.graph_size - st.h.size());
            const double ratio = outside / static_cast<double>(st.h.size());
            if (std::fabs(ratio - st.attachment_ratio) > 1e-12 * std::max(1.0, ratio))
                err = "stage " + std::to_string(n) + " attachment ratio differs from the log";
        }
        checks.add("attachment_ratio", err.empty(), err);
    }
    if (levels >= 2) {
        const auto& st = log.stage(2);
        if (log.config.schedule == ScheduleMode::Paper) {
            const std::uint64_t outside = st.graph_size - st.h.size();
            // Exact: outside / |V(G_2)| < 1/m.
            const bool ok = outside * log.config.m < st.graph_size;
            std::ostringstream d;
            d << outside << "/" << st.graph_size << " vs 1/" << log.config.m;
            checks.add("paper_stage2_bound", ok, d.str());
        }
        std::uint64_t heavy = 0;
        for (VertexId v = st.omega.begin; v < st.omega.end; ++v) heavy += g.degree(v) > 2;
        std::uint64_t attachments = 2;
        for (const auto& cg : st.copies) attachments += cg.attach.size();
        std::ostringstream d;
        d << heavy << " vertices of degree > 2, " << attachments << " attachments";
        checks.add("degree_excess_stage2", heavy <= 2 * attachments, d.str());
    }

    const std::uint32_t r_max = std::max(options.defect_radius + 1, options.genericity_radius);
    const auto table = compute_types(g, r_max);
    checks.add("refinement", refinement_consistent(table));
    {
        std::string err;
        std::int64_t worst = 0;
        for (std::uint32_t n = 0; n <= levels && err.empty(); ++n) {
            const auto omega = range_vertices(log.omega(n));
            for (std::uint32_t r = 0; r <= options.defect_radius && err.empty(); ++r) {
                for (Color c : kColors) {
                    const auto rep = pushforward_defect(g, table, r, c, omega);
                    worst = std::max(worst, rep.max_defect);
                    if (!rep.within_bound) {
                        std::ostringstream e;
                        e << "omega_" << n << ", r = " << r << ", " << to_char(c) << ": defect " << rep.max_defect
                          << " > 2 * " << rep.boundary;
                        err = e.str();
                        break;
                    }
                }
            }
        }
        checks.add("pushforward_defect", err.empty(), err.empty() ? "max defect " + std::to_string(worst) : err);
    }
    if (levels >= 3) {
        const auto stable = stable_region(g, log.frontier(), options.genericity_radius, log.size(levels - 2));
        const auto rep = genericity_report(table, stable);
        std::ostringstream d;
        if (rep.separating_radius) d << "separated at r = " << *rep.separating_radius;
        else d << rep.separated.back() << " of " << stable.size() << " separated at r = " << r_max;
        checks.add("genericity", rep.passed && !stable.empty(), d.str());
    }
    {
        std::string err;
        for (std::uint32_t n = 0; n <= levels && err.empty(); ++n) {
            const auto omega = range_vertices(log.omega(n));
            const double typed = edge_measure(empirical_measure(table, omega, 1));
            const double direct = edge_measure_direct(g, omega);
            if (typed != direct) err = "omega_" + std::to_string(n) + ": " + std::to_string(typed) + " vs " +
                                       std::to_string(direct);
        }
        checks.add("edge_measure_two_route", err.empty(), err);
    }
    {
        const auto omega = range_vertices(log.omega(levels));
        double previous = 1.0;
        std::ostringstream d;
        bool ok = true;
        for (std::uint32_t k = 1; k <= options.max_free_radius; ++k) {
            const double f = free_fraction(g, omega, k);
            ok = ok && f <= previous;
            previous = f;
            d << "k" << k << "=" << f << " ";
        }
        checks.add("free_fraction_monotone", ok, d.str());
    }
    return checks.take();
}

void write_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["check"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        out << j.dump() << '\n';
    }
}

}  // namespace holonomy
