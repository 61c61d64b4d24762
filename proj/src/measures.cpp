#include "holonomy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "holonomy/action.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

std::vector<VertexId> range_vertices(const IdRange& range) {
    std::vector<VertexId> out(range.size());
    std::iota(out.begin(), out.end(), range.begin);
    return out;
}

EmpiricalMeasure empirical_measure(const TypeTable& table, std::span<const VertexId> omega, std::uint32_t r,
                                   std::string source) {
    if (omega.empty()) fail(ErrorKind::Config, "empirical measure over an empty set");
    const std::uint32_t degree_radius = std::max<std::uint32_t>(r, 1);
    if (degree_radius > table.r_max())
        fail(ErrorKind::Config, "type table too shallow for radius " + std::to_string(degree_radius));
    const auto& level = table.level(r);
    const auto& deg_level = table.level(degree_radius);
    std::vector<std::uint64_t> counts(level.count.size(), 0), degree_sums(level.count.size(), 0);
    for (VertexId v : omega) {
        const TypeId t = table.type_at(v, r);
        if (t == kNoType) fail(ErrorKind::Config, "vertex " + std::to_string(v) + " lies outside the type table");
        ++counts[t];
        degree_sums[t] += deg_level.root_degree[table.type_at(v, degree_radius)];
    }
    EmpiricalMeasure mu;
    mu.radius = r;
    mu.source = std::move(source);
    mu.sample_size = omega.size();
    for (TypeId t = 0; t < counts.size(); ++t) {
        if (counts[t] == 0) continue;
        mu.entries.push_back({t, level.fingerprint[t], counts[t],
                              static_cast<double>(counts[t]) / static_cast<double>(omega.size()), degree_sums[t]});
    }
    return mu;
}

double edge_measure(const EmpiricalMeasure& mu) {
    // Exact integer numerator, one division.
    std::uint64_t ends = 0;
    for (const auto& e : mu.entries) ends += e.degree_sum;
    return mu.sample_size == 0 ? 0.0 : 0.5 * static_cast<double>(ends) / static_cast<double>(mu.sample_size);
}

double edge_measure_direct(const ColoredGraph& g, std::span<const VertexId> omega) {
    if (omega.empty()) fail(ErrorKind::Config, "edge measure over an empty set");
    std::uint64_t ends = 0;
    for (VertexId v : omega) ends += static_cast<std::uint64_t>(g.degree(v));
    return 0.5 * static_cast<double>(ends) / static_cast<double>(omega.size());
}

double free_fraction(const ColoredGraph& g, std::span<const VertexId> omega, std::uint32_t k) {
    if (omega.empty()) fail(ErrorKind::Config, "free fraction over an empty set");
    const unsigned workers = worker_count();
    std::vector<std::uint64_t> free_count(workers, 0);
    parallel_for(omega.size(), 1 << 14, [&](std::size_t b, std::size_t e, unsigned w) {
        std::uint64_t local = 0;
        for (std::size_t i = b; i < e; ++i) local += is_free(g, omega[i], k);
        free_count[w] += local;
    });
    const auto total = std::accumulate(free_count.begin(), free_count.end(), std::uint64_t{0});
    return static_cast<double>(total) / static_cast<double>(omega.size());
}

double cost_estimate(double free_frac) {
    if (!(free_frac >= 0.0 && free_frac <= 1.0)) fail(ErrorKind::Config, "free fraction must lie in [0, 1]");
    return 1.5 * free_frac + (1.0 - free_frac);
}

MeasureComparison compare_measures(const EmpiricalMeasure& mu1, const EmpiricalMeasure& mu2, std::size_t top) {
    if (mu1.radius != mu2.radius) fail(ErrorKind::Config, "cannot compare measures of different radii");
    std::unordered_map<Fingerprint, std::pair<double, double>, FingerprintHash> joint;
    for (const auto& e : mu1.entries) joint[e.fingerprint].first += e.frequency;
    for (const auto& e : mu2.entries) joint[e.fingerprint].second += e.frequency;
    MeasureComparison out;
    std::vector<MeasureComparison::Row> rows;
    for (const auto& [fp, pq] : joint) {
        out.tv_distance += std::fabs(pq.first - pq.second);
        rows.push_back({fp, pq.first, pq.second});
    }
    out.tv_distance *= 0.5;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        const double da = std::fabs(a.mu1 - a.mu2), db = std::fabs(b.mu1 - b.mu2);
        return da != db ? da > db : a.type < b.type;
    });
    rows.resize(std::min(rows.size(), top));
    out.largest = std::move(rows);
    return out;
}

CostReport gap_report(const ColoredGraph& g, const BuildLog& log, const TypeTable& table, std::uint32_t r,
                      std::uint32_t k) {
    const std::uint32_t levels = log.levels();
    std::uint32_t even = 0, odd = 0;
    for (std::uint32_t n = 2; n <= levels; ++n) (n % 2 == 0 ? even : odd) = n;
    if (even == 0 || odd == 0)
        fail(ErrorKind::Config, "insufficient levels: need an even and an odd stage beyond stage 1");
    CostReport rep;
    rep.m = log.config.m;
    rep.levels = levels;
    rep.r = r;
    rep.k = k;
    rep.even_stage = even;
    rep.odd_stage = odd;
    if (k >= log.config.girth_target)
        rep.warnings.push_back("k = " + std::to_string(k) + " reaches the girth target " +
                               std::to_string(log.config.girth_target) + "; odd-stage blocks may fix short words");

    for (std::uint32_t n = 2; n <= levels; ++n) {
        const auto omega = range_vertices(log.omega(n));
        const auto mu = empirical_measure(table, omega, r, "omega_" + std::to_string(n));
        TrendRow row;
        row.stage = n;
        row.parity = n % 2 == 0 ? "even" : "odd";
        row.size = omega.size();
        row.edge_measure = edge_measure(mu);
        row.free_fraction = free_fraction(g, omega, k);
        row.cost_estimate = cost_estimate(row.free_fraction);
        rep.trend.push_back(row);
    }
    const auto& t1 = rep.trend[even - 2];
    const auto& t2 = rep.trend[odd - 2];
    rep.edge_measure_mu1 = t1.edge_measure;
    rep.edge_measure_mu2 = t2.edge_measure;
    rep.free_fraction_mu1 = t1.free_fraction;
    rep.free_fraction_mu2 = t2.free_fraction;
    rep.cost_estimate_mu1 = t1.cost_estimate;
    rep.cost_estimate_mu2 = t2.cost_estimate;
    const auto mu1 = empirical_measure(table, range_vertices(log.omega(even)), r, "omega_" + std::to_string(even));
    const auto mu2 = empirical_measure(table, range_vertices(log.omega(odd)), r, "omega_" + std::to_string(odd));
    const auto cmp = compare_measures(mu1, mu2);
    rep.tv_distance = cmp.tv_distance;
    rep.discrepancies = cmp.largest;
    rep.gap = rep.cost_estimate_mu2 - rep.edge_measure_mu1;
    return rep;
}

void write_cost_report(const CostReport& rep, std::ostream& out) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["m"] = rep.m;
    j["levels"] = rep.levels;
    j["r"] = rep.r;
    j["k"] = rep.k;
    j["edge_measure_mu1"] = rep.edge_measure_mu1;
    j["free_fraction_mu2"] = rep.free_fraction_mu2;
    j["cost_estimate_mu2"] = rep.cost_estimate_mu2;
    j["tv_distance"] = rep.tv_distance;
    j["gap"] = rep.gap;
    j["mu1_stage"] = rep.even_stage;
    j["mu2_stage"] = rep.odd_stage;
    j["edge_measure_mu2"] = rep.edge_measure_mu2;
    j["free_fraction_mu1"] = rep.free_fraction_mu1;
    j["cost_estimate_mu1"] = rep.cost_estimate_mu1;
    ordered_json trend = ordered_json::array();
    for (const auto& t : rep.trend) {
        trend.push_back({{"stage", t.stage},
                         {"parity", t.parity},
                         {"size", t.size},
                         {"edge_measure", t.edge_measure},
                         {"free_fraction", t.free_fraction},
                         {"cost_estimate", t.cost_estimate}});
    }
    j["trend"] = trend;
    ordered_json disc = ordered_json::array();
    for (const auto& d : rep.discrepancies) disc.push_back({{"type", d.type.hex()}, {"mu1", d.mu1}, {"mu2", d.mu2}});
    j["largest_discrepancies"] = disc;
    j["warnings"] = rep.warnings;
    out << j.dump(2) << '\n';
}

}  // namespace holonomy
