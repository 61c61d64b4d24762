#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "holonomy/construction.hpp"
#include "holonomy/typespace.hpp"

namespace holonomy {

/// Frequencies of r-types on a finite vertex set.
struct EmpiricalMeasure {
    struct Entry {
        TypeId type = kNoType;
        Fingerprint fingerprint;
        std::uint64_t count = 0;
        double frequency = 0.0;
        /// Sum of host root degrees; count * degree whenever r >= 1.
        std::uint64_t degree_sum = 0;
    };
    std::uint32_t radius = 0;
    std::string source;  // e.g. "omega_2"
    std::uint64_t sample_size = 0;
    std::vector<Entry> entries;  // ascending type id, zero counts omitted
};

/// Throws Error(Config) on an empty set or vertices outside the table.
/// Root degrees come from radius max(r, 1), since a 0-ball carries no edges.
EmpiricalMeasure empirical_measure(const TypeTable& table, std::span<const VertexId> omega, std::uint32_t r,
                                   std::string source = {});

/// ½ Σ_α μ(α) deg(root of α).
double edge_measure(const EmpiricalMeasure& mu);

/// ½ · average host degree over the set, straight from the graph.
double edge_measure_direct(const ColoredGraph& g, std::span<const VertexId> omega);

/// Fraction of the set that is free at radius k over {A, B, C}.
double free_fraction(const ColoredGraph& g, std::span<const VertexId> omega, std::uint32_t k);

/// (3/2) f + (1 - f). Throws Error(Config) unless 0 <= f <= 1.
double cost_estimate(double free_frac);

struct MeasureComparison {
    double tv_distance = 0.0;
    struct Row {
        Fingerprint type;
        double mu1 = 0.0;
        double mu2 = 0.0;
    };
    std::vector<Row> largest;  // biggest |mu1 - mu2| first
};

/// ½ Σ |μ1(α) − μ2(α)|, types matched by fingerprint. Throws Error(Config)
/// when the radii differ.
MeasureComparison compare_measures(const EmpiricalMeasure& mu1, const EmpiricalMeasure& mu2, std::size_t top = 5);

struct TrendRow {
    std::uint32_t stage = 0;
    std::string parity;  // "even" or "odd"
    std::uint64_t size = 0;
    double edge_measure = 0.0;
    double free_fraction = 0.0;
    double cost_estimate = 0.0;
};

struct CostReport {
    std::uint64_t m = 0;
    std::uint32_t levels = 0;
    std::uint32_t r = 0;
    std::uint32_t k = 0;
    std::uint32_t even_stage = 0;  // Ω used for μ1
    std::uint32_t odd_stage = 0;   // Ω used for μ2
    double edge_measure_mu1 = 0.0;
    double edge_measure_mu2 = 0.0;
    double free_fraction_mu1 = 0.0;
    double free_fraction_mu2 = 0.0;
    double cost_estimate_mu1 = 0.0;
    double cost_estimate_mu2 = 0.0;
    double tv_distance = 0.0;
    double gap = 0.0;  // cost_estimate(μ2) − edge_measure(μ1)
    std::vector<TrendRow> trend;
    std::vector<MeasureComparison::Row> discrepancies;
    std::vector<std::string> warnings;
};

/// μ1 on the largest even Ω_n, μ2 on the largest odd Ω_n with n >= 2.
/// Throws Error(Config) "insufficient levels" when either is missing. The
/// table must cover both sets at radius max(r, 1).
CostReport gap_report(const ColoredGraph& g, const BuildLog& log, const TypeTable& table, std::uint32_t r,
                      std::uint32_t k);

/// {"m":…, "levels":…, "r":…, "k":…, "edge_measure_mu1":…, "free_fraction_mu2":…,
///  "cost_estimate_mu2":…, "tv_distance":…, "gap":…} plus the trend table.
void write_cost_report(const CostReport& report, std::ostream& out);

/// Vertices of an id range, as a list.
std::vector<VertexId> range_vertices(const IdRange& range);

}  // namespace holonomy
