#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "holonomy/construction.hpp"
#include "holonomy/io.hpp"

namespace holonomy {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint32_t defect_radius = 4;      // pushforward defects for r <= this
    std::uint32_t genericity_radius = 6;  // deepest radius tried for separation
    std::uint32_t max_free_radius = 5;    // free fraction monotone for k <= this
};

/// Every structural invariant of a build, one entry per check. A raw graph
/// that is not properly colored yields a single failed "properness" entry.
std::vector<CheckResult> verify_build(const RawGraph& raw, const BuildLog& log, const VerifyOptions& options = {});
std::vector<CheckResult> verify_build(const ColoredGraph& g, const BuildLog& log, const VerifyOptions& options = {});

/// One JSON object per line: {"check": ..., "passed": ..., "detail": ...}.
void write_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace holonomy
