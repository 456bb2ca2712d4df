#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartogs/classifier.hpp"
#include "hartogs/lab/lab.hpp"

namespace hartogs {

/// One resolved invocation of the pipeline. The spec source is either a
/// preset name or a path to a JSON spec file; s values are exact
/// rationals throughout, never parsed from floating literals.
struct RunConfig {
    std::string spec_source;
    std::vector<unsigned> m_values;
    std::vector<Rational> s_values;
    bool lab = false;
    unsigned grid_density = 1;
};

struct ReportEntry {
    unsigned m = 1;
    Rational s;
    RadialProfile profile;
    EinsteinVerdict verdict;
    ClassificationResult classification;
    std::optional<lab::LabSummary> lab_summary;
};

struct Report {
    DomainSpec spec;
    StructuralData data;
    std::vector<ReportEntry> entries; // ordered by (m, s) as configured
};

/// Validates the config (nonempty m and s lists, every s admissible)
/// and executes each (m, s) pair in order. Configuration problems throw
/// std::invalid_argument with a diagnostic naming the offending input.
Report run(const RunConfig& config);

/// Human-readable rendering. Byte-deterministic for a fixed config: no
/// timestamps, rationals as num/den, doubles through one formatter.
std::string render_text(const Report& report);

/// Machine-readable JSON with ordered keys; same determinism contract.
std::string render_json(const Report& report);

/// One classifier row per report entry:
///   spec,m,s,kind,is_einstein,c6,ball_dim,s_recovered
std::string sweep_csv(const Report& report);

/// Inclusive arithmetic grid "START:STOP:STEP" of exact rationals.
/// Throws std::invalid_argument on malformed text, nonpositive step, or
/// START > STOP.
std::vector<Rational> parse_s_grid(const std::string& text);

} // namespace hartogs
