#ifndef CTX_IO_HPP
#define CTX_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ctx/decide.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses an exact rational from "p", "-p" or "p/q".
Rat parse_rational(const std::string& text);

/**
 * Builds a Scenario from a scenario document. Explicit contexts win over
 * derivation and are validated for pairwise orthogonality; otherwise
 * contexts come from the maximal cliques of the orthogonality graph when
 * options.derive_contexts is set. options.complete runs context completion.
 */
Scenario scenario_from_json(const nlohmann::json& doc);

/// Renders a scenario back to document form (canonical integer vectors).
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario_file(const std::string& path);

nlohmann::json report_to_json(const AnalysisReport& report, const Scenario& scenario,
                              double elapsed_ms);

nlohmann::json assignments_to_json(const Scenario& scenario,
                                   const std::vector<GlobalAssignment>& assignments);

/// Context-per-row listing of rays and contexts.
std::string render_scenario_table(const Scenario& scenario);

/// 0/1 table, rays as columns in document order, rows in canonical order.
std::string render_assignments_table(const Scenario& scenario,
                                     const std::vector<GlobalAssignment>& assignments);

/// Exact outcome probabilities, one context per row.
std::string render_model_table(const Scenario& scenario, const EmpiricalModel& model);

std::string render_report_table(const AnalysisReport& report, const Scenario& scenario);

}  // namespace ctx

#endif
