#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "monpg/metrics.hpp"
#include "monpg/problem.hpp"
#include "monpg/solvers.hpp"

namespace monpg {

using Json = nlohmann::json;

/// Builds a problem from the declarative JSON description documented in
/// docs/problem-schema.md. Throws std::invalid_argument with the offending
/// field on schema violations.
MultiObjectiveProblem problem_from_json(const Json& spec);
MultiObjectiveProblem problem_from_json_text(const std::string& text);

Json run_result_to_json(const RunResult& result, bool include_trajectory);

/// Deterministic text rendering of a double (shortest round-trip via %.17g
/// would be noisy; %.12g is stable and plenty for reporting).
std::string format_double(double v);

/// 0-based line number of byte `offset` in `text`, for anchoring config
/// parse errors.
int line_of_offset(const std::string& text, std::size_t offset);

}  // namespace monpg
