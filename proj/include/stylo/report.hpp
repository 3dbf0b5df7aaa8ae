#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stylo/attribution.hpp"
#include "stylo/equivalence.hpp"
#include "stylo/evaluation.hpp"

namespace stylo::report {

/// Marker written in place of accuracy when a report has no trials.
inline constexpr std::string_view kNotApplicable = "not-applicable";

inline constexpr std::string_view kEvaluationCsvHeader = "trial,target_id,true_author,predicted,score,tie";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

/// Every JSON report carries "report" (its kind) and "config" (the echo of the run parameters).
nlohmann::json attribution_json(const AttributionResult& result, const nlohmann::json& config);
std::string attribution_csv(const AttributionResult& result);

/// `extra_config` is merged into the echo built from the report's own EvalConfig.
nlohmann::json evaluation_json(const EvaluationReport& report, const nlohmann::json& extra_config = {});
std::string evaluation_csv(const EvaluationReport& report);

nlohmann::json check_json(const std::vector<PropertyOutcome>& outcomes, const nlohmann::json& config);
std::string check_csv(const std::vector<PropertyOutcome>& outcomes);

}  // namespace stylo::report
