#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stylo {

struct CheckOptions {
    std::uint64_t seed = 0;
    /// Randomized instances per property (the axiom suite uses 2.5x this many triples).
    std::size_t instances = 200;
    /// Test hook: added to the rank-correlation constant before the duality check.
    double duality_perturbation = 0.0;
};

struct PropertyOutcome {
    std::string name;
    bool passed = true;
    std::size_t instances = 0;
    /// Largest deviation observed against the property's tolerance.
    double max_error = 0.0;
    std::optional<nlohmann::json> counterexample;
};

/// Rankings under Burrows' Delta and under Manhattan distance coincide, and Delta * n equals Manhattan.
PropertyOutcome check_ranking_invariance(const CheckOptions& options);

/// Spearman's rho equals 1 - c(26) * squared Euclidean distance, and both induce the same candidate order.
PropertyOutcome check_spearman_duality(const CheckOptions& options);

/// Metric axioms for Manhattan and Euclidean distance; range and scale invariance of cosine delta.
PropertyOutcome check_metric_axioms(const CheckOptions& options);

std::vector<PropertyOutcome> run_equivalence_checks(const CheckOptions& options);

}  // namespace stylo
