#pragma once

#include <span>

namespace stylo::metrics {

// All functions take bare numeric vectors, so the same code serves z-score
// vectors and rank vectors. Operands must have equal, nonzero length and
// finite values; violations throw stylo::Error. Sums run left to right over
// the feature index.

/// Sum of absolute coordinate differences.
double manhattan(std::span<const double> u, std::span<const double> v);

/// Burrows' Delta: mean absolute difference, i.e. manhattan(u, v) / n.
double burrows_delta(std::span<const double> u, std::span<const double> v);

/// Squared Euclidean distance.
double quadratic_delta(std::span<const double> u, std::span<const double> v);

/// Euclidean distance, sqrt(quadratic_delta).
double euclidean(std::span<const double> u, std::span<const double> v);

/// 1 - cos(angle between u and v), in [0, 2]. Throws for a zero-norm operand.
double cosine_delta(std::span<const double> u, std::span<const double> v);

/**
 * Spearman's rank correlation 1 - 6 * sum(d^2) / (n (n^2 - 1)).
 *
 * The closed form is applied even when ranks were averaged over ties, in
 * which case the result can leave [-1, 1]. Requires n >= 2.
 */
double spearman_rho(std::span<const double> r, std::span<const double> s);

/**
 * The constant c(n) = 6 / (n (n^2 - 1)) linking the two rank statistics:
 * spearman_rho(r, s) == 1 - c(n) * quadratic_delta(r, s).
 *
 * For the 26-letter alphabet c = 6 / 17550 = 1 / 2925. Requires n >= 2.
 */
double spearman_euclidean_duality(int n);

}  // namespace stylo::metrics
