#include "stylo/metrics.hpp"

#include <cmath>
#include <string>

#include "stylo/error.hpp"

namespace stylo::metrics {

namespace {

void check_operands(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw Error("vector length mismatch: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    }
    if (u.empty()) {
        throw Error("empty vector");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i]) || !std::isfinite(v[i])) {
            throw Error("non-finite vector component at index " + std::to_string(i));
        }
    }
}

double sum_squared_differences(std::span<const double> u, std::span<const double> v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        sum += d * d;
    }
    return sum;
}

}  // namespace

double manhattan(std::span<const double> u, std::span<const double> v) {
    check_operands(u, v);
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += std::abs(u[i] - v[i]);
    }
    return sum;
}

double burrows_delta(std::span<const double> u, std::span<const double> v) {
    return manhattan(u, v) / static_cast<double>(u.size());
}

double quadratic_delta(std::span<const double> u, std::span<const double> v) {
    check_operands(u, v);
    return sum_squared_differences(u, v);
}

double euclidean(std::span<const double> u, std::span<const double> v) { return std::sqrt(quadratic_delta(u, v)); }

double cosine_delta(std::span<const double> u, std::span<const double> v) {
    check_operands(u, v);
    double dot = 0.0;
    double uu = 0.0;
    double vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) {
        throw Error("undefined cosine for zero vector");
    }
    const double cosine = dot / (std::sqrt(uu) * std::sqrt(vv));
    // Rounding can push |cosine| a few ulps past 1.
    const double clamped = cosine > 1.0 ? 1.0 : (cosine < -1.0 ? -1.0 : cosine);
    return 1.0 - clamped;
}

double spearman_euclidean_duality(int n) {
    if (n < 2) {
        throw Error("rank correlation needs n >= 2, got " + std::to_string(n));
    }
    const auto m = static_cast<double>(n);
    return 6.0 / (m * (m * m - 1.0));
}

double spearman_rho(std::span<const double> r, std::span<const double> s) {
    check_operands(r, s);
    if (r.size() < 2) {
        throw Error("rank correlation needs n >= 2, got " + std::to_string(r.size()));
    }
    const auto n = static_cast<double>(r.size());
    return 1.0 - 6.0 * sum_squared_differences(r, s) / (n * (n * n - 1.0));
}

}  // namespace stylo::metrics
