#include "stylo/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "stylo/attribution.hpp"
#include "stylo/features.hpp"
#include "stylo/metrics.hpp"

namespace stylo {

namespace {

constexpr double kExactTolerance = 1e-12;
constexpr double kTriangleTolerance = 1e-9;
constexpr int kAlphabetSize = 26;

std::mt19937_64 property_rng(std::uint64_t seed, std::uint32_t property) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), property};
    return std::mt19937_64(seq);
}

std::string candidate_label(std::size_t i) { return (i < 10 ? "c0" : "c") + std::to_string(i); }

std::vector<double> normal_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = normal(rng);
    }
    return v;
}

std::vector<std::string> labels_of(const AttributionResult& result) {
    std::vector<std::string> out;
    for (const auto& s : result.scores) {
        out.push_back(s.label);
    }
    return out;
}

// Random rank vector over 26 letters: a permutation, or averaged ranks of few-valued counts.
std::vector<double> random_ranks(std::mt19937_64& rng, bool with_ties) {
    if (!with_ties) {
        std::vector<double> ranks(kAlphabetSize);
        std::iota(ranks.begin(), ranks.end(), 1.0);
        std::shuffle(ranks.begin(), ranks.end(), rng);
        return ranks;
    }
    std::uniform_int_distribution<int> count(0, 6);
    std::vector<double> counts(kAlphabetSize);
    for (auto& c : counts) {
        c = count(rng);
    }
    return average_ranks_descending(counts);
}

}  // namespace

PropertyOutcome check_ranking_invariance(const CheckOptions& options) {
    PropertyOutcome out{"argamon-ranking-invariance", true, options.instances, 0.0, std::nullopt};
    auto rng = property_rng(options.seed, 1);
    constexpr std::size_t dims[] = {10, 100, 500};
    std::uniform_int_distribution<std::size_t> n_candidates(3, 10);

    for (std::size_t i = 0; i < options.instances && out.passed; ++i) {
        const std::size_t n = dims[i % 3];
        const std::size_t k = n_candidates(rng);
        Profile target{"target", "target", normal_vector(rng, n)};
        std::vector<Profile> candidates;
        for (std::size_t c = 0; c < k; ++c) {
            candidates.push_back(Profile{candidate_label(c), candidate_label(c), normal_vector(rng, n)});
        }

        const auto delta_order = labels_of(attribute(target, candidates, Method::Burrows));
        const auto manhattan_order = labels_of(attribute(target, candidates, Method::Manhattan));
        double worst = 0.0;
        for (const auto& c : candidates) {
            const double scaled = metrics::burrows_delta(target.values, c.values) * static_cast<double>(n);
            worst = std::max(worst, std::abs(scaled - metrics::manhattan(target.values, c.values)));
        }
        out.max_error = std::max(out.max_error, worst);
        if (delta_order != manhattan_order || worst > kExactTolerance) {
            out.passed = false;
            out.counterexample = nlohmann::json{{"instance", i},
                                                {"n", n},
                                                {"candidates", k},
                                                {"burrows_order", delta_order},
                                                {"manhattan_order", manhattan_order},
                                                {"max_abs_delta_times_n_minus_manhattan", worst}};
        }
    }
    return out;
}

PropertyOutcome check_spearman_duality(const CheckOptions& options) {
    PropertyOutcome out{"spearman-euclidean-duality", true, options.instances, 0.0, std::nullopt};
    auto rng = property_rng(options.seed, 2);
    std::uniform_int_distribution<std::size_t> n_candidates(3, 10);
    const double c = metrics::spearman_euclidean_duality(kAlphabetSize) + options.duality_perturbation;

    const double constant_error = std::abs(c * 2925.0 - 1.0);
    out.max_error = constant_error;
    if (constant_error > kExactTolerance) {
        out.passed = false;
        out.counterexample = nlohmann::json{{"n", kAlphabetSize}, {"constant", c}, {"expected", 1.0 / 2925.0}};
        return out;
    }

    for (std::size_t i = 0; i < options.instances && out.passed; ++i) {
        const bool with_ties = i % 2 == 1;
        const std::size_t k = n_candidates(rng);
        Profile target{"target", "target", random_ranks(rng, with_ties), Representation::InitialCharRank};
        std::vector<Profile> candidates;
        std::vector<std::pair<double, std::string>> by_distance;
        double worst = 0.0;
        std::optional<nlohmann::json> bad_pair;
        for (std::size_t j = 0; j < k; ++j) {
            Profile p{candidate_label(j), candidate_label(j), random_ranks(rng, with_ties),
                      Representation::InitialCharRank};
            const double rho = metrics::spearman_rho(target.values, p.values);
            const double l2sq = metrics::quadratic_delta(target.values, p.values);
            const double err = std::abs(rho - (1.0 - c * l2sq));
            if (err > worst) {
                worst = err;
                bad_pair = nlohmann::json{{"target", target.values}, {"candidate", p.values}, {"rho", rho},
                                          {"quadratic_delta", l2sq}, {"constant", c}};
            }
            by_distance.emplace_back(l2sq, p.label);
            candidates.push_back(std::move(p));
        }
        std::sort(by_distance.begin(), by_distance.end());
        std::vector<std::string> distance_order;
        for (const auto& [d, label] : by_distance) {
            distance_order.push_back(label);
        }
        const auto rho_order = labels_of(attribute(target, candidates, Method::YuleSpearman));

        out.max_error = std::max(out.max_error, worst);
        if (worst > kExactTolerance) {
            out.passed = false;
            out.counterexample = nlohmann::json{{"instance", i}, {"with_ties", with_ties}, {"pair", *bad_pair}};
        } else if (rho_order != distance_order) {
            out.passed = false;
            out.counterexample = nlohmann::json{{"instance", i},
                                                {"with_ties", with_ties},
                                                {"spearman_order", rho_order},
                                                {"quadratic_order", distance_order}};
        }
    }
    return out;
}

PropertyOutcome check_metric_axioms(const CheckOptions& options) {
    const std::size_t triples = options.instances * 5 / 2;
    PropertyOutcome out{"metric-axioms", true, triples, 0.0, std::nullopt};
    auto rng = property_rng(options.seed, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 50);
    std::uniform_real_distribution<double> log_scale(-5.0, 5.0);

    using Distance = double (*)(std::span<const double>, std::span<const double>);
    const std::pair<const char*, Distance> distances[] = {{"manhattan", &metrics::manhattan},
                                                          {"euclidean", &metrics::euclidean}};

    for (std::size_t i = 0; i < triples && out.passed; ++i) {
        const std::size_t n = dim(rng);
        const auto u = normal_vector(rng, n, 3.0);
        const auto v = normal_vector(rng, n, 3.0);
        const auto w = normal_vector(rng, n, 3.0);

        const auto fail = [&](const std::string& what, double observed) {
            out.passed = false;
            out.counterexample = nlohmann::json{{"triple", i}, {"violation", what}, {"observed", observed},
                                                {"u", u},      {"v", v},            {"w", w}};
        };

        for (const auto& [name, d] : distances) {
            const double uv = d(u, v);
            const double vu = d(v, u);
            const double uu = d(u, u);
            const double slack = d(u, w) - (uv + d(v, w));
            out.max_error = std::max({out.max_error, uu, std::abs(uv - vu)});
            if (uv < 0.0) {
                fail(std::string(name) + " non-negativity", uv);
            } else if (uu > kExactTolerance) {
                fail(std::string(name) + " identity", uu);
            } else if (std::abs(uv - vu) > kExactTolerance) {
                fail(std::string(name) + " symmetry", uv - vu);
            } else if (slack > kTriangleTolerance) {
                fail(std::string(name) + " triangle inequality", slack);
            }
            if (!out.passed) {
                return out;
            }
        }

        const double cd = metrics::cosine_delta(u, v);
        const double k = std::exp(log_scale(rng));
        std::vector<double> ku(u);
        for (auto& x : ku) {
            x *= k;
        }
        const double scaled = metrics::cosine_delta(u, ku);
        out.max_error = std::max(out.max_error, std::abs(scaled));
        if (cd < 0.0 || cd > 2.0) {
            fail("cosine range", cd);
        } else if (std::abs(scaled) > kExactTolerance) {
            fail("cosine scale invariance (k=" + std::to_string(k) + ")", scaled);
        }
    }
    return out;
}

std::vector<PropertyOutcome> run_equivalence_checks(const CheckOptions& options) {
    return {check_ranking_invariance(options), check_spearman_duality(options), check_metric_axioms(options)};
}

}  // namespace stylo
