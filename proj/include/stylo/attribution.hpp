#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/features.hpp"

namespace stylo {

enum class Method { Burrows, Manhattan, Quadratic, Cosine, YuleRankManhattan, YuleSpearman };

enum class Representation { MfwZScore, InitialCharRank };

enum class ProfileMode { PerAuthor, PerDocument };

inline constexpr std::array<Method, 6> kAllMethods = {Method::Burrows,   Method::Manhattan,
                                                     Method::Quadratic, Method::Cosine,
                                                     Method::YuleRankManhattan, Method::YuleSpearman};
inline constexpr std::array<Method, 4> kDeltaMethods = {Method::Burrows, Method::Manhattan, Method::Quadratic,
                                                       Method::Cosine};

std::string_view to_string(Method method);
std::string_view to_string(Representation representation);
std::string_view to_string(ProfileMode mode);
std::optional<Method> parse_method(std::string_view name);
std::optional<ProfileMode> parse_profile_mode(std::string_view name);

/// Feature representation a method operates on.
Representation representation_for(Method method);

/// True for correlation scores (larger is closer), false for distances.
bool higher_is_better(Method method);

/// Per-author aggregates for the rank methods, per-document texts for the Delta family.
ProfileMode default_profile_mode(Method method);

/// A candidate or target as a numeric vector: z-scores or character ranks.
struct Profile {
    std::string label;
    /// Author of the text(s) behind the profile; equals label for author aggregates.
    std::string author;
    std::vector<double> values;
    Representation representation = Representation::MfwZScore;
    ProfileMode mode = ProfileMode::PerDocument;
    std::size_t token_count = 0;
};

struct ProfileConfig {
    std::size_t n_mfw = 100;
    Alphabet alphabet;
};

struct ProfileSet {
    Profile target;
    std::vector<Profile> candidates;
    /// Feature words (z-score representation only).
    FeatureSet features;
    std::vector<std::string> warnings;
};

/**
 * Builds the target profile and the candidate profiles.
 *
 * Per-author mode pools all of an author's tokens before computing features;
 * per-document mode keeps every text separate. For z-scores the most frequent
 * words are extracted from target plus candidates, and standardization runs
 * once over the target row and all candidate rows.
 */
ProfileSet build_profiles(const Document& target, std::span<const Document* const> candidates,
                          Representation representation, ProfileMode mode, const ProfileConfig& config);

/// Same, with the single UNKNOWN-labelled document of `corpus` as the target.
ProfileSet build_profiles(const Corpus& corpus, Representation representation, ProfileMode mode,
                          const ProfileConfig& config);

struct Score {
    std::string label;
    std::string author;
    double value = 0.0;
};

struct AttributionResult {
    Method method = Method::Burrows;
    /// Best first: ascending distance, or descending correlation; equal scores ordered by label.
    std::vector<Score> scores;
    std::string winner;
    std::string winner_author;
    /// Top two scores equal within kTieTolerance.
    bool tie = false;
    /// Absolute gap between the best and second-best score.
    double margin = 0.0;
};

inline constexpr double kTieTolerance = 1e-12;

/**
 * Nearest-neighbour decision: scores every candidate against the target and
 * picks the smallest distance (largest correlation for yule-spearman).
 *
 * Throws Error when fewer than two candidates are given, labels repeat, the
 * method does not match the profiles' representation, or dimensions differ.
 */
AttributionResult attribute(const Profile& target, std::span<const Profile> candidates, Method method);

/**
 * Assigns a sample to the author whose total word-initial character ranking
 * it resembles most.
 *
 * Author totals are pooled from `candidates` (UNKNOWN documents are skipped);
 * the sample must not be one of them.
 */
AttributionResult yule_protocol(const Document& sample, const Corpus& candidates, Method method,
                                const Alphabet& alphabet);

}  // namespace stylo
