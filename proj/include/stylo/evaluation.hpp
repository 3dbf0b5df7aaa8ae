#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/attribution.hpp"
#include "stylo/corpus.hpp"
#include "stylo/features.hpp"

namespace stylo {

enum class Protocol { LeaveOneOut, YuleReplication };

std::string_view to_string(Protocol protocol);
std::optional<Protocol> parse_protocol(std::string_view name);

struct EvalConfig {
    Method method = Method::Burrows;
    ProfileMode mode = ProfileMode::PerDocument;
    std::size_t n_mfw = 100;
    Alphabet alphabet;
    std::uint64_t seed = 0;
    std::size_t sample_tokens = 1000;
    std::size_t trials = 20;
};

struct Trial {
    std::size_t index = 0;
    std::string target_id;
    std::string true_author;
    std::string predicted;
    Method method = Method::Burrows;
    /// Score of the winning candidate.
    double score = 0.0;
    bool tie = false;
    std::size_t target_tokens = 0;
    /// Tokens of the true author left in the candidate pool. Together with
    /// target_tokens this accounts for every token the author has.
    std::size_t true_author_pool_tokens = 0;

    bool correct() const { return predicted == true_author; }
};

struct EvaluationReport {
    Protocol protocol = Protocol::LeaveOneOut;
    EvalConfig config;
    std::vector<Trial> trials;
    /// Fraction of correct trials; empty when there are no trials.
    std::optional<double> accuracy;
    std::vector<std::string> warnings;
};

/**
 * Attributes every eligible document against profiles built from the rest.
 *
 * A document is eligible when its author has at least two documents; the
 * remaining authors only serve as candidates and a warning is recorded.
 * Most frequent words and standardization are recomputed inside each trial.
 * UNKNOWN documents are ignored.
 */
EvaluationReport leave_one_out(const Corpus& corpus, const EvalConfig& config);

struct Split {
    Document sample;
    Document remainder;
    std::size_t offset = 0;
};

/**
 * Cuts a contiguous block of `sample_tokens` tokens out of `document` at a
 * seed-determined offset. The sample and remainder keep the document's author
 * and get the ids `<id>#sample` and `<id>#rest`.
 */
Split sample_split(const Document& document, std::size_t sample_tokens, std::uint64_t seed);

/**
 * Repeated sample-versus-author-totals trials with a word-initial character method.
 *
 * Trial t takes its sample from author t mod A (authors in label order); the
 * document and the sample offset are drawn from a generator seeded with
 * (seed, t). The rest of the corpus, including the remainder of the sampled
 * document, forms the author totals.
 */
EvaluationReport yule_replication(const Corpus& corpus, const EvalConfig& config);

}  // namespace stylo
