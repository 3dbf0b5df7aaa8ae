#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylo/corpus.hpp"

namespace stylo {

/// The n most frequent words, in extraction order (count descending, ties lexicographic).
struct FeatureSet {
    std::vector<std::string> words;

    std::size_t size() const { return words.size(); }
};

/// Texts x features table of relative frequencies, stored row-major.
class FeatureMatrix {
public:
    FeatureMatrix(std::vector<std::string> row_labels, std::vector<std::string> features);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return features_.size(); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& features() const { return features_; }

    double& at(std::size_t row, std::size_t col) { return values_[row * cols() + col]; }
    double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
    std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols(), cols()}; }

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> features_;
    std::vector<double> values_;
};

/// Per-feature mean and population standard deviation over the reference set.
struct StandardizationParams {
    std::vector<double> mean;
    std::vector<double> sd;
    std::size_t reference_size = 0;
};

/// A text as a vector of z-scored relative frequencies.
struct ZVector {
    std::string id;
    std::vector<double> values;
};

struct Standardized {
    std::vector<ZVector> rows;
    StandardizationParams params;
    /// Indices of zero-variance features, whose z-scores are all set to 0.
    std::vector<std::size_t> zero_variance;
    std::vector<std::string> warnings;
};

/// Ordered set of characters whose word-initial frequencies are ranked.
class Alphabet {
public:
    /// The 26 letters a-z.
    Alphabet();
    /// Code points of a UTF-8 string; throws Error when empty, not UTF-8, or repeating a character.
    explicit Alphabet(std::string_view utf8_letters);

    std::size_t size() const { return letters_.size(); }
    const std::u32string& letters() const { return letters_; }
    std::string str() const;

    /// Position of `cp`, or size() when it is not in the alphabet.
    std::size_t index_of(char32_t cp) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

private:
    std::u32string letters_;
    std::unordered_map<char32_t, std::size_t> index_;
};

/// Word-initial character counts over an alphabet.
struct InitialCounts {
    Alphabet alphabet;
    std::vector<std::size_t> counts;
    /// Tokens whose first character lies outside the alphabet.
    std::size_t ignored = 0;
};

/// Frequency ranks over an alphabet; rank 1 is the most frequent character, ties share the average rank.
struct RankVector {
    Alphabet alphabet;
    std::vector<double> ranks;
};

/// Absolute word counts pooled over `texts`.
std::unordered_map<std::string, std::size_t> pooled_counts(std::span<const Document> texts);

/**
 * Extracts the n most common words of the pooled texts.
 *
 * Words are ordered by pooled absolute count descending with ties broken
 * lexicographically ascending. Throws Error when n is 0 or exceeds the
 * pooled vocabulary.
 */
FeatureSet extract_mfw(std::span<const Document> texts, std::size_t n);
FeatureSet extract_mfw(const Corpus& corpus, std::size_t n);

/// Relative frequency of each feature word in each text; one row per text, labelled by id.
FeatureMatrix frequency_matrix(std::span<const Document> texts, const FeatureSet& features);
FeatureMatrix frequency_matrix(const Corpus& corpus, const FeatureSet& features);

/**
 * Column-wise z-scores over all rows, using the population standard deviation.
 *
 * A column with zero variance yields z = 0 in every row and a warning.
 * Throws Error when the matrix has fewer than two rows.
 */
Standardized standardize(const FeatureMatrix& matrix);

InitialCounts initial_char_counts(std::span<const std::string> tokens, const Alphabet& alphabet);

/// Descending-order ranks of `values` (1 = largest), averaging tied positions.
std::vector<double> average_ranks_descending(std::span<const double> values);

RankVector rank_vector(const InitialCounts& counts);

}  // namespace stylo
