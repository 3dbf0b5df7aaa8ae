#include "stylo/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stylo/error.hpp"
#include "stylo/utf8.hpp"

namespace stylo {

FeatureMatrix::FeatureMatrix(std::vector<std::string> row_labels, std::vector<std::string> features)
    : row_labels_(std::move(row_labels)),
      features_(std::move(features)),
      values_(row_labels_.size() * features_.size(), 0.0) {}

Alphabet::Alphabet() : Alphabet("abcdefghijklmnopqrstuvwxyz") {}

Alphabet::Alphabet(std::string_view utf8_letters) {
    try {
        letters_ = utf8::to_u32(utf8_letters);
    } catch (const Error&) {
        throw Error("alphabet is not valid UTF-8");
    }
    if (letters_.empty()) {
        throw Error("alphabet is empty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!index_.emplace(letters_[i], i).second) {
            throw Error("alphabet repeats a character: " + utf8::from_u32(letters_.substr(i, 1)));
        }
    }
}

std::string Alphabet::str() const { return utf8::from_u32(letters_); }

std::size_t Alphabet::index_of(char32_t cp) const {
    const auto it = index_.find(cp);
    return it == index_.end() ? letters_.size() : it->second;
}

std::unordered_map<std::string, std::size_t> pooled_counts(std::span<const Document> texts) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& text : texts) {
        for (const auto& token : text.tokens) {
            ++counts[token];
        }
    }
    return counts;
}

FeatureSet extract_mfw(std::span<const Document> texts, std::size_t n) {
    if (n == 0) {
        throw Error("number of most frequent words must be at least 1");
    }
    const auto counts = pooled_counts(texts);
    if (counts.empty()) {
        throw Error("cannot extract most frequent words from an empty pool");
    }
    if (n > counts.size()) {
        throw Error("requested " + std::to_string(n) + " most frequent words but the vocabulary has only " +
                    std::to_string(counts.size()) + " words");
    }

    std::vector<std::pair<std::string_view, std::size_t>> ranked(counts.begin(), counts.end());
    const auto by_count = [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    };
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(), by_count);

    FeatureSet features;
    features.words.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        features.words.emplace_back(ranked[i].first);
    }
    return features;
}

FeatureSet extract_mfw(const Corpus& corpus, std::size_t n) {
    return extract_mfw(std::span<const Document>(corpus.documents()), n);
}

FeatureMatrix frequency_matrix(std::span<const Document> texts, const FeatureSet& features) {
    std::vector<std::string> labels;
    labels.reserve(texts.size());
    for (const auto& text : texts) {
        labels.push_back(text.id);
    }
    FeatureMatrix matrix(std::move(labels), features.words);

    std::unordered_map<std::string_view, std::size_t> column;
    for (std::size_t c = 0; c < features.words.size(); ++c) {
        column.emplace(features.words[c], c);
    }
    for (std::size_t r = 0; r < texts.size(); ++r) {
        const auto& text = texts[r];
        if (text.tokens.empty()) {
            throw Error("empty document: " + text.id);
        }
        std::vector<std::size_t> counts(features.size(), 0);
        for (const auto& token : text.tokens) {
            if (const auto it = column.find(token); it != column.end()) {
                ++counts[it->second];
            }
        }
        const auto total = static_cast<double>(text.token_count());
        for (std::size_t c = 0; c < counts.size(); ++c) {
            matrix.at(r, c) = static_cast<double>(counts[c]) / total;
        }
    }
    return matrix;
}

FeatureMatrix frequency_matrix(const Corpus& corpus, const FeatureSet& features) {
    return frequency_matrix(std::span<const Document>(corpus.documents()), features);
}

Standardized standardize(const FeatureMatrix& matrix) {
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    if (rows < 2) {
        throw Error("standardization needs >=2 texts");
    }

    Standardized out;
    out.params.reference_size = rows;
    out.params.mean.assign(cols, 0.0);
    out.params.sd.assign(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        out.rows.push_back(ZVector{matrix.row_labels()[r], std::vector<double>(cols, 0.0)});
    }

    const auto m = static_cast<double>(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            sum += matrix.at(r, c);
        }
        const double mean = sum / m;
        double ss = 0.0;
        bool constant = true;
        for (std::size_t r = 0; r < rows; ++r) {
            const double d = matrix.at(r, c) - mean;
            ss += d * d;
            constant = constant && matrix.at(r, c) == matrix.at(0, c);
        }
        const double sd = std::sqrt(ss / m);
        out.params.mean[c] = mean;
        out.params.sd[c] = sd;

        if (constant || sd == 0.0) {
            out.params.sd[c] = 0.0;
            out.zero_variance.push_back(c);
            out.warnings.push_back("zero-variance feature '" + matrix.features()[c] + "' standardized to 0");
            continue;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            out.rows[r].values[c] = (matrix.at(r, c) - mean) / sd;
        }
    }
    return out;
}

InitialCounts initial_char_counts(std::span<const std::string> tokens, const Alphabet& alphabet) {
    InitialCounts out{alphabet, std::vector<std::size_t>(alphabet.size(), 0), 0};
    for (const auto& token : tokens) {
        const auto first = utf8::decode(token, 0);
        const std::size_t i = first ? alphabet.index_of(first->code_point) : alphabet.size();
        if (i < alphabet.size()) {
            ++out.counts[i];
        } else {
            ++out.ignored;
        }
    }
    return out;
}

std::vector<double> average_ranks_descending(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

    std::vector<double> ranks(values.size(), 0.0);
    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() && values[order[end]] == values[order[start]]) {
            ++end;
        }
        // Positions start..end-1 hold 1-based ranks start+1..end; their mean is (start+1+end)/2.
        const double rank = static_cast<double>(start + 1 + end) / 2.0;
        for (std::size_t k = start; k < end; ++k) {
            ranks[order[k]] = rank;
        }
        start = end;
    }
    return ranks;
}

RankVector rank_vector(const InitialCounts& counts) {
    if (counts.counts.size() != counts.alphabet.size()) {
        throw Error("count vector length does not match alphabet size");
    }
    const std::vector<double> values(counts.counts.begin(), counts.counts.end());
    return RankVector{counts.alphabet, average_ranks_descending(values)};
}

}  // namespace stylo
