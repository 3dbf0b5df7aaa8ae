#include "stylo/attribution.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stylo/error.hpp"
#include "stylo/metrics.hpp"

namespace stylo {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Burrows:
            return "burrows";
        case Method::Manhattan:
            return "manhattan";
        case Method::Quadratic:
            return "quadratic";
        case Method::Cosine:
            return "cosine";
        case Method::YuleRankManhattan:
            return "yule-rank-manhattan";
        case Method::YuleSpearman:
            return "yule-spearman";
    }
    return "unknown";
}

std::string_view to_string(Representation representation) {
    return representation == Representation::MfwZScore ? "mfw-zscore" : "initial-char-rank";
}

std::string_view to_string(ProfileMode mode) { return mode == ProfileMode::PerAuthor ? "per-author" : "per-document"; }

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<ProfileMode> parse_profile_mode(std::string_view name) {
    if (name == "per-author") {
        return ProfileMode::PerAuthor;
    }
    if (name == "per-document") {
        return ProfileMode::PerDocument;
    }
    return std::nullopt;
}

Representation representation_for(Method method) {
    return (method == Method::YuleRankManhattan || method == Method::YuleSpearman) ? Representation::InitialCharRank
                                                                                    : Representation::MfwZScore;
}

bool higher_is_better(Method method) { return method == Method::YuleSpearman; }

ProfileMode default_profile_mode(Method method) {
    return representation_for(method) == Representation::InitialCharRank ? ProfileMode::PerAuthor
                                                                          : ProfileMode::PerDocument;
}

namespace {

// A candidate text: one document, or every document of one author.
struct CandidateText {
    std::string label;
    std::string author;
    std::vector<const Document*> parts;

    std::size_t token_count() const {
        std::size_t n = 0;
        for (const auto* d : parts) {
            n += d->token_count();
        }
        return n;
    }
};

std::vector<CandidateText> group_candidates(std::span<const Document* const> candidates, ProfileMode mode) {
    std::vector<CandidateText> texts;
    if (mode == ProfileMode::PerDocument) {
        for (const auto* doc : candidates) {
            texts.push_back({doc->id, doc->author, {doc}});
        }
        return texts;
    }
    std::set<std::string> authors;
    for (const auto* doc : candidates) {
        authors.insert(doc->author);
    }
    for (const auto& author : authors) {
        CandidateText text{author, author, {}};
        for (const auto* doc : candidates) {
            if (doc->author == author) {
                text.parts.push_back(doc);
            }
        }
        texts.push_back(std::move(text));
    }
    return texts;
}

Document pooled(const CandidateText& text) {
    Document doc{text.label, text.author, {}};
    doc.tokens.reserve(text.token_count());
    for (const auto* part : text.parts) {
        doc.tokens.insert(doc.tokens.end(), part->tokens.begin(), part->tokens.end());
    }
    return doc;
}

InitialCounts summed_counts(const CandidateText& text, const Alphabet& alphabet) {
    InitialCounts total{alphabet, std::vector<std::size_t>(alphabet.size(), 0), 0};
    for (const auto* part : text.parts) {
        const auto counts = initial_char_counts(part->tokens, alphabet);
        for (std::size_t i = 0; i < counts.counts.size(); ++i) {
            total.counts[i] += counts.counts[i];
        }
        total.ignored += counts.ignored;
    }
    return total;
}

std::vector<double> rank_values(const InitialCounts& counts) { return rank_vector(counts).ranks; }

}  // namespace

ProfileSet build_profiles(const Document& target, std::span<const Document* const> candidates,
                          Representation representation, ProfileMode mode, const ProfileConfig& config) {
    const auto texts = group_candidates(candidates, mode);
    if (texts.size() < 2) {
        throw Error(std::string("attribution needs at least 2 candidates in ") + std::string(to_string(mode)) +
                    " mode, got " + std::to_string(texts.size()));
    }
    if (target.tokens.empty()) {
        throw Error("empty document: " + target.id);
    }

    ProfileSet out;
    out.target = Profile{target.id, target.author, {}, representation, ProfileMode::PerDocument, target.token_count()};
    for (const auto& text : texts) {
        out.candidates.push_back(Profile{text.label, text.author, {}, representation, mode, text.token_count()});
    }

    if (representation == Representation::InitialCharRank) {
        out.target.values = rank_values(initial_char_counts(target.tokens, config.alphabet));
        for (std::size_t i = 0; i < texts.size(); ++i) {
            out.candidates[i].values = rank_values(summed_counts(texts[i], config.alphabet));
        }
        return out;
    }

    // Row 0 is the target; rows 1.. follow the candidate order.
    std::vector<Document> rows;
    rows.reserve(texts.size() + 1);
    rows.push_back(target);
    for (const auto& text : texts) {
        rows.push_back(pooled(text));
    }
    out.features = extract_mfw(rows, config.n_mfw);
    auto standardized = standardize(frequency_matrix(rows, out.features));
    out.warnings = std::move(standardized.warnings);
    out.target.values = std::move(standardized.rows[0].values);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        out.candidates[i].values = std::move(standardized.rows[i + 1].values);
    }
    return out;
}

ProfileSet build_profiles(const Corpus& corpus, Representation representation, ProfileMode mode,
                          const ProfileConfig& config) {
    const Document* target = nullptr;
    std::vector<const Document*> candidates;
    for (const auto& doc : corpus.documents()) {
        if (!doc.is_target()) {
            candidates.push_back(&doc);
        } else if (target != nullptr) {
            throw Error("corpus has more than one " + std::string(kUnknownAuthor) + " target");
        } else {
            target = &doc;
        }
    }
    if (target == nullptr) {
        throw Error("target missing: no document labelled " + std::string(kUnknownAuthor));
    }
    return build_profiles(*target, candidates, representation, mode, config);
}

AttributionResult attribute(const Profile& target, std::span<const Profile> candidates, Method method) {
    if (candidates.size() < 2) {
        throw Error("attribution needs at least 2 candidates, got " + std::to_string(candidates.size()));
    }
    const Representation wanted = representation_for(method);
    const auto check = [&](const Profile& p) {
        if (p.representation != wanted) {
            throw Error("method " + std::string(to_string(method)) + " requires " + std::string(to_string(wanted)) +
                        " profiles, got " + std::string(to_string(p.representation)));
        }
        if (p.values.size() != target.values.size()) {
            throw Error("profile dimensionality mismatch: " + p.label + " has " + std::to_string(p.values.size()) +
                        ", target has " + std::to_string(target.values.size()));
        }
    };
    check(target);
    std::set<std::string_view> labels;
    for (const auto& candidate : candidates) {
        check(candidate);
        if (!labels.insert(candidate.label).second) {
            throw Error("duplicate candidate label: " + candidate.label);
        }
    }

    AttributionResult result;
    result.method = method;
    for (const auto& candidate : candidates) {
        double value = 0.0;
        switch (method) {
            case Method::Burrows:
                value = metrics::burrows_delta(target.values, candidate.values);
                break;
            case Method::Manhattan:
            case Method::YuleRankManhattan:
                value = metrics::manhattan(target.values, candidate.values);
                break;
            case Method::Quadratic:
                value = metrics::quadratic_delta(target.values, candidate.values);
                break;
            case Method::Cosine:
                value = metrics::cosine_delta(target.values, candidate.values);
                break;
            case Method::YuleSpearman:
                value = metrics::spearman_rho(target.values, candidate.values);
                break;
        }
        result.scores.push_back(Score{candidate.label, candidate.author, value});
    }

    const bool descending = higher_is_better(method);
    std::sort(result.scores.begin(), result.scores.end(), [&](const Score& a, const Score& b) {
        if (a.value != b.value) {
            return descending ? a.value > b.value : a.value < b.value;
        }
        return a.label < b.label;
    });

    // Scores within tolerance of the best form a tie, resolved by label.
    const double best = result.scores.front().value;
    auto tied_end = std::find_if(result.scores.begin(), result.scores.end(),
                                 [&](const Score& s) { return std::abs(s.value - best) > kTieTolerance; });
    std::stable_sort(result.scores.begin(), tied_end, [](const Score& a, const Score& b) { return a.label < b.label; });

    result.winner = result.scores[0].label;
    result.winner_author = result.scores[0].author;
    result.margin = std::abs(result.scores[1].value - result.scores[0].value);
    result.tie = tied_end - result.scores.begin() >= 2;
    return result;
}

AttributionResult yule_protocol(const Document& sample, const Corpus& candidates, Method method,
                                const Alphabet& alphabet) {
    if (representation_for(method) != Representation::InitialCharRank) {
        throw Error("the word-initial character protocol requires yule-rank-manhattan or yule-spearman, got " +
                    std::string(to_string(method)));
    }
    std::vector<const Document*> pool;
    for (const auto& doc : candidates.documents()) {
        if (doc.is_target()) {
            continue;
        }
        if (doc.id == sample.id) {
            throw Error("sample " + sample.id + " is also part of the candidate pool");
        }
        pool.push_back(&doc);
    }
    const ProfileConfig config{1, alphabet};
    const auto profiles =
        build_profiles(sample, pool, Representation::InitialCharRank, ProfileMode::PerAuthor, config);
    return attribute(profiles.target, profiles.candidates, method);
}

}  // namespace stylo
