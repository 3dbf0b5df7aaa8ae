#include "stylo/evaluation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "stylo/error.hpp"

namespace stylo {

std::string_view to_string(Protocol protocol) {
    return protocol == Protocol::LeaveOneOut ? "leave-one-out" : "yule-replication";
}

std::optional<Protocol> parse_protocol(std::string_view name) {
    if (name == "leave-one-out") {
        return Protocol::LeaveOneOut;
    }
    if (name == "yule-replication") {
        return Protocol::YuleReplication;
    }
    return std::nullopt;
}

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

std::optional<double> accuracy_of(const std::vector<Trial>& trials) {
    if (trials.empty()) {
        return std::nullopt;
    }
    const auto correct = std::count_if(trials.begin(), trials.end(), [](const Trial& t) { return t.correct(); });
    return static_cast<double>(correct) / static_cast<double>(trials.size());
}

void add_warnings(std::vector<std::string>& into, std::set<std::string>& seen, const std::vector<std::string>& from) {
    for (const auto& w : from) {
        if (seen.insert(w).second) {
            into.push_back(w);
        }
    }
}

// Non-target documents grouped by author, in corpus order.
std::map<std::string, std::vector<const Document*>> documents_by_author(const Corpus& corpus) {
    std::map<std::string, std::vector<const Document*>> out;
    for (const auto& doc : corpus.documents()) {
        if (!doc.is_target()) {
            out[doc.author].push_back(&doc);
        }
    }
    return out;
}

std::size_t pool_tokens(std::span<const Document* const> pool, std::string_view author) {
    std::size_t n = 0;
    for (const auto* doc : pool) {
        if (doc->author == author) {
            n += doc->token_count();
        }
    }
    return n;
}

}  // namespace

EvaluationReport leave_one_out(const Corpus& corpus, const EvalConfig& config) {
    EvaluationReport report;
    report.protocol = Protocol::LeaveOneOut;
    report.config = config;

    const auto by_author = documents_by_author(corpus);
    if (by_author.size() < 2) {
        throw Error("leave-one-out needs at least 2 authors, got " + std::to_string(by_author.size()));
    }

    std::vector<const Document*> targets;
    for (const auto& [author, docs] : by_author) {
        if (docs.size() < 2) {
            report.warnings.push_back("author " + author + " has a single document; used as candidate only");
            continue;
        }
        targets.insert(targets.end(), docs.begin(), docs.end());
    }
    if (targets.empty()) {
        throw Error("no eligible targets: every author has a single document");
    }

    std::set<std::string> seen(report.warnings.begin(), report.warnings.end());
    const ProfileConfig profile_config{config.n_mfw, config.alphabet};
    const Representation representation = representation_for(config.method);

    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Document& target = *targets[t];
        std::vector<const Document*> pool;
        for (const auto& [author, docs] : by_author) {
            for (const auto* doc : docs) {
                if (doc != &target) {
                    pool.push_back(doc);
                }
            }
        }
        const auto profiles = build_profiles(target, pool, representation, config.mode, profile_config);
        add_warnings(report.warnings, seen, profiles.warnings);
        const auto result = attribute(profiles.target, profiles.candidates, config.method);

        Trial trial;
        trial.index = t;
        trial.target_id = target.id;
        trial.true_author = target.author;
        trial.predicted = result.winner_author;
        trial.method = config.method;
        trial.score = result.scores.front().value;
        trial.tie = result.tie;
        trial.target_tokens = target.token_count();
        trial.true_author_pool_tokens = pool_tokens(pool, target.author);
        report.trials.push_back(std::move(trial));
    }
    report.accuracy = accuracy_of(report.trials);
    return report;
}

Split sample_split(const Document& document, std::size_t sample_tokens, std::uint64_t seed) {
    if (sample_tokens == 0) {
        throw Error("sample size must be positive");
    }
    if (sample_tokens >= document.token_count()) {
        throw Error("sample of " + std::to_string(sample_tokens) + " tokens needs a longer document: " + document.id +
                    " has " + std::to_string(document.token_count()));
    }
    std::mt19937_64 rng(seed);
    const std::size_t offset = rng() % (document.token_count() - sample_tokens + 1);

    const auto begin = document.tokens.begin() + static_cast<std::ptrdiff_t>(offset);
    const auto end = begin + static_cast<std::ptrdiff_t>(sample_tokens);
    Split split;
    split.offset = offset;
    split.sample = Document{document.id + "#sample", document.author, {begin, end}};
    split.remainder = Document{document.id + "#rest", document.author, {document.tokens.begin(), begin}};
    split.remainder.tokens.insert(split.remainder.tokens.end(), end, document.tokens.end());
    return split;
}

EvaluationReport yule_replication(const Corpus& corpus, const EvalConfig& config) {
    if (representation_for(config.method) != Representation::InitialCharRank) {
        throw Error("yule replication requires yule-rank-manhattan or yule-spearman, got " +
                    std::string(to_string(config.method)));
    }
    EvaluationReport report;
    report.protocol = Protocol::YuleReplication;
    report.config = config;
    report.config.mode = ProfileMode::PerAuthor;

    const auto by_author = documents_by_author(corpus);
    if (by_author.size() < 2) {
        throw Error("yule replication needs at least 2 authors, got " + std::to_string(by_author.size()));
    }
    if (config.trials == 0) {
        return report;
    }

    std::vector<std::string> authors;
    std::map<std::string, std::vector<const Document*>> eligible;
    for (const auto& [author, docs] : by_author) {
        authors.push_back(author);
        for (const auto* doc : docs) {
            if (doc->token_count() > config.sample_tokens) {
                eligible[author].push_back(doc);
            }
        }
        if (eligible[author].empty()) {
            const auto* longest = *std::max_element(docs.begin(), docs.end(), [](const auto* a, const auto* b) {
                return a->token_count() < b->token_count();
            });
            throw Error("insufficient tokens for a " + std::to_string(config.sample_tokens) +
                        "-token sample: document " + longest->id + " has " + std::to_string(longest->token_count()) +
                        " tokens (longest of author " + author + ")");
        }
    }

    for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_rng(config.seed, t);
        const std::string& author = authors[t % authors.size()];
        const auto& choices = eligible[author];
        const Document& source = *choices[rng() % choices.size()];
        auto split = sample_split(source, config.sample_tokens, rng());

        std::vector<Document> pool;
        for (const auto& doc : corpus.documents()) {
            if (!doc.is_target() && &doc != &source) {
                pool.push_back(doc);
            }
        }
        pool.push_back(std::move(split.remainder));
        const Corpus candidates(std::move(pool));
        const auto result = yule_protocol(split.sample, candidates, config.method, config.alphabet);

        Trial trial;
        trial.index = t;
        trial.target_id = split.sample.id + "@" + std::to_string(split.offset);
        trial.true_author = author;
        trial.predicted = result.winner_author;
        trial.method = config.method;
        trial.score = result.scores.front().value;
        trial.tie = result.tie;
        trial.target_tokens = split.sample.token_count();
        for (const auto* doc : candidates.by_author(author)) {
            trial.true_author_pool_tokens += doc->token_count();
        }
        report.trials.push_back(std::move(trial));
    }
    report.accuracy = accuracy_of(report.trials);
    return report;
}

}  // namespace stylo
