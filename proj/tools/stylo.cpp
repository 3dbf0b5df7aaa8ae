// Command-line front end: attribute, yule, evaluate and check subcommands.
//
// Exit codes: 0 success, 1 data error or failed property, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stylo/attribution.hpp"
#include "stylo/corpus.hpp"
#include "stylo/equivalence.hpp"
#include "stylo/error.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string corpus_root;
    std::string target;
    std::string method = "burrows";
    std::size_t n_mfw = 100;
    std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    std::string profile_mode = "auto";
    std::string protocol = "leave-one-out";
    std::size_t sample_tokens = 1000;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::size_t instances = 200;
    double duality_perturbation = 0.0;
    std::string output_format = "json";
    std::string output_path;
};

std::vector<std::string> method_names(bool rank_only = false) {
    std::vector<std::string> names;
    for (auto m : stylo::kAllMethods) {
        if (!rank_only || stylo::representation_for(m) == stylo::Representation::InitialCharRank) {
            names.emplace_back(stylo::to_string(m));
        }
    }
    return names;
}

stylo::Alphabet parse_alphabet(const std::string& letters) {
    try {
        return stylo::Alphabet(letters);
    } catch (const stylo::Error& e) {
        throw UsageError(std::string("--alphabet: ") + e.what());
    }
}

stylo::ProfileMode resolve_mode(const RunConfig& config, stylo::Method method) {
    if (config.profile_mode == "auto") {
        return stylo::default_profile_mode(method);
    }
    return *stylo::parse_profile_mode(config.profile_mode);
}

void warn(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.output_path.empty() || config.output_path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
        throw stylo::Error("cannot write output file: " + config.output_path);
    }
    out << text;
}

// Candidate documents of a corpus; UNKNOWN-labelled files are skipped with a warning.
std::vector<const stylo::Document*> candidate_documents(const stylo::Corpus& corpus) {
    std::vector<const stylo::Document*> out;
    for (const auto& doc : corpus.documents()) {
        if (doc.is_target()) {
            warn({"ignoring " + doc.id + " in the corpus: its author label is " + std::string(stylo::kUnknownAuthor)});
            continue;
        }
        out.push_back(&doc);
    }
    return out;
}

json config_echo(const RunConfig& config, stylo::Method method, stylo::ProfileMode mode) {
    return {{"corpus_root", config.corpus_root},
            {"target", config.target},
            {"method", stylo::to_string(method)},
            {"representation", stylo::to_string(stylo::representation_for(method))},
            {"n_mfw", config.n_mfw},
            {"alphabet", config.alphabet},
            {"profile_mode", stylo::to_string(mode)}};
}

int cmd_attribute(const RunConfig& config) {
    const auto method = *stylo::parse_method(config.method);
    const auto mode = resolve_mode(config, method);
    const stylo::ProfileConfig profile_config{config.n_mfw, parse_alphabet(config.alphabet)};

    const auto corpus = stylo::load_corpus(config.corpus_root);
    const auto target = stylo::load_document(config.target, std::string(stylo::kUnknownAuthor));
    const auto profiles = stylo::build_profiles(target, candidate_documents(corpus),
                                                stylo::representation_for(method), mode, profile_config);
    warn(profiles.warnings);
    const auto result = stylo::attribute(profiles.target, profiles.candidates, method);

    if (config.output_format == "csv") {
        emit(config, stylo::report::attribution_csv(result));
    } else {
        emit(config, stylo::report::attribution_json(result, config_echo(config, method, mode)).dump(2) + "\n");
    }
    return 0;
}

int cmd_yule(const RunConfig& config) {
    const auto method = *stylo::parse_method(config.method);
    const auto alphabet = parse_alphabet(config.alphabet);
    const auto corpus = stylo::load_corpus(config.corpus_root);
    const auto sample = stylo::load_document(config.target, std::string(stylo::kUnknownAuthor));
    const auto pool = candidate_documents(corpus);
    const auto result = stylo::yule_protocol(sample, corpus, method, alphabet);

    if (config.output_format == "csv") {
        emit(config, stylo::report::attribution_csv(result));
        return 0;
    }

    // Rank table: the sample's ranks and every author total's ranks, in alphabet order.
    const auto profiles = stylo::build_profiles(sample, pool, stylo::Representation::InitialCharRank,
                                                stylo::ProfileMode::PerAuthor, {1, alphabet});
    json ranks = json::object();
    ranks[profiles.target.label] = profiles.target.values;
    for (const auto& p : profiles.candidates) {
        ranks[p.label] = p.values;
    }
    json echo = config_echo(config, method, stylo::ProfileMode::PerAuthor);
    echo.erase("n_mfw");
    auto out = stylo::report::attribution_json(result, echo);
    out["ranks"] = ranks;
    emit(config, out.dump(2) + "\n");
    return 0;
}

int cmd_evaluate(const RunConfig& config) {
    const auto method = *stylo::parse_method(config.method);
    const auto protocol = *stylo::parse_protocol(config.protocol);
    if (protocol == stylo::Protocol::YuleReplication &&
        stylo::representation_for(method) != stylo::Representation::InitialCharRank) {
        throw UsageError("--method: yule-replication requires one of yule-rank-manhattan, yule-spearman");
    }

    stylo::EvalConfig eval;
    eval.method = method;
    eval.mode = resolve_mode(config, method);
    eval.n_mfw = config.n_mfw;
    eval.alphabet = parse_alphabet(config.alphabet);
    eval.seed = config.seed;
    eval.sample_tokens = config.sample_tokens;
    eval.trials = config.trials;

    const auto corpus = stylo::load_corpus(config.corpus_root);
    const auto report = protocol == stylo::Protocol::LeaveOneOut ? stylo::leave_one_out(corpus, eval)
                                                                 : stylo::yule_replication(corpus, eval);
    warn(report.warnings);

    if (config.output_format == "csv") {
        emit(config, stylo::report::evaluation_csv(report));
    } else {
        const json extra = {{"corpus_root", config.corpus_root}};
        emit(config, stylo::report::evaluation_json(report, extra).dump(2) + "\n");
    }
    return 0;
}

int cmd_check(const RunConfig& config) {
    stylo::CheckOptions options;
    options.seed = config.seed;
    options.instances = config.instances;
    options.duality_perturbation = config.duality_perturbation;
    const auto outcomes = stylo::run_equivalence_checks(options);

    bool all = true;
    for (const auto& o : outcomes) {
        std::cerr << (o.passed ? "PASS " : "FAIL ") << o.name << '\n';
        if (o.counterexample) {
            std::cerr << "counterexample: " << o.counterexample->dump() << '\n';
        }
        all = all && o.passed;
    }

    if (config.output_format == "csv") {
        emit(config, stylo::report::check_csv(outcomes));
    } else {
        json echo = {{"seed", config.seed}, {"instances", config.instances}};
        if (config.duality_perturbation != 0.0) {
            echo["duality_perturbation"] = config.duality_perturbation;
        }
        emit(config, stylo::report::check_json(outcomes, echo).dump(2) + "\n");
    }
    return all ? 0 : kExitData;
}

void add_output_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--format", config.output_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", config.output_path, "Report file (standard output when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig config;
    CLI::App app{"Authorship attribution with Burrows' Delta and Yule's word-initial character ranks"};
    app.require_subcommand(1);

    const auto all_methods = method_names();
    const auto rank_methods = method_names(true);
    const std::vector<std::string> modes = {"auto", "per-author", "per-document"};

    auto* attribute = app.add_subcommand("attribute", "Attribute a target text to its nearest candidate");
    attribute->add_option("--corpus", config.corpus_root, "Corpus root: one subdirectory per author")->required();
    attribute->add_option("--target", config.target, "Text of unknown authorship")->required();
    attribute->add_option("--method", config.method, "Dissimilarity method")
        ->check(CLI::IsMember(all_methods))
        ->capture_default_str();
    attribute->add_option("--n-mfw", config.n_mfw, "Number of most frequent words")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    attribute->add_option("--alphabet", config.alphabet, "Characters ranked by the word-initial methods")
        ->capture_default_str();
    attribute->add_option("--profile-mode", config.profile_mode, "Candidate profiles")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    add_output_options(attribute, config);

    auto* yule = app.add_subcommand("yule", "Compare a sample's initial-letter ranking with each author's total");
    yule->add_option("--corpus", config.corpus_root, "Corpus root: one subdirectory per author")->required();
    yule->add_option("--target", config.target, "Sample text")->required();
    std::string yule_method = "yule-rank-manhattan";
    yule->add_option("--method", yule_method, "Rank method")
        ->check(CLI::IsMember(rank_methods))
        ->capture_default_str();
    yule->add_option("--alphabet", config.alphabet, "Characters to rank")->capture_default_str();
    add_output_options(yule, config);

    auto* evaluate = app.add_subcommand("evaluate", "Leave-one-out or sample-extraction accuracy");
    evaluate->add_option("--corpus", config.corpus_root, "Corpus root: one subdirectory per author")->required();
    evaluate->add_option("--method", config.method, "Dissimilarity method")
        ->check(CLI::IsMember(all_methods))
        ->capture_default_str();
    evaluate->add_option("--protocol", config.protocol, "Evaluation protocol")
        ->check(CLI::IsMember({"leave-one-out", "yule-replication"}))
        ->capture_default_str();
    evaluate->add_option("--n-mfw", config.n_mfw, "Number of most frequent words")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    evaluate->add_option("--alphabet", config.alphabet, "Characters ranked by the word-initial methods")
        ->capture_default_str();
    evaluate->add_option("--profile-mode", config.profile_mode, "Candidate profiles")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    evaluate->add_option("--sample-tokens", config.sample_tokens, "Tokens per extracted sample")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    evaluate->add_option("--trials", config.trials, "Number of sample-extraction trials")->capture_default_str();
    evaluate->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    add_output_options(evaluate, config);

    auto* check = app.add_subcommand("check", "Randomized checks of the ranking equivalences and metric axioms");
    check->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    check->add_option("--instances", config.instances, "Random instances per property")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    check->add_option("--inject-duality-error", config.duality_perturbation)->group("");
    add_output_options(check, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (yule->parsed()) {
        config.method = yule_method;
    }

    try {
        if (attribute->parsed()) {
            return cmd_attribute(config);
        }
        if (yule->parsed()) {
            return cmd_yule(config);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(config);
        }
        return cmd_check(config);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const stylo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
