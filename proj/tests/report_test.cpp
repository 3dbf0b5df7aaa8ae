#include <sstream>

#include <gtest/gtest.h>

#include "stylo/equivalence.hpp"
#include "stylo/report.hpp"
#include "support/synthetic.hpp"

using nlohmann::json;
namespace report = stylo::report;

namespace {

// Minimal RFC 4180 reader: CRLF records, quoted fields with doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows(1, std::vector<std::string>(1));
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                rows.back().back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                rows.back().back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rows.back().emplace_back();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            ++i;
            rows.emplace_back(1);
        } else {
            rows.back().back() += c;
        }
    }
    if (rows.back().size() == 1 && rows.back()[0].empty()) {
        rows.pop_back();
    }
    return rows;
}

}  // namespace

TEST(Report, FormatDoubleRoundTrips) {
    for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 123456789.123}) {
        EXPECT_EQ(std::stod(report::format_double(x)), x);
    }
    EXPECT_EQ(report::format_double(0.5), "0.5");
}

TEST(Report, CsvFieldQuoting) {
    EXPECT_EQ(report::csv_field("plain"), "plain");
    EXPECT_EQ(report::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(report::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(report::csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Report, EvaluationJsonAndCsvAgree) {
    const auto corpus = stylo::testing::two_author_corpus(6, 4, 300);
    stylo::EvalConfig config;
    config.n_mfw = 30;
    const auto rep = stylo::leave_one_out(corpus, config);
    const auto j = report::evaluation_json(rep, {{"corpus_root", "somewhere"}});
    const auto rows = parse_csv(report::evaluation_csv(rep));

    ASSERT_EQ(rows.size(), rep.trials.size() + 1);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"trial", "target_id", "true_author", "predicted", "score", "tie"}));
    const auto& trials = j.at("trials");
    for (std::size_t i = 0; i < rep.trials.size(); ++i) {
        const auto& row = rows[i + 1];
        const auto& t = trials.at(i);
        EXPECT_EQ(std::stoul(row[0]), t.at("trial").get<std::size_t>());
        EXPECT_EQ(row[1], t.at("target_id").get<std::string>());
        EXPECT_EQ(row[2], t.at("true_author").get<std::string>());
        EXPECT_EQ(row[3], t.at("predicted").get<std::string>());
        EXPECT_EQ(std::stod(row[4]), t.at("score").get<double>());
        EXPECT_EQ(row[5] == "true", t.at("tie").get<bool>());
    }
    EXPECT_EQ(j.at("report"), "evaluation");
    EXPECT_EQ(j.at("config").at("corpus_root"), "somewhere");
    EXPECT_EQ(j.at("config").at("n_mfw"), 30);
    EXPECT_EQ(j.at("accuracy").get<double>(), *rep.accuracy);
    EXPECT_EQ(j.at("total"), rep.trials.size());
}

TEST(Report, EmptyEvaluationHasNotApplicableAccuracy) {
    stylo::EvaluationReport rep;
    rep.protocol = stylo::Protocol::YuleReplication;
    const auto j = report::evaluation_json(rep);
    EXPECT_EQ(j.at("accuracy"), "not-applicable");
    EXPECT_EQ(j.at("trials").size(), 0u);
    EXPECT_EQ(report::evaluation_csv(rep), "trial,target_id,true_author,predicted,score,tie\r\n");
}

TEST(Report, AttributionOutputs) {
    stylo::AttributionResult r;
    r.method = stylo::Method::Cosine;
    r.scores = {{"x,1", "ann", 0.25}, {"y", "bob", 0.75}};
    r.winner = "x,1";
    r.winner_author = "ann";
    r.margin = 0.5;
    const auto j = report::attribution_json(r, {{"n_mfw", 50}});
    EXPECT_EQ(j.at("method"), "cosine");
    EXPECT_EQ(j.at("scores").at(1).at("score"), 0.75);
    EXPECT_EQ(j.at("config").at("n_mfw"), 50);
    EXPECT_EQ(report::attribution_csv(r), "rank,label,author,score\r\n1,\"x,1\",ann,0.25\r\n2,y,bob,0.75\r\n");
}

TEST(EquivalenceChecks, PassWithDefaultSeed) {
    const auto outcomes = stylo::run_equivalence_checks({});
    ASSERT_EQ(outcomes.size(), 3u);
    for (const auto& o : outcomes) {
        EXPECT_TRUE(o.passed) << o.name << ": " << (o.counterexample ? o.counterexample->dump() : "");
        EXPECT_LE(o.max_error, 1e-12) << o.name;
    }
    EXPECT_EQ(outcomes[2].instances, 500u);
}

TEST(EquivalenceChecks, CorruptedDualityConstantFails) {
    stylo::CheckOptions options;
    options.duality_perturbation = 5.0 / 2925.0;  // constant of 6/2925 instead of 1/2925
    const auto o = stylo::check_spearman_duality(options);
    EXPECT_FALSE(o.passed);
    ASSERT_TRUE(o.counterexample.has_value());
    EXPECT_TRUE(o.counterexample->contains("constant"));
}

TEST(EquivalenceChecks, Deterministic) {
    stylo::CheckOptions options;
    options.seed = 17;
    const auto a = report::check_json(stylo::run_equivalence_checks(options), {}).dump();
    const auto b = report::check_json(stylo::run_equivalence_checks(options), {}).dump();
    EXPECT_EQ(a, b);
}
