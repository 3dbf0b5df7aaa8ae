#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "stylo/error.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/metrics.hpp"
#include "support/oracle.hpp"
#include "support/synthetic.hpp"

using stylo::Document;
using stylo::Error;
using stylo::EvalConfig;
using stylo::Method;

namespace {

EvalConfig config_for(Method method, std::size_t n_mfw = 100) {
    EvalConfig c;
    c.method = method;
    c.mode = stylo::default_profile_mode(method);
    c.n_mfw = n_mfw;
    return c;
}

std::map<std::string, std::size_t> author_totals(const stylo::Corpus& corpus) {
    std::map<std::string, std::size_t> out;
    for (const auto& d : corpus.documents()) {
        out[d.author] += d.token_count();
    }
    return out;
}

}  // namespace

TEST(LeaveOneOut, SeparableAuthors) {
    const auto a = stylo::tokenize("the cat sat on the mat with a hat and the bat");
    const auto b = stylo::tokenize("of ships and shoes and sealing wax of cabbages and kings");
    const stylo::Corpus corpus({{"a1", "a", a}, {"a2", "a", a}, {"b1", "b", b}, {"b2", "b", b}});
    for (Method m : stylo::kDeltaMethods) {
        const auto report = stylo::leave_one_out(corpus, config_for(m, 10));
        ASSERT_EQ(report.trials.size(), 4u);
        EXPECT_EQ(report.accuracy, 1.0) << stylo::to_string(m);
    }
}

TEST(LeaveOneOut, SingleDocumentAuthorIsCandidateOnly) {
    const auto corpus = stylo::testing::two_author_corpus(2, 3, 300);
    std::vector<Document> docs(corpus.documents().begin(), corpus.documents().end());
    docs.push_back({"solo", "gamma", stylo::testing::two_author_corpus(3, 1, 300).documents()[0].tokens});
    const auto report = stylo::leave_one_out(stylo::Corpus(docs), config_for(Method::Burrows, 50));
    EXPECT_EQ(report.trials.size(), 6u);
    for (const auto& t : report.trials) {
        EXPECT_NE(t.target_id, "solo");
    }
    ASSERT_FALSE(report.warnings.empty());
    EXPECT_NE(report.warnings[0].find("gamma"), std::string::npos);
}

TEST(LeaveOneOut, Errors) {
    const stylo::Corpus one_author({{"a1", "a", {"x"}}, {"a2", "a", {"y"}}});
    EXPECT_THROW(stylo::leave_one_out(one_author, config_for(Method::Burrows, 1)), Error);
    const stylo::Corpus singletons({{"a1", "a", {"x"}}, {"b1", "b", {"y"}}});
    try {
        stylo::leave_one_out(singletons, config_for(Method::Burrows, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("no eligible targets"), std::string::npos);
    }
}

TEST(LeaveOneOut, MatchesIndependentPipeline) {
    const auto corpus = stylo::testing::two_author_corpus(31, 5, 600, 300);
    std::vector<stylo::oracle::LabelledText> texts;
    for (const auto& d : corpus.documents()) {
        texts.push_back({d.id, d.author, d.tokens});
    }
    const std::pair<Method, double (*)(const std::vector<double>&, const std::vector<double>&)> routes[] = {
        {Method::Burrows, &stylo::oracle::burrows},
        {Method::Manhattan, &stylo::oracle::manhattan},
        {Method::Quadratic, &stylo::oracle::quadratic},
        {Method::Cosine, &stylo::oracle::cosine}};
    for (const auto& [method, distance] : routes) {
        const auto expected = stylo::oracle::leave_one_out(texts, 60, distance);
        const auto report = stylo::leave_one_out(corpus, config_for(method, 60));
        ASSERT_EQ(report.trials.size(), expected.size());
        std::size_t correct = 0;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            EXPECT_EQ(report.trials[i].target_id, texts[i].id);
            EXPECT_EQ(report.trials[i].predicted, expected[i].first) << stylo::to_string(method) << " trial " << i;
            EXPECT_NEAR(report.trials[i].score, expected[i].second, 1e-9);
            correct += expected[i].first == texts[i].author ? 1 : 0;
        }
        EXPECT_DOUBLE_EQ(*report.accuracy, static_cast<double>(correct) / static_cast<double>(expected.size()));
    }
}

TEST(LeaveOneOut, NoLeakage) {
    const auto corpus = stylo::testing::two_author_corpus(12, 4, 250);
    const auto totals = author_totals(corpus);
    for (auto mode : {stylo::ProfileMode::PerAuthor, stylo::ProfileMode::PerDocument}) {
        auto config = config_for(Method::Cosine, 40);
        config.mode = mode;
        const auto report = stylo::leave_one_out(corpus, config);
        for (const auto& t : report.trials) {
            EXPECT_EQ(t.target_tokens + t.true_author_pool_tokens, totals.at(t.true_author));
        }
    }
}

TEST(LeaveOneOut, RankMethodsPerAuthor) {
    const auto corpus = stylo::testing::disjoint_initials_corpus(8, 3, 800);
    const auto report = stylo::leave_one_out(corpus, config_for(Method::YuleSpearman));
    EXPECT_EQ(report.accuracy, 1.0);
}

TEST(SampleSplit, Conservation) {
    const auto doc = stylo::testing::two_author_corpus(1, 1, 100).documents()[0];
    const auto split = stylo::sample_split(doc, 40, 123);
    EXPECT_EQ(split.sample.token_count(), 40u);
    EXPECT_EQ(split.remainder.token_count(), 60u);
    EXPECT_EQ(split.sample.author, doc.author);
    EXPECT_TRUE(std::equal(split.sample.tokens.begin(), split.sample.tokens.end(),
                           doc.tokens.begin() + static_cast<std::ptrdiff_t>(split.offset)));
    auto joined = split.remainder.tokens;
    joined.insert(joined.end(), split.sample.tokens.begin(), split.sample.tokens.end());
    auto original = doc.tokens;
    std::sort(joined.begin(), joined.end());
    std::sort(original.begin(), original.end());
    EXPECT_EQ(joined, original);
}

TEST(SampleSplit, Deterministic) {
    const auto doc = stylo::testing::two_author_corpus(1, 1, 500).documents()[0];
    const auto a = stylo::sample_split(doc, 100, 42);
    const auto b = stylo::sample_split(doc, 100, 42);
    EXPECT_EQ(a.offset, b.offset);
    EXPECT_EQ(a.sample.tokens, b.sample.tokens);
    EXPECT_EQ(a.remainder.tokens, b.remainder.tokens);
}

TEST(SampleSplit, Errors) {
    const Document doc{"d", "a", {"x", "y", "z"}};
    EXPECT_THROW(stylo::sample_split(doc, 3, 0), Error);
    EXPECT_THROW(stylo::sample_split(doc, 4, 0), Error);
    EXPECT_THROW(stylo::sample_split(doc, 0, 0), Error);
    EXPECT_NO_THROW(stylo::sample_split(doc, 2, 0));
}

TEST(YuleReplication, ZeroTrials) {
    const auto corpus = stylo::testing::disjoint_initials_corpus(4, 2, 500);
    auto config = config_for(Method::YuleRankManhattan);
    config.trials = 0;
    const auto report = stylo::yule_replication(corpus, config);
    EXPECT_TRUE(report.trials.empty());
    EXPECT_FALSE(report.accuracy.has_value());
}

TEST(YuleReplication, DisjointInitialsAlwaysCorrect) {
    const auto corpus = stylo::testing::disjoint_initials_corpus(10, 3, 3000);
    for (Method m : {Method::YuleRankManhattan, Method::YuleSpearman}) {
        auto config = config_for(m);
        config.trials = 20;
        config.sample_tokens = 1000;
        const auto report = stylo::yule_replication(corpus, config);
        ASSERT_EQ(report.trials.size(), 20u);
        EXPECT_EQ(report.accuracy, 1.0);
        // Round-robin over authors in label order.
        EXPECT_EQ(report.trials[0].true_author, "early");
        EXPECT_EQ(report.trials[1].true_author, "late");
    }
}

TEST(YuleReplication, DeterministicAndLeakFree) {
    const auto corpus = stylo::testing::two_author_corpus(44, 3, 2500);
    const auto totals = author_totals(corpus);
    auto config = config_for(Method::YuleRankManhattan);
    config.trials = 12;
    config.seed = 99;
    const auto a = stylo::yule_replication(corpus, config);
    const auto b = stylo::yule_replication(corpus, config);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        EXPECT_EQ(a.trials[i].target_id, b.trials[i].target_id);
        EXPECT_EQ(a.trials[i].predicted, b.trials[i].predicted);
        EXPECT_EQ(a.trials[i].score, b.trials[i].score);
        EXPECT_EQ(a.trials[i].target_tokens, 1000u);
        EXPECT_EQ(a.trials[i].target_tokens + a.trials[i].true_author_pool_tokens, totals.at(a.trials[i].true_author));
    }
    config.seed = 100;
    const auto c = stylo::yule_replication(corpus, config);
    bool differs = false;
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        differs = differs || a.trials[i].target_id != c.trials[i].target_id;
    }
    EXPECT_TRUE(differs);
}

TEST(YuleReplication, Errors) {
    const auto corpus = stylo::testing::disjoint_initials_corpus(4, 2, 500);
    auto config = config_for(Method::YuleRankManhattan);
    config.sample_tokens = 500;
    try {
        stylo::yule_replication(corpus, config);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("early"), std::string::npos);
    }
    config.method = Method::Burrows;
    config.sample_tokens = 100;
    EXPECT_THROW(stylo::yule_replication(corpus, config), Error);
}
