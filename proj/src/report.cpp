#include "stylo/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace stylo::report {

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::json attribution_json(const AttributionResult& result, const nlohmann::json& config) {
    nlohmann::json scores = nlohmann::json::array();
    for (const auto& s : result.scores) {
        scores.push_back({{"label", s.label}, {"author", s.author}, {"score", s.value}});
    }
    return {{"report", "attribution"},
            {"config", config},
            {"method", to_string(result.method)},
            {"scores", scores},
            {"winner", result.winner},
            {"winner_author", result.winner_author},
            {"tie", result.tie},
            {"margin", result.margin}};
}

std::string attribution_csv(const AttributionResult& result) {
    std::ostringstream out;
    out << "rank,label,author,score\r\n";
    for (std::size_t i = 0; i < result.scores.size(); ++i) {
        const auto& s = result.scores[i];
        out << i + 1 << ',' << csv_field(s.label) << ',' << csv_field(s.author) << ',' << format_double(s.value)
            << "\r\n";
    }
    return out.str();
}

nlohmann::json evaluation_json(const EvaluationReport& report, const nlohmann::json& extra_config) {
    nlohmann::json config = {{"protocol", to_string(report.protocol)},
                             {"method", to_string(report.config.method)},
                             {"profile_mode", to_string(report.config.mode)},
                             {"n_mfw", report.config.n_mfw},
                             {"alphabet", report.config.alphabet.str()},
                             {"seed", report.config.seed},
                             {"sample_tokens", report.config.sample_tokens},
                             {"trials", report.config.trials}};
    if (extra_config.is_object()) {
        config.update(extra_config);
    }

    nlohmann::json trials = nlohmann::json::array();
    std::size_t correct = 0;
    for (const auto& t : report.trials) {
        correct += t.correct() ? 1 : 0;
        trials.push_back({{"trial", t.index},
                          {"target_id", t.target_id},
                          {"true_author", t.true_author},
                          {"predicted", t.predicted},
                          {"method", to_string(t.method)},
                          {"score", t.score},
                          {"tie", t.tie},
                          {"target_tokens", t.target_tokens},
                          {"true_author_pool_tokens", t.true_author_pool_tokens}});
    }

    nlohmann::json out = {{"report", "evaluation"},
                          {"config", config},
                          {"trials", trials},
                          {"total", report.trials.size()},
                          {"correct", correct}};
    if (report.accuracy) {
        out["accuracy"] = *report.accuracy;
    } else {
        out["accuracy"] = kNotApplicable;
    }
    return out;
}

std::string evaluation_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << kEvaluationCsvHeader << "\r\n";
    for (const auto& t : report.trials) {
        out << t.index << ',' << csv_field(t.target_id) << ',' << csv_field(t.true_author) << ','
            << csv_field(t.predicted) << ',' << format_double(t.score) << ',' << (t.tie ? "true" : "false") << "\r\n";
    }
    return out.str();
}

nlohmann::json check_json(const std::vector<PropertyOutcome>& outcomes, const nlohmann::json& config) {
    nlohmann::json properties = nlohmann::json::array();
    bool all = true;
    for (const auto& o : outcomes) {
        nlohmann::json p = {
            {"name", o.name}, {"passed", o.passed}, {"instances", o.instances}, {"max_error", o.max_error}};
        if (o.counterexample) {
            p["counterexample"] = *o.counterexample;
        }
        properties.push_back(std::move(p));
        all = all && o.passed;
    }
    return {{"report", "equivalence-check"}, {"config", config}, {"properties", properties}, {"all_passed", all}};
}

std::string check_csv(const std::vector<PropertyOutcome>& outcomes) {
    std::ostringstream out;
    out << "property,passed,instances,max_error,counterexample\r\n";
    for (const auto& o : outcomes) {
        out << csv_field(o.name) << ',' << (o.passed ? "true" : "false") << ',' << o.instances << ','
            << format_double(o.max_error) << ',' << (o.counterexample ? csv_field(o.counterexample->dump()) : "")
            << "\r\n";
    }
    return out.str();
}

}  // namespace stylo::report
