#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liuppa/baselines.hpp"
#include "liuppa/eval.hpp"
#include "liuppa/hybrid.hpp"

// Named metric construction from textual selectors such as `liuppa:1,1`,
// `liuppa:1,1:eps=0.9`, `jarowinkler` or `softtfidf:theta=0.85`, plus the
// full evaluation roster (81 hybrid configurations and the 13 baselines)
// and CSV report rendering.

namespace liuppa {

namespace detail {

inline StringMetric char_level_metric(int code) {
    const SequenceMetric metric = metric_by_code(code);
    return [metric](const std::string& s1, const std::string& s2) {
        const ElementSequence a = to_elements(s1);
        const ElementSequence b = to_elements(s2);
        if (a.empty() && b.empty()) return 1.0;
        if (a.empty() || b.empty()) return 0.0;
        return metric(a, b);
    };
}

inline std::optional<double> parse_keyed_number(const std::string& part, const std::string& key) {
    if (!part.starts_with(key + "=")) return std::nullopt;
    const std::string value = part.substr(key.size() + 1);
    std::size_t consumed = 0;
    double out;
    try {
        out = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value in metric spec: " + part);
    }
    if (consumed != value.size()) throw std::invalid_argument("bad numeric value in metric spec: " + part);
    return out;
}

inline std::optional<int> base_code_by_name(const std::string& name) {
    if (name == "jarowinkler") return 1;
    if (name == "levenshtein") return 2;
    if (name == "needlemanwunch" || name == "needlemanwunsch") return 3;
    if (name == "smithwaterman") return 4;
    if (name == "qgram") return 5;
    if (name == "mongeelkan") return 6;
    if (name == "jaro") return 7;
    if (name == "jaccard2") return 8;
    if (name == "isub") return 9;
    return std::nullopt;
}

}  // namespace detail

/// Builds a string metric from a textual selector. TFIDF-family metrics use
/// `stats` as their IDF corpus.
inline StringMetric make_metric(const std::string& spec, const CorpusStats& stats) {
    if (spec.starts_with("liuppa:")) {
        std::string rest = spec.substr(7);
        std::optional<double> eps;
        const std::size_t colon = rest.find(':');
        if (colon != std::string::npos) {
            const std::string opt = rest.substr(colon + 1);
            eps = detail::parse_keyed_number(opt, "eps");
            if (!eps) throw std::invalid_argument("unknown metric option: " + opt);
            rest = rest.substr(0, colon);
        }
        int i = 0, j = 0;
        char comma = 0;
        std::istringstream in(rest);
        if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
            throw std::invalid_argument("bad liuppa selector: " + spec);
        }
        HybridConfig config = make_config(i, j);  // validates codes
        if (eps) config.epsilon = *eps;
        return [config](const std::string& s1, const std::string& s2) {
            return liuppa_score(config, s1, s2);
        };
    }
    if (const auto code = detail::base_code_by_name(spec)) {
        return detail::char_level_metric(*code);
    }
    if (spec == "jaccard") {
        return [](const std::string& s1, const std::string& s2) { return jaccard_tokens(s1, s2); };
    }
    if (spec == "tfidf") {
        return [stats](const std::string& s1, const std::string& s2) {
            return tfidf_cosine(stats, s1, s2);
        };
    }
    if (spec == "softtfidf" || spec.starts_with("softtfidf:")) {
        double theta = 0.9;
        if (const std::size_t colon = spec.find(':'); colon != std::string::npos) {
            const auto parsed = detail::parse_keyed_number(spec.substr(colon + 1), "theta");
            if (!parsed) throw std::invalid_argument("unknown metric option: " + spec.substr(colon + 1));
            theta = *parsed;
        }
        return [stats, theta](const std::string& s1, const std::string& s2) {
            return soft_tfidf(stats, s1, s2, theta);
        };
    }
    if (spec == "mongeelkan_hybrid" || spec == "mongeelkanhybrid") {
        return [](const std::string& s1, const std::string& s2) {
            return monge_elkan_hybrid(s1, s2);
        };
    }
    if (spec == "taglink") {
        return [](const std::string& s1, const std::string& s2) { return taglink(s1, s2); };
    }
    throw std::invalid_argument("unknown metric: " + spec);
}

/// The roster behind `eval --all`: the 81 hybrid configurations plus the 13
/// baseline metrics.
inline std::vector<NamedMetric> all_metrics(const CorpusStats& stats) {
    std::vector<NamedMetric> out;
    for (const auto& config : enumerate_combinations()) {
        const std::string name =
            "liuppa:" + std::to_string(config.mu1) + "," + std::to_string(config.mu2);
        out.push_back({name, make_metric(name, stats)});
    }
    for (const int code : {1, 2, 3, 4, 5, 6, 7, 9}) {
        out.push_back({metric_name(code), detail::char_level_metric(code)});
    }
    for (const std::string name : {"jaccard", "tfidf", "softtfidf", "mongeelkan_hybrid", "taglink"}) {
        out.push_back({name, make_metric(name, stats)});
    }
    return out;
}

inline CorpusStats corpus_from_dataset(const PairDataset& dataset) {
    std::vector<std::string> docs;
    docs.reserve(dataset.pairs.size() * 2);
    for (const auto& p : dataset.pairs) {
        docs.push_back(p.s1);
        docs.push_back(p.s2);
    }
    return CorpusStats::build(docs);
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace detail

/// CSV report: `metric,avg_precision,n,m`, average precision to 4 decimals.
inline std::string render_report(const std::vector<EvalReport>& reports) {
    std::ostringstream out;
    out << "# pairs ranked by score descending; ties broken by dataset order\n";
    out << "metric,avg_precision,n,m\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& r : reports) {
        out << detail::csv_field(r.metric_name) << "," << r.avg_precision << "," << r.n << ","
            << r.m << "\n";
    }
    return out.str();
}

}  // namespace liuppa
