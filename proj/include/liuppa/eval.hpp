#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "liuppa/seqmetrics.hpp"
#include "liuppa/symbolize.hpp"

// Dataset handling, Cohen-style candidate-pair generation, and the ranking
// evaluation protocol: score every labeled pair, sort descending, report
// average precision.

namespace liuppa {

using StringMetric = std::function<double(const std::string&, const std::string&)>;

struct LabeledPair {
    std::string s1;
    std::string s2;
    bool correct = false;
};

struct PairDataset {
    std::vector<LabeledPair> pairs;

    std::size_t n() const { return pairs.size(); }
    std::size_t m() const {
        return static_cast<std::size_t>(
            std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.correct; }));
    }
};

struct ScoredRanking {
    struct Entry {
        std::size_t pair_index;
        double score;
        bool correct;
    };
    // Sorted by score descending, ties by ascending original index.
    std::vector<Entry> entries;
};

struct EvalReport {
    std::string metric_name;
    double avg_precision = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

}  // namespace detail

/// Parses `s1<TAB>s2<TAB>{1|0}` lines; `#` lines are comments.
inline PairDataset load_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pairs file: " + path);
    PairDataset dataset;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fields = detail::split_tabs(line);
        const auto fail = [&](const std::string& what) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
        };
        if (fields.size() != 3) fail("expected 3 tab-separated fields, got " + std::to_string(fields.size()));
        const std::string s1 = detail::trim(fields[0]);
        const std::string s2 = detail::trim(fields[1]);
        const std::string label = detail::trim(fields[2]);
        if (s1.empty() || s2.empty()) fail("empty string field");
        if (label != "0" && label != "1") fail("label must be 0 or 1, got '" + label + "'");
        dataset.pairs.push_back({s1, s2, label == "1"});
    }
    return dataset;
}

/// Blocking generator: every unordered pair of distinct records sharing at
/// least one token; a pair is correct when the ids match.
inline PairDataset generate_pairs_from_records(
    const std::vector<std::pair<std::string, std::string>>& records) {
    std::vector<std::set<Token>> token_sets;
    token_sets.reserve(records.size());
    for (const auto& [id, text] : records) {
        const auto toks = tokenize(text);
        token_sets.emplace_back(toks.begin(), toks.end());
    }
    PairDataset dataset;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            const bool share = std::any_of(token_sets[i].begin(), token_sets[i].end(),
                                           [&](const Token& t) { return token_sets[j].contains(t); });
            if (!share) continue;
            dataset.pairs.push_back({records[i].second, records[j].second,
                                     records[i].first == records[j].first});
        }
    }
    return dataset;
}

/// Non-interpolated average precision: mean of precision-at-rank over the
/// ranks holding correct pairs, divided by the total correct count m.
inline double avg_precision(const ScoredRanking& ranking, std::size_t m) {
    if (m == 0) throw std::invalid_argument("undefined average precision: no correct pairs");
    double sum = 0.0;
    std::size_t correct_so_far = 0;
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        if (ranking.entries[i].correct) {
            ++correct_so_far;
            sum += static_cast<double>(correct_so_far) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(m);
}

inline ScoredRanking rank_pairs(const StringMetric& metric, const PairDataset& dataset) {
    ScoredRanking ranking;
    ranking.entries.reserve(dataset.pairs.size());
    for (std::size_t i = 0; i < dataset.pairs.size(); ++i) {
        const auto& p = dataset.pairs[i];
        double score;
        try {
            score = metric(p.s1, p.s2);
        } catch (const std::exception& e) {
            throw std::runtime_error("scoring pair " + std::to_string(i + 1) + " ('" + p.s1 +
                                     "', '" + p.s2 + "'): " + e.what());
        }
        ranking.entries.push_back({i, score, p.correct});
    }
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const auto& a, const auto& b) {
                         if (a.score != b.score) return a.score > b.score;
                         return a.pair_index < b.pair_index;
                     });
    return ranking;
}

inline EvalReport evaluate(const std::string& name, const StringMetric& metric,
                           const PairDataset& dataset) {
    const std::size_t m = dataset.m();
    if (m == 0) throw std::invalid_argument("dataset has no correct pairs");
    const ScoredRanking ranking = rank_pairs(metric, dataset);
    return {name, avg_precision(ranking, m), dataset.n(), m};
}

struct NamedMetric {
    std::string name;
    StringMetric metric;
};

/// One report per metric, sorted by average precision descending, ties by
/// metric name.
inline std::vector<EvalReport> rank_metrics(const std::vector<NamedMetric>& metrics,
                                            const PairDataset& dataset) {
    std::vector<EvalReport> reports;
    reports.reserve(metrics.size());
    for (const auto& nm : metrics) reports.push_back(evaluate(nm.name, nm.metric, dataset));
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.avg_precision != b.avg_precision) return a.avg_precision > b.avg_precision;
        return a.metric_name < b.metric_name;
    });
    return reports;
}

struct TokenPairJudgment {
    Token a;
    Token b;
    bool equivalent = false;
};

/// Grid search for the token threshold maximizing F1 of the rule
/// "equivalent iff mu1 >= epsilon"; ties go to the largest epsilon.
inline double calibrate_epsilon(const std::vector<TokenPairJudgment>& token_pairs, int mu1_code,
                                int grid_lo_pct = 50, int grid_hi_pct = 99) {
    const bool has_pos = std::any_of(token_pairs.begin(), token_pairs.end(),
                                     [](const auto& p) { return p.equivalent; });
    const bool has_neg = std::any_of(token_pairs.begin(), token_pairs.end(),
                                     [](const auto& p) { return !p.equivalent; });
    if (!has_pos || !has_neg) throw std::invalid_argument("cannot calibrate: need both classes");

    const SequenceMetric mu1 = metric_by_code(mu1_code);
    std::vector<std::pair<double, bool>> scored;
    scored.reserve(token_pairs.size());
    for (const auto& p : token_pairs) {
        scored.emplace_back(mu1(to_elements(p.a), to_elements(p.b)), p.equivalent);
    }

    double best_f1 = -1.0;
    double best_eps = 0.0;
    for (int pct = grid_lo_pct; pct <= grid_hi_pct; ++pct) {
        const double eps = static_cast<double>(pct) / 100.0;
        std::size_t tp = 0, fp = 0, fn = 0;
        for (const auto& [score, equivalent] : scored) {
            const bool predicted = score >= eps;
            tp += predicted && equivalent;
            fp += predicted && !equivalent;
            fn += !predicted && equivalent;
        }
        const double f1 = (2 * tp + fp + fn) == 0
                              ? 0.0
                              : 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
        if (f1 >= best_f1) {  // >= keeps the largest epsilon on ties
            best_f1 = f1;
            best_eps = eps;
        }
    }
    return best_eps;
}

struct Alignment {
    std::string term;
    std::string label;
    double score;
};

/// For each term, every label scoring at least `threshold`, sorted per term
/// by score descending (ties by label input order).
inline std::vector<Alignment> align_lexicon(const std::vector<std::string>& terms,
                                            const std::vector<std::string>& labels,
                                            const StringMetric& metric, double threshold) {
    std::vector<Alignment> out;
    for (const auto& term : terms) {
        std::vector<std::pair<double, std::size_t>> hits;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const double score = metric(term, labels[j]);
            if (score >= threshold) hits.emplace_back(score, j);
        }
        std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (const auto& [score, j] : hits) out.push_back({term, labels[j], score});
    }
    return out;
}

}  // namespace liuppa
