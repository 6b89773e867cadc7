#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "liuppa/seqmetrics.hpp"
#include "liuppa/symbolize.hpp"

// Comparison metrics: token-based (Jaccard, TFIDF) and hybrid (SoftTFIDF,
// hybrid Monge-Elkan, TagLink).

namespace liuppa {

struct CorpusStats {
    std::size_t document_count = 0;
    std::map<Token, std::size_t> document_frequency;

    static CorpusStats build(const std::vector<std::string>& documents) {
        CorpusStats stats;
        stats.document_count = documents.size();
        for (const auto& doc : documents) {
            std::set<Token> seen;
            for (const auto& t : tokenize(doc)) seen.insert(t);
            for (const auto& t : seen) stats.document_frequency[t]++;
        }
        return stats;
    }

    // Unseen tokens count as appearing in a single document.
    std::size_t df(const Token& t) const {
        const auto it = document_frequency.find(t);
        return it == document_frequency.end() ? 1 : it->second;
    }
};

inline double jaccard_tokens(std::string_view s1, std::string_view s2) {
    const auto t1 = tokenize(s1);
    const auto t2 = tokenize(s2);
    const std::set<Token> a(t1.begin(), t1.end());
    const std::set<Token> b(t2.begin(), t2.end());
    if (a.empty() && b.empty()) return 1.0;
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.contains(t);
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

namespace detail {

// log(tf+1) * log(N/df) weights, one coordinate per distinct token.
inline std::map<Token, double> tfidf_weights(const CorpusStats& stats,
                                             const std::vector<Token>& tokens) {
    std::map<Token, std::size_t> tf;
    for (const auto& t : tokens) tf[t]++;
    std::map<Token, double> w;
    for (const auto& [t, count] : tf) {
        const double idf = std::log(static_cast<double>(stats.document_count) /
                                    static_cast<double>(stats.df(t)));
        w[t] = std::log(static_cast<double>(count) + 1.0) * idf;
    }
    return w;
}

inline double norm(const std::map<Token, double>& w) {
    double sum = 0.0;
    for (const auto& [t, v] : w) sum += v * v;
    return std::sqrt(sum);
}

}  // namespace detail

inline double tfidf_cosine(const CorpusStats& stats, std::string_view s1, std::string_view s2) {
    const auto w1 = detail::tfidf_weights(stats, tokenize(s1));
    const auto w2 = detail::tfidf_weights(stats, tokenize(s2));
    const double n1 = detail::norm(w1);
    const double n2 = detail::norm(w2);
    if (n1 == 0.0 || n2 == 0.0) return 0.0;
    double dot = 0.0;
    for (const auto& [t, v] : w1) {
        const auto it = w2.find(t);
        if (it != w2.end()) dot += v * it->second;
    }
    return std::clamp(dot / (n1 * n2), 0.0, 1.0);
}

/// Cohen's SoftTFIDF: tokens of s1 whose best inner similarity in s2
/// reaches theta contribute the product of their normalized weights and
/// that similarity.
inline double soft_tfidf(const CorpusStats& stats, std::string_view s1, std::string_view s2,
                         double theta = 0.9) {
    const auto tokens1 = tokenize(s1);
    const auto tokens2 = tokenize(s2);
    if (tokens1.empty() && tokens2.empty()) return 1.0;
    const auto w1 = detail::tfidf_weights(stats, tokens1);
    const auto w2 = detail::tfidf_weights(stats, tokens2);
    const double n1 = detail::norm(w1);
    const double n2 = detail::norm(w2);
    if (n1 == 0.0 || n2 == 0.0) return 0.0;

    std::vector<ElementSequence> elems2;
    elems2.reserve(tokens2.size());
    for (const auto& t : tokens2) elems2.push_back(to_elements(t));

    double score = 0.0;
    for (const auto& [t, weight] : w1) {
        const ElementSequence e1 = to_elements(t);
        double best = -1.0;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < elems2.size(); ++j) {
            const double sim = jaro_winkler(e1, elems2[j]);
            if (sim > best) {
                best = sim;
                best_j = j;
            }
        }
        if (best >= theta) {
            score += (weight / n1) * (w2.at(tokens2[best_j]) / n2) * best;
        }
    }
    return std::clamp(score, 0.0, 1.0);
}

/// Mean over tokens of s1 of the best Jaro-Winkler similarity against the
/// tokens of s2.
inline double monge_elkan_hybrid(std::string_view s1, std::string_view s2) {
    const auto tokens1 = tokenize(s1);
    const auto tokens2 = tokenize(s2);
    if (tokens1.empty()) throw std::invalid_argument("monge_elkan_hybrid: empty left operand");
    if (tokens2.empty()) return 0.0;
    std::vector<ElementSequence> elems2;
    elems2.reserve(tokens2.size());
    for (const auto& t : tokens2) elems2.push_back(to_elements(t));
    double sum = 0.0;
    for (const auto& t : tokens1) {
        const ElementSequence e1 = to_elements(t);
        double best = 0.0;
        for (const auto& e2 : elems2) best = std::max(best, jaro_winkler(e1, e2));
        sum += best;
    }
    return sum / static_cast<double>(tokens1.size());
}

namespace detail {

// Maximum-sum one-to-one assignment over a non-negative score matrix.
// Exact (bitmask DP over the smaller side) up to `exact_cutoff` tokens per
// side, greedy best-first beyond.
inline double best_assignment(const std::vector<std::vector<double>>& scores,
                              std::size_t exact_cutoff = 16) {
    const std::size_t n = scores.size();
    if (n == 0) return 0.0;
    const std::size_t m = scores[0].size();
    if (m == 0) return 0.0;

    if (std::max(n, m) <= exact_cutoff) {
        // Mask ranges over the smaller side.
        const bool mask_cols = m <= n;
        const std::size_t rows = mask_cols ? n : m;
        const std::size_t cols = mask_cols ? m : n;
        const auto at = [&](std::size_t r, std::size_t c) {
            return mask_cols ? scores[r][c] : scores[c][r];
        };
        std::vector<double> dp(std::size_t{1} << cols, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<double> next = dp;
            for (std::size_t mask = 0; mask < dp.size(); ++mask) {
                for (std::size_t c = 0; c < cols; ++c) {
                    if (mask & (std::size_t{1} << c)) continue;
                    const std::size_t with = mask | (std::size_t{1} << c);
                    next[with] = std::max(next[with], dp[mask] + at(r, c));
                }
            }
            dp = std::move(next);
        }
        return *std::max_element(dp.begin(), dp.end());
    }

    // Greedy fallback: repeatedly take the best remaining pair.
    std::vector<std::tuple<double, std::size_t, std::size_t>> cells;
    cells.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) cells.emplace_back(scores[i][j], i, j);
    }
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) < std::get<2>(b);
    });
    std::vector<bool> used_i(n, false), used_j(m, false);
    double total = 0.0;
    for (const auto& [s, i, j] : cells) {
        if (used_i[i] || used_j[j]) continue;
        used_i[i] = true;
        used_j[j] = true;
        total += s;
    }
    return total;
}

// Character-level token comparison: Jaro-style matched-character count
// normalized by the shorter token. Deliberately substring-friendly, which
// is what makes TagLink over-score pairs like nation / national.
inline double taglink_token_sim(const ElementSequence& t, const ElementSequence& u) {
    if (t.empty() && u.empty()) return 1.0;
    if (t.empty() || u.empty()) return 0.0;
    const std::size_t window = jaro_window(t.size(), u.size());
    std::vector<bool> used(u.size(), false);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(u.size(), i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!used[j] && t[i] == u[j]) {
                used[j] = true;
                ++matched;
                break;
            }
        }
    }
    return static_cast<double>(matched) / static_cast<double>(std::min(t.size(), u.size()));
}

}  // namespace detail

/// TagLink-style assignment metric: token pairs scored by character
/// comparison, matched one-to-one to maximize the total, each selected pair
/// weighted by its share of the combined character mass.
inline double taglink(std::string_view s1, std::string_view s2) {
    const auto tokens1 = tokenize(s1);
    const auto tokens2 = tokenize(s2);
    if (tokens1.empty() && tokens2.empty()) return 1.0;
    if (tokens1.empty() || tokens2.empty()) return 0.0;

    std::vector<ElementSequence> e1, e2;
    e1.reserve(tokens1.size());
    e2.reserve(tokens2.size());
    std::size_t chars1 = 0, chars2 = 0;
    for (const auto& t : tokens1) {
        e1.push_back(to_elements(t));
        chars1 += e1.back().size();
    }
    for (const auto& t : tokens2) {
        e2.push_back(to_elements(t));
        chars2 += e2.back().size();
    }

    const double mass = static_cast<double>(chars1 + chars2);
    std::vector<std::vector<double>> scores(e1.size(), std::vector<double>(e2.size()));
    for (std::size_t i = 0; i < e1.size(); ++i) {
        for (std::size_t j = 0; j < e2.size(); ++j) {
            const double weight = static_cast<double>(e1[i].size() + e2[j].size()) / mass;
            scores[i][j] = detail::taglink_token_sim(e1[i], e2[j]) * weight;
        }
    }
    return std::clamp(detail::best_assignment(scores), 0.0, 1.0);
}

}  // namespace liuppa
