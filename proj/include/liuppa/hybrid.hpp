#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "liuppa/seqmetrics.hpp"
#include "liuppa/symbolize.hpp"

// The two-level hybrid metric: tokenize, map tokens to symbols with the
// token-level metric mu1 and threshold epsilon, then score the two symbol
// sequences with mu2.

namespace liuppa {

struct HybridConfig {
    int mu1 = 1;
    int mu2 = 1;
    double epsilon = 0.84;
};

/// Per-metric token threshold, calibrated for the token-level role.
inline double default_threshold(int code) {
    switch (code) {
        case 1: return 0.84;
        case 2: return 0.79;
        case 3: return 0.88;
        case 4: return 0.83;
        case 5: return 0.60;
        case 6: return 0.84;
        case 7: return 0.80;
        case 8: return 0.80;
        case 9: return 0.80;
        default: throw std::invalid_argument("unknown metric code: " + std::to_string(code));
    }
}

inline HybridConfig make_config(int mu1, int mu2) { return {mu1, mu2, default_threshold(mu1)}; }

/// All 81 (mu1, mu2) combinations, mu1-major, each with mu1's default
/// threshold.
inline std::vector<HybridConfig> enumerate_combinations() {
    std::vector<HybridConfig> out;
    out.reserve(81);
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) out.push_back(make_config(i, j));
    }
    return out;
}

inline double liuppa_score(const HybridConfig& config, std::string_view s1, std::string_view s2) {
    const SequenceMetric mu1 = metric_by_code(config.mu1);
    const SequenceMetric mu2 = metric_by_code(config.mu2);
    const auto tokens1 = tokenize(s1);
    const auto tokens2 = tokenize(s2);
    if (tokens1.empty() && tokens2.empty()) return 1.0;
    if (tokens1.empty() || tokens2.empty()) return 0.0;
    const auto [sym1, sym2] = symbolize_pair(tokens1, tokens2, mu1, config.epsilon);
    return mu2(sym1.symbols, sym2.symbols);
}

}  // namespace liuppa
