#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "liuppa/sequence.hpp"

// Character-level similarity metrics generalized to sequences over an
// arbitrary element alphabet. The same code scores character strings and
// symbol sequences; every score lies in [0,1] and identical non-empty
// sequences score 1.

namespace liuppa {

using SequenceView = std::span<const element_t>;
using SequenceMetric = std::function<double(SequenceView, SequenceView)>;

namespace detail {

// Positional window used by the Monge-Elkan and TagLink element matching:
// floor(max/2) - 1, never negative.
inline std::size_t jaro_window(std::size_t la, std::size_t lb) {
    const std::size_t m = std::max(la, lb);
    return m / 2 > 0 ? m / 2 - 1 : 0;
}

// Directional greedy pass of the Jaro construction: element i of `from`
// consumes the first unconsumed equal element of `to` at a position in
// [i - half, i + half).
inline std::vector<element_t> jaro_common(SequenceView from, SequenceView to, std::size_t half) {
    std::vector<bool> used(to.size(), false);
    std::vector<element_t> common;
    for (std::size_t i = 0; i < from.size(); ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(to.size(), i + half);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!used[j] && from[i] == to[j]) {
                used[j] = true;
                common.push_back(from[i]);
                break;
            }
        }
    }
    return common;
}

}  // namespace detail

// Jaro with the two-pass common-element construction (window
// floor(min/2) + 1, upper bound exclusive). When the two directional passes
// disagree on the matched multiset the score is 0, which reproduces the
// published zero cells for sequences sharing only out-of-window elements.
inline double jaro(SequenceView a, SequenceView b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    const std::size_t half = std::min(a.size(), b.size()) / 2 + 1;
    const std::vector<element_t> c1 = detail::jaro_common(a, b, half);
    const std::vector<element_t> c2 = detail::jaro_common(b, a, half);
    if (c1.empty() || c2.empty()) return 0.0;
    std::vector<element_t> s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return 0.0;
    const double m = static_cast<double>(c1.size());
    std::size_t diffs = 0;
    for (std::size_t k = 0; k < c1.size(); ++k) diffs += c1[k] != c2[k];
    const double t = static_cast<double>(diffs) / 2.0;
    return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) + (m - t) / m) / 3.0;
}

inline double jaro_winkler(SequenceView a, SequenceView b, double prefix_scale = 0.1,
                           std::size_t max_prefix = 4) {
    const double j = jaro(a, b);
    std::size_t prefix = 0;
    const std::size_t limit = std::min({max_prefix, a.size(), b.size()});
    while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
    return j + static_cast<double>(prefix) * prefix_scale * (1.0 - j);
}

inline std::size_t levenshtein_distance(SequenceView a, SequenceView b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

inline double levenshtein_sim(SequenceView a, SequenceView b) {
    const std::size_t max_len = std::max(a.size(), b.size());
    if (max_len == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein_distance(a, b)) / static_cast<double>(max_len);
}

// Global alignment with match 0 / mismatch 1 / gap 2, normalized so the
// score is 1 exactly when the sequences are equal.
inline double needleman_wunsch_sim(SequenceView a, SequenceView b, double gap_cost = 2.0,
                                   double mismatch_cost = 1.0) {
    const std::size_t max_len = std::max(a.size(), b.size());
    if (max_len == 0) return 1.0;
    std::vector<double> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<double>(j) * gap_cost;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        double diag = row[0];
        row[0] = static_cast<double>(i) * gap_cost;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double up = row[j];
            const double sub = diag + (a[i - 1] == b[j - 1] ? 0.0 : mismatch_cost);
            row[j] = std::min({up + gap_cost, row[j - 1] + gap_cost, sub});
            diag = up;
        }
    }
    const double worst = static_cast<double>(max_len) * std::max(gap_cost, mismatch_cost);
    return 1.0 - row[b.size()] / worst;
}

// Best local alignment score divided by min length, clamped to [0,1].
inline double smith_waterman_sim(SequenceView a, SequenceView b, double match = 1.0,
                                 double mismatch = -2.0, double gap = -0.5) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    double best = 0.0;
    std::vector<double> row(b.size() + 1, 0.0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        double diag = row[0];
        row[0] = 0.0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double up = row[j];
            const double sub = diag + (a[i - 1] == b[j - 1] ? match : mismatch);
            row[j] = std::max({0.0, sub, up + gap, row[j - 1] + gap});
            best = std::max(best, row[j]);
            diag = up;
        }
    }
    const double denom = static_cast<double>(std::min(a.size(), b.size())) * match;
    return std::clamp(best / denom, 0.0, 1.0);
}

inline double qgram_sim(SequenceView a, SequenceView b, std::size_t q = 3) {
    if (a.empty() && b.empty()) return 1.0;
    const auto grams = [q](SequenceView s) {
        ElementSequence padded(q - 1, kPadSentinel);
        padded.insert(padded.end(), s.begin(), s.end());
        padded.insert(padded.end(), q - 1, kPadSentinel);
        std::map<ElementSequence, int> counts;
        for (std::size_t i = 0; i + q <= padded.size(); ++i) {
            counts[ElementSequence(padded.begin() + static_cast<std::ptrdiff_t>(i),
                                   padded.begin() + static_cast<std::ptrdiff_t>(i + q))]++;
        }
        return counts;
    };
    const auto ga = grams(a);
    const auto gb = grams(b);
    long distance = 0;
    for (const auto& [g, ca] : ga) {
        const auto it = gb.find(g);
        distance += std::abs(ca - (it == gb.end() ? 0 : it->second));
    }
    for (const auto& [g, cb] : gb) {
        if (!ga.contains(g)) distance += cb;
    }
    const double total = static_cast<double>(a.size() + q - 1 + b.size() + q - 1);
    return 1.0 - static_cast<double>(distance) / total;
}

// Mean over elements of a of the best positional match in b: an element
// matches only an equal element whose position lies within the Jaro window.
// Normalized by |a|, so asymmetric.
inline double monge_elkan_seq(SequenceView a, SequenceView b) {
    if (a.empty()) throw std::invalid_argument("monge_elkan_seq: empty left operand");
    if (b.empty()) return 0.0;
    const std::size_t window = detail::jaro_window(a.size(), b.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(b.size(), i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (a[i] == b[j]) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(a.size());
}

inline double jaccard2(SequenceView a, SequenceView b) {
    if (a.empty() && b.empty()) return 1.0;
    std::vector<element_t> sa(a.begin(), a.end());
    std::vector<element_t> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    std::sort(sb.begin(), sb.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    std::vector<element_t> inter;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    const double uni = static_cast<double>(sa.size() + sb.size() - inter.size());
    return static_cast<double>(inter.size()) / uni;
}

namespace detail {

// Longest common substring of a and b; returns (start_a, start_b, length).
inline std::tuple<std::size_t, std::size_t, std::size_t> longest_common_substring(
    const ElementSequence& a, const ElementSequence& b) {
    std::size_t best_len = 0, best_a = 0, best_b = 0;
    std::vector<std::size_t> row(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = diag + 1;
                if (row[j] > best_len) {
                    best_len = row[j];
                    best_a = i - best_len;
                    best_b = j - best_len;
                }
            } else {
                row[j] = 0;
            }
            diag = up;
        }
    }
    return {best_a, best_b, best_len};
}

}  // namespace detail

// Stoilos I_Sub: commonality from iterative removal of longest common
// substrings, Hamacher-product difference (p = 0.6) and a Winkler prefix
// bonus. The raw value lies in [-1,1]; it is mapped affinely onto [0,1].
inline double isub(SequenceView a, SequenceView b) {
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0 && lb == 0) return 1.0;
    if (la == 0 || lb == 0) return 0.0;

    ElementSequence ra(a.begin(), a.end());
    ElementSequence rb(b.begin(), b.end());
    std::size_t common = 0;
    while (!ra.empty() && !rb.empty()) {
        const auto [pa, pb, len] = detail::longest_common_substring(ra, rb);
        if (len == 0) break;
        common += len;
        ra.erase(ra.begin() + static_cast<std::ptrdiff_t>(pa),
                 ra.begin() + static_cast<std::ptrdiff_t>(pa + len));
        rb.erase(rb.begin() + static_cast<std::ptrdiff_t>(pb),
                 rb.begin() + static_cast<std::ptrdiff_t>(pb + len));
    }
    const double commonality = 2.0 * static_cast<double>(common) / static_cast<double>(la + lb);

    const double unmatched_a = static_cast<double>(la - std::min(common, la)) / static_cast<double>(la);
    const double unmatched_b = static_cast<double>(lb - std::min(common, lb)) / static_cast<double>(lb);
    const double sum = unmatched_a + unmatched_b;
    const double product = unmatched_a * unmatched_b;
    constexpr double p = 0.6;
    const double dissimilarity = (sum - product) == 0.0 ? 0.0 : product / (p + (1.0 - p) * (sum - product));

    std::size_t prefix = 0;
    const std::size_t limit = std::min(la, lb);
    while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
    const double winkler = static_cast<double>(std::min<std::size_t>(4, prefix)) * 0.1 * (1.0 - commonality);

    const double raw = commonality - dissimilarity + winkler;
    return std::clamp((raw + 1.0) / 2.0, 0.0, 1.0);
}

// Table-4 metric codes.
enum class MetricCode : int {
    JaroWinkler = 1,
    Levenshtein = 2,
    NeedlemanWunch = 3,
    SmithWaterman = 4,
    Qgram = 5,
    MongeElkan = 6,
    Jaro = 7,
    Jaccard2 = 8,
    ISub = 9,
};

/// Returns the sequence metric registered under a 1..9 code, with its
/// default parameters.
inline SequenceMetric metric_by_code(int code) {
    switch (code) {
        case 1: return [](SequenceView a, SequenceView b) { return jaro_winkler(a, b); };
        case 2: return [](SequenceView a, SequenceView b) { return levenshtein_sim(a, b); };
        case 3: return [](SequenceView a, SequenceView b) { return needleman_wunsch_sim(a, b); };
        case 4: return [](SequenceView a, SequenceView b) { return smith_waterman_sim(a, b); };
        case 5: return [](SequenceView a, SequenceView b) { return qgram_sim(a, b); };
        case 6: return [](SequenceView a, SequenceView b) { return monge_elkan_seq(a, b); };
        case 7: return [](SequenceView a, SequenceView b) { return jaro(a, b); };
        case 8: return [](SequenceView a, SequenceView b) { return jaccard2(a, b); };
        case 9: return [](SequenceView a, SequenceView b) { return isub(a, b); };
        default: throw std::invalid_argument("unknown metric code: " + std::to_string(code));
    }
}

inline const char* metric_name(int code) {
    switch (code) {
        case 1: return "jarowinkler";
        case 2: return "levenshtein";
        case 3: return "needlemanwunch";
        case 4: return "smithwaterman";
        case 5: return "qgram";
        case 6: return "mongeelkan";
        case 7: return "jaro";
        case 8: return "jaccard2";
        case 9: return "isub";
        default: throw std::invalid_argument("unknown metric code: " + std::to_string(code));
    }
}

}  // namespace liuppa
