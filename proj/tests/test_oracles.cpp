#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "liuppa/baselines.hpp"
#include "liuppa/seqmetrics.hpp"

using namespace liuppa;
using Catch::Matchers::WithinAbs;

namespace {

// Textbook three-way recursion, deliberately left exponential.
std::size_t naive_levenshtein(SequenceView a, SequenceView b) {
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();
    const std::size_t sub =
        naive_levenshtein(a.subspan(1), b.subspan(1)) + (a[0] == b[0] ? 0 : 1);
    const std::size_t del = naive_levenshtein(a.subspan(1), b) + 1;
    const std::size_t ins = naive_levenshtein(a, b.subspan(1)) + 1;
    return std::min({sub, del, ins});
}

std::vector<ElementSequence> all_sequences(std::size_t max_len, element_t alphabet) {
    std::vector<ElementSequence> out{{}};
    std::vector<ElementSequence> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<ElementSequence> next;
        for (const auto& seq : frontier) {
            for (element_t e = 0; e < alphabet; ++e) {
                ElementSequence extended = seq;
                extended.push_back(e);
                next.push_back(extended);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Second transcription of the I_Sub definition, structured around explicit
// string rebuilding rather than in-place erasure.
double isub_reference(const ElementSequence& a, const ElementSequence& b) {
    const double la = static_cast<double>(a.size());
    const double lb = static_cast<double>(b.size());
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;

    ElementSequence s = a, t = b;
    double common = 0.0;
    while (true) {
        std::size_t best_len = 0, bi = 0, bj = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < t.size(); ++j) {
                std::size_t k = 0;
                while (i + k < s.size() && j + k < t.size() && s[i + k] == t[j + k]) ++k;
                if (k > best_len) {
                    best_len = k;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best_len == 0) break;
        common += static_cast<double>(best_len);
        ElementSequence ns(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(bi));
        ns.insert(ns.end(), s.begin() + static_cast<std::ptrdiff_t>(bi + best_len), s.end());
        ElementSequence nt(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(bj));
        nt.insert(nt.end(), t.begin() + static_cast<std::ptrdiff_t>(bj + best_len), t.end());
        s = std::move(ns);
        t = std::move(nt);
    }
    const double commonality = 2.0 * common / (la + lb);
    const double u1 = std::max(la - common, 0.0) / la;
    const double u2 = std::max(lb - common, 0.0) / lb;
    const double p = 0.6;
    const double denom = p + (1.0 - p) * (u1 + u2 - u1 * u2);
    const double dissimilarity = (u1 + u2 - u1 * u2) == 0.0 ? 0.0 : u1 * u2 / denom;
    std::size_t prefix = 0;
    while (prefix < std::min(a.size(), b.size()) && a[prefix] == b[prefix]) ++prefix;
    const double winkler = std::min<double>(4.0, static_cast<double>(prefix)) * 0.1 * (1.0 - commonality);
    return ((commonality - dissimilarity + winkler) + 1.0) / 2.0;
}

// Exhaustive assignment by permutation, for small matrices.
double brute_force_assignment(const std::vector<std::vector<double>>& scores) {
    const std::size_t n = scores.size();
    const std::size_t m = scores[0].size();
    std::vector<std::size_t> cols(m);
    std::iota(cols.begin(), cols.end(), 0);
    double best = 0.0;
    do {
        double total = 0.0;
        for (std::size_t i = 0; i < std::min(n, m); ++i) total += scores[i][cols[i]];
        best = std::max(best, total);
    } while (std::next_permutation(cols.begin(), cols.end()));
    // Row permutations matter when n > m.
    if (n > m) {
        std::vector<std::size_t> rows(n);
        std::iota(rows.begin(), rows.end(), 0);
        do {
            double total = 0.0;
            for (std::size_t j = 0; j < m; ++j) total += scores[rows[j]][j];
            best = std::max(best, total);
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    return best;
}

}  // namespace

TEST_CASE("levenshtein DP matches naive recursion exhaustively (length <= 5)") {
    const auto sequences = all_sequences(5, 3);
    for (const auto& a : sequences) {
        for (const auto& b : sequences) {
            REQUIRE(levenshtein_distance(a, b) == naive_levenshtein(a, b));
        }
    }
}

TEST_CASE("isub matches an independent transcription on random sequences") {
    std::mt19937 rng(20240826);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<element_t> sym(0, 4);
    for (int iter = 0; iter < 500; ++iter) {
        ElementSequence a(static_cast<std::size_t>(len(rng)));
        ElementSequence b(static_cast<std::size_t>(len(rng)));
        for (auto& e : a) e = sym(rng);
        for (auto& e : b) e = sym(rng);
        CHECK_THAT(isub(a, b), WithinAbs(isub_reference(a, b), 1e-12));
    }
    CHECK_THAT(isub(to_elements("trial"), to_elements("tria")),
               WithinAbs(isub_reference(to_elements("trial"), to_elements("tria")), 1e-12));
}

TEST_CASE("assignment DP matches brute force on random matrices") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = dim(rng), m = dim(rng);
        std::vector<std::vector<double>> scores(n, std::vector<double>(m));
        for (auto& row : scores) {
            for (auto& cell : row) cell = val(rng);
        }
        CHECK_THAT(detail::best_assignment(scores),
                   WithinAbs(brute_force_assignment(scores), 1e-9));
    }
}

TEST_CASE("greedy assignment fallback stays within bounds") {
    std::vector<std::vector<double>> scores(20, std::vector<double>(20, 0.0));
    for (std::size_t i = 0; i < 20; ++i) scores[i][i] = 1.0;
    // Above the exact cutoff the greedy path still finds the diagonal.
    CHECK_THAT(detail::best_assignment(scores, 16), WithinAbs(20.0, 1e-12));
}
