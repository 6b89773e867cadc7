#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liuppa/seqmetrics.hpp"
#include "liuppa/sequence.hpp"

// Tokenization and the token-to-symbol transform: two token lists are
// rewritten into two symbol sequences, tokens scoring >= epsilon under the
// token-level metric sharing a symbol.

namespace liuppa {

using Token = std::string;  // case-folded, delimiter-free, non-empty

struct SymbolSequence {
    std::vector<element_t> symbols;  // dense ids from 0

    ElementSequence as_elements() const { return symbols; }
    bool operator==(const SymbolSequence&) const = default;
};

struct SymbolTable {
    struct Entry {
        Token token;
        ElementSequence codepoints;
        element_t symbol;
    };
    std::vector<Entry> entries;  // registration order; first entry holds symbol 0

    element_t distinct_symbols = 0;
};

namespace detail {

inline bool is_delimiter(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\r': case 0x0B: case 0x0C:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
        case U'-': case U'\'': case 0x2019: case U'/':
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

}  // namespace detail

/// Splits on runs of whitespace, hyphen, apostrophe or slash and
/// case-folds each piece. Diacritics are preserved.
inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < s.size()) {
        const char32_t cp = utf8::decode(s, i);
        if (detail::is_delimiter(cp)) {
            if (!current.empty()) tokens.push_back(std::exchange(current, {}));
        } else {
            utf8::encode(fold_codepoint(cp), current);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

/// Step-1 transform: walks the tokens of both strings in order, assigning
/// each token the symbol of its best-scoring registered predecessor when
/// that score reaches epsilon, otherwise a fresh symbol. Every token is
/// registered, matched or not.
inline std::pair<SymbolSequence, SymbolSequence> symbolize_pair(const std::vector<Token>& tokens1,
                                                               const std::vector<Token>& tokens2,
                                                               const SequenceMetric& mu1,
                                                               double epsilon) {
    SymbolTable table;
    const auto assign = [&](const Token& token) -> element_t {
        const ElementSequence elems = to_elements(token);
        double best_score = -1.0;
        element_t best_symbol = -1;
        for (const auto& entry : table.entries) {
            const double score = mu1(elems, entry.codepoints);
            if (score > best_score) {  // ties keep the earliest registration
                best_score = score;
                best_symbol = entry.symbol;
            }
        }
        element_t symbol;
        if (best_score >= epsilon && best_symbol >= 0) {
            symbol = best_symbol;
        } else {
            symbol = table.distinct_symbols++;
        }
        table.entries.push_back({token, elems, symbol});
        return symbol;
    };

    SymbolSequence s1, s2;
    s1.symbols.reserve(tokens1.size());
    s2.symbols.reserve(tokens2.size());
    for (const auto& t : tokens1) s1.symbols.push_back(assign(t));
    for (const auto& t : tokens2) s2.symbols.push_back(assign(t));
    return {std::move(s1), std::move(s2)};
}

}  // namespace liuppa
