#include <catch2/catch_amalgamated.hpp>

#include "liuppa/symbolize.hpp"

using namespace liuppa;

TEST_CASE("tokenize splits on delimiters and case-folds") {
    CHECK(tokenize("chemin de fer touristique") ==
          std::vector<Token>{"chemin", "de", "fer", "touristique"});
    CHECK(tokenize("Vaux-le-Vicomte") == std::vector<Token>{"vaux", "le", "vicomte"});
    CHECK(tokenize("   ") == std::vector<Token>{});
    CHECK(tokenize("") == std::vector<Token>{});
    CHECK(tokenize("l'hôtel/du Parc") == std::vector<Token>{"l", "hôtel", "du", "parc"});
    CHECK(tokenize("voie ferrée") == std::vector<Token>{"voie", "ferrée"});
    CHECK(tokenize("A’B") == std::vector<Token>{"a", "b"});  // curly apostrophe
    CHECK(tokenize("Voie Ferrée") == std::vector<Token>{"voie", "ferrée"});  // É folds, é kept
    CHECK(tokenize("a  -  b") == std::vector<Token>{"a", "b"});
}

TEST_CASE("symbolize_pair reproduces the worked example 1") {
    const auto t1 = tokenize("centre de formation professionnelle des adultes");
    const auto t2 = tokenize("centre de formation des adultes");
    const auto [s1, s2] = symbolize_pair(t1, t2, metric_by_code(1), 0.84);
    CHECK(s1.symbols == ElementSequence{0, 1, 2, 3, 1, 4});
    CHECK(s2.symbols == ElementSequence{0, 1, 2, 1, 4});
}

TEST_CASE("symbolize_pair reproduces the worked example 2") {
    const auto t1 = tokenize("bureau de poste");
    const auto t2 = tokenize("poste de radio");
    const auto [s1, s2] = symbolize_pair(t1, t2, metric_by_code(1), 0.84);
    CHECK(s1.symbols == ElementSequence{0, 1, 2});
    CHECK(s2.symbols == ElementSequence{2, 1, 3});
}

TEST_CASE("identical token lists yield identical symbol sequences") {
    const auto tokens = tokenize("piste de ski");
    const auto [s1, s2] = symbolize_pair(tokens, tokens, metric_by_code(1), 0.84);
    CHECK(s1 == s2);
    CHECK(s1.symbols == ElementSequence{0, 1, 2});
}

TEST_CASE("first token always receives symbol 0") {
    const auto [s1, s2] =
        symbolize_pair(tokenize("zèbre rouge"), tokenize("bleu"), metric_by_code(1), 0.84);
    REQUIRE_FALSE(s1.symbols.empty());
    CHECK(s1.symbols[0] == 0);
}

TEST_CASE("empty token lists yield empty symbol sequences") {
    const auto [s1, s2] = symbolize_pair({}, tokenize("a b"), metric_by_code(1), 0.84);
    CHECK(s1.symbols.empty());
    CHECK(s2.symbols == ElementSequence{0, 1});
}

TEST_CASE("exact metric with epsilon 1 reduces to token identity") {
    const auto t1 = tokenize("de des de");
    const auto t2 = tokenize("des de");
    const auto [s1, s2] = symbolize_pair(t1, t2, metric_by_code(2), 1.0);
    CHECK(s1.symbols == ElementSequence{0, 1, 0});
    CHECK(s2.symbols == ElementSequence{1, 0});
}
