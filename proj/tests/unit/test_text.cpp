#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "kilogram/text/normalize.hpp"
#include "kilogram/text/porter.hpp"

using namespace kilogram::text;

namespace {

const std::vector<std::pair<std::string, std::string>> kPorterTable = {
#include "data/porter_table.inc"
};

std::vector<std::string> toks(std::string_view s) { return normalize(s).tokens(); }

}  // namespace

TEST_CASE("porter stemmer matches the reference table") {
    REQUIRE(kPorterTable.size() > 1000);
    int mismatches = 0;
    for (const auto& [word, stem] : kPorterTable) {
        if (porter_stem(word) != stem) {
            if (++mismatches <= 20) MESSAGE(word << " -> " << porter_stem(word) << ", expected " << stem);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("porter stemmer classic cases") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("generalizations") == "gener");
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("") == "");
}

TEST_CASE("normalize pipeline") {
    CHECK(toks("Dogs running!") == std::vector<std::string>{"dog", "run"});
    CHECK(toks("The dog") == std::vector<std::string>{"dog"});
    CHECK(toks("a man with a hat") == std::vector<std::string>{"man", "hat"});
    CHECK(toks("").empty());
    CHECK(toks("   ...  ").empty());
    CHECK(toks("the of and").empty());
    CHECK(toks("Rabbit-Ears") == std::vector<std::string>{"rabbit", "ear"});
}

TEST_CASE("normalize is idempotent") {
    for (const char* s : {"generalizations running dogs", "the happiest oscillators", "Conditional relational skiing"}) {
        const TokenList once = normalize(s);
        CHECK(normalize(once.joined()) == once);
    }
}

TEST_CASE("unknown part label") {
    CHECK(normalize_part_label("UNKNOWN").tokens() == std::vector<std::string>{"unknown"});
    CHECK(normalize_part_label("left leg").tokens() == std::vector<std::string>{"left", "leg"});
}

TEST_CASE("token list invariants") {
    CHECK_NOTHROW(TokenList::from_tokens({"dog"}));
    CHECK_THROWS(TokenList::from_tokens({""}));
    CHECK_THROWS(TokenList::from_tokens({"the"}));
    CHECK_THROWS(TokenList::from_tokens({"two words"}));
    CHECK_THROWS(TokenList::from_tokens({"Dog"}));
}

TEST_CASE("stopword resource") {
    CHECK(stopwords().size() == 127);
    CHECK(is_stopword("the"));
    CHECK_FALSE(is_stopword("dog"));
    CHECK(stopword_hash().size() == 16);
    CHECK(stopword_hash() == stopword_hash());
}

TEST_CASE("tokenize and lengths") {
    CHECK(tokenize("Hello, World") == std::vector<std::string>{"hello", "world"});
    CHECK(whitespace_length("  a dog  running ") == 3);
    CHECK(whitespace_length("") == 0);
    CHECK(vocabulary_tokens("The Dogs") == std::vector<std::string>{"the", "dog"});
}
