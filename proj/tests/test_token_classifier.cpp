#include <doctest.h>

#include "lexnorm/text.hpp"
#include "lexnorm/token_classifier.hpp"

using namespace lexnorm;

namespace {

Tag tag_of(const std::string& text, const Lexicon& lex) {
    return classify(Token{text, 0}, lex).tag;
}

} // namespace

TEST_SUITE("token_classifier") {

TEST_CASE("tokenize splits on whitespace runs") {
    const auto tokens = tokenize("c u @john #party");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].text == "c");
    CHECK(tokens[1].text == "u");
    CHECK(tokens[2].text == "@john");
    CHECK(tokens[3].text == "#party");
    for (std::size_t i = 0; i < tokens.size(); ++i) CHECK(tokens[i].index == i);
}

TEST_CASE("tokenize of an empty line is empty") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("   \t ").empty());
}

TEST_CASE("consecutive whitespace collapses") {
    const auto tokens = tokenize("a  b");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].text == "a");
    CHECK(tokens[1].text == "b");
}

TEST_CASE("classification rule order") {
    const Lexicon lex = Lexicon::from_words({"hello", "don't", "you"});

    SUBCASE("mentions and hashtags are non-candidates") {
        CHECK(tag_of("@bae", lex) == Tag::NO);
        CHECK(tag_of("#party", lex) == Tag::NO);
    }
    SUBCASE("urls are non-candidates") {
        CHECK(tag_of("http://t.co/x", lex) == Tag::NO);
        CHECK(tag_of("https://a.b", lex) == Tag::NO);
        CHECK(tag_of("www.example.com", lex) == Tag::NO);
    }
    SUBCASE("digit-bearing tokens are non-candidates") {
        CHECK(tag_of("gr8", lex) == Tag::NO);
        CHECK(tag_of("2nite", lex) == Tag::NO);
    }
    SUBCASE("punctuation-bearing tokens are non-candidates") {
        CHECK(tag_of("hello!", lex) == Tag::NO);
        CHECK(tag_of(":)", lex) == Tag::NO);
        CHECK(tag_of("<3", lex) == Tag::NO);
        CHECK(tag_of("''", lex) == Tag::NO); // only punctuation, no letters
    }
    SUBCASE("exact lexicon matches are in vocabulary") {
        CHECK(tag_of("hello", lex) == Tag::IV);
        CHECK(tag_of("HELLO", lex) == Tag::IV);
        CHECK(tag_of("don't", lex) == Tag::IV);
    }
    SUBCASE("alphabetic non-matches are candidates") {
        CHECK(tag_of("helo", lex) == Tag::OOV);
        CHECK(tag_of("dont", lex) == Tag::OOV);
    }
}

TEST_CASE("oov tokens never carry a non-letter other than apostrophe") {
    const Lexicon lex = Lexicon::from_words({"a"});
    const char* samples[] = {"b",    "zzz",  "it's", "x9",  "-",   "a.b",
                             "@x",   "#y",   "w'",   "'w",  "''",  "caf\xc3\xa9"};
    for (const char* s : samples) {
        const Tag tag = tag_of(s, lex);
        if (tag == Tag::OOV) {
            for (char c : std::string(s)) {
                CHECK((is_ascii_letter(c) || c == '\''));
            }
        }
    }
}

TEST_CASE("classification is deterministic and assigns exactly one tag") {
    const Lexicon lex = Lexicon::from_words({"you", "see"});
    const auto tokens = tokenize("see you thre @x 2nite :)");
    for (const Token& t : tokens) {
        const Tag first = classify(t, lex).tag;
        const Tag second = classify(t, lex).tag;
        CHECK(first == second);
    }
}

TEST_CASE("classified token stream preserves the token order") {
    const Lexicon lex = Lexicon::from_words({"see", "you"});
    const auto tokens = tokenize("see  you   thre");
    std::string joined;
    for (const Token& t : tokens) {
        const TaggedToken tagged = classify(t, lex);
        if (!joined.empty()) joined += ' ';
        joined += tagged.token.text;
    }
    CHECK(joined == "see you thre");
}

} // TEST_SUITE
