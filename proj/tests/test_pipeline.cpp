#include <doctest.h>

#include <sstream>

#include "lexnorm/pipeline.hpp"
#include "support/fixtures.hpp"

using namespace lexnorm;

namespace {

FiveGramIndex index_from(const std::string& text) {
    std::istringstream in(text);
    return FiveGramIndex::parse(in);
}

const std::string kContextCorpus =
    "4 i will see you there\n"
    "6 see you there tonight ok\n"
    "1 you three tonight again yes\n";

// One fixture per decision rule; each resource set is tiny and explicit.
Resources rule_a_resources() {
    return Resources{
        Lexicon::from_words({"you", "see", "the"}),
        DistanceIndex::build(Lexicon::from_words({"the", "there", "her", "other"})),
        FrequencyModel::train("the the the there there"),
        index_from(kContextCorpus),
    };
}

Resources rule_b_resources() {
    return Resources{
        Lexicon::from_words({"you", "see"}),
        DistanceIndex::build(Lexicon::from_words({"hello", "help"})),
        FrequencyModel::train("hello hello hello hello hello help help"),
        index_from(kContextCorpus),
    };
}

Resources rule_c_resources() {
    return Resources{
        Lexicon::from_words({"you", "see", "tonight"}),
        DistanceIndex::build(Lexicon::from_words({"there", "three", "other"})),
        FrequencyModel::train(
            [] {
                std::string text;
                for (int i = 0; i < 120; ++i) text += "there ";
                for (int i = 0; i < 80; ++i) text += "three ";
                return text;
            }()),
        index_from(kContextCorpus),
    };
}

TaggedToken make_tagged(const std::string& text, Tag tag, std::size_t index = 0) {
    return TaggedToken{Token{text, index}, tag};
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("rule a: no phonetic match, the corrector decides") {
    const Resources res = rule_a_resources();
    const auto result = normalise_token(make_tagged("ther", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.original == "ther");
    CHECK(result.normalised == "the");
    CHECK(result.method == Method::NorvigOnly);
}

TEST_CASE("rule a without a corrector result leaves the token unchanged") {
    const Resources res = Resources{
        Lexicon::from_words({"you"}),
        DistanceIndex::build(Lexicon::from_words({"ther"})), // phonetic self-match excluded below
        FrequencyModel::train("zzz zzz"),
        index_from(kContextCorpus),
    };
    // "xq" has no candidate within 2 in this dictionary and no model word
    // within two edits, so nothing can be proposed.
    const auto result = normalise_token(make_tagged("xqjv", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.normalised == "xqjv");
    CHECK(result.method == Method::Unchanged);
}

TEST_CASE("rule b: single phonetic match agreeing with the corrector") {
    const Resources res = rule_b_resources();
    const auto result = normalise_token(make_tagged("helo", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.normalised == "hello");
    CHECK(result.method == Method::PhoneticAgreement);
}

TEST_CASE("rule c: several phonetic matches resolved by context") {
    const Resources res = rule_c_resources();
    const TaggedToken prev = make_tagged("you", Tag::IV);
    const TaggedToken next = make_tagged("tonight", Tag::IV, 2);
    const auto result = normalise_token(make_tagged("thre", Tag::OOV, 1), &prev, &next, res);
    CHECK(result.normalised == "there");
    CHECK(result.method == Method::ContextSelection);
}

TEST_CASE("residual case: lone phonetic match disagreeing with the corrector") {
    // dictionary gives exactly one phonetic match ("hello"); the model
    // prefers "help", which is also a dictionary word, so context
    // arbitrates between the two.
    const Resources res = Resources{
        Lexicon::from_words({"you"}),
        DistanceIndex::build(Lexicon::from_words({"hello", "help"})),
        FrequencyModel::train("help help help help"),
        index_from("9 i need help please now\n"),
    };
    const TaggedToken prev = make_tagged("need", Tag::OOV); // not IV: no context signal
    const auto result = normalise_token(make_tagged("helo", Tag::OOV), &prev, nullptr, res);
    CHECK(result.method == Method::Fallback);
    // all context scores are zero; smaller edit distance wins: "hello" is
    // one insert away, "help" one substitution; tie at distance 1, then
    // larger unigram count pushes "help"
    CHECK(result.normalised == "help");
}

TEST_CASE("residual case without a corrector result selects the lone match") {
    const Resources res = Resources{
        Lexicon::from_words({"you"}),
        DistanceIndex::build(Lexicon::from_words({"hello"})),
        FrequencyModel::train("unrelatedterm unrelatedterm"),
        index_from(kContextCorpus),
    };
    const auto result = normalise_token(make_tagged("helo", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.normalised == "hello");
    CHECK(result.method == Method::Fallback);
}

TEST_CASE("corrector words outside the match dictionary never surface from the fallback") {
    const Resources res = Resources{
        Lexicon::from_words({"you"}),
        DistanceIndex::build(Lexicon::from_words({"hello"})),
        FrequencyModel::train("helot helot helot helot"), // high-count word, not in dictionary
        index_from(kContextCorpus),
    };
    const auto result = normalise_token(make_tagged("helo", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.method == Method::Fallback);
    CHECK(result.normalised == "hello");
    CHECK(res.match_index.source().contains(result.normalised));
}

TEST_CASE("iv and no tokens pass through untouched") {
    const Resources res = rule_a_resources();
    for (const auto& [text, tag] : std::vector<std::pair<std::string, Tag>>{
             {"you", Tag::IV}, {"@bob", Tag::NO}, {"#fun", Tag::NO}}) {
        const auto result = normalise_token(make_tagged(text, tag), nullptr, nullptr, res);
        CHECK(result.normalised == text);
        CHECK(result.method == Method::Identity);
        CHECK(result.tag == tag);
    }
}

TEST_CASE("normalise_message composes the cascade") {
    const Resources res = rule_c_resources();
    const auto results = normalise_message("see you thre tonight", res);
    REQUIRE(results.size() == 4);
    CHECK(results[0].tag == Tag::IV);
    CHECK(results[1].tag == Tag::IV);
    CHECK(results[2].tag == Tag::OOV);
    CHECK(results[3].tag == Tag::IV);
    CHECK(results[2].normalised == "there");
    CHECK(results[2].method == Method::ContextSelection);
    CHECK(results[0].normalised == "see");
    CHECK(results[3].normalised == "tonight");
}

TEST_CASE("non-candidates stay as written") {
    const Resources res = rule_a_resources();
    const auto results = normalise_message("@bob #fun", res);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        CHECK(r.tag == Tag::NO);
        CHECK(r.normalised == r.original);
        CHECK(r.method == Method::Identity);
    }
}

TEST_CASE("an empty message yields no results") {
    const Resources res = rule_a_resources();
    CHECK(normalise_message("", res).empty());
}

TEST_CASE("uppercase queries fold before the cascade and emit lowercase") {
    const Resources res = rule_b_resources();
    const auto result = normalise_token(make_tagged("HELO", Tag::OOV), nullptr, nullptr, res);
    CHECK(result.original == "HELO");
    CHECK(result.normalised == "hello");
}

TEST_CASE("normalisation depends only on the token and its neighbours") {
    const Resources res = rule_c_resources();
    const TaggedToken prev = make_tagged("you", Tag::IV);
    const TaggedToken next = make_tagged("tonight", Tag::IV);
    const auto alone = normalise_token(make_tagged("thre", Tag::OOV), &prev, &next, res);
    const auto in_message = normalise_message("see you thre tonight ok", res);
    REQUIRE(in_message.size() == 5);
    CHECK(in_message[2].normalised == alone.normalised);
    CHECK(in_message[2].method == alone.method);
}

TEST_CASE("the pipeline is deterministic end to end") {
    const Resources res = rule_c_resources();
    const auto first = normalise_message("see you thre tonight", res);
    const auto second = normalise_message("see you thre tonight", res);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].normalised == second[i].normalised);
        CHECK(first[i].method == second[i].method);
    }
}

TEST_CASE("changed normalisations come from the match dictionary") {
    const Resources res = rule_c_resources();
    for (const auto& line : {"see you thre tonight", "thre alone", "you thre"}) {
        for (const auto& r : normalise_message(line, res)) {
            if (r.method == Method::PhoneticAgreement || r.method == Method::ContextSelection ||
                r.method == Method::Fallback) {
                CHECK(res.match_index.source().contains(r.normalised));
            }
        }
    }
}

} // TEST_SUITE
