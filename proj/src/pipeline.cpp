#include "lexnorm/pipeline.hpp"

#include <unordered_map>

#include "lexnorm/refined_soundex.hpp"
#include "lexnorm/text.hpp"

namespace lexnorm {

Resources Resources::load(const std::filesystem::path& iv_lexicon_path,
                          const std::filesystem::path& match_dict_path,
                          const std::filesystem::path& freq_corpus_path,
                          const std::filesystem::path& fivegram_path) {
    return Resources{
        Lexicon::load(iv_lexicon_path),
        DistanceIndex::build(Lexicon::load(match_dict_path)),
        FrequencyModel::load(freq_corpus_path),
        FiveGramIndex::load(fivegram_path),
    };
}

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::Identity: return "Identity";
        case Method::NorvigOnly: return "NorvigOnly";
        case Method::PhoneticAgreement: return "PhoneticAgreement";
        case Method::ContextSelection: return "ContextSelection";
        case Method::Fallback: return "Fallback";
        case Method::Unchanged: return "Unchanged";
    }
    return "?";
}

NormalisationResult normalise_token(const TaggedToken& query,
                                    const TaggedToken* prev,
                                    const TaggedToken* next,
                                    const Resources& res,
                                    unsigned max_dist) {
    const std::string& original = query.token.text;
    if (query.tag != Tag::OOV) {
        return NormalisationResult{original, query.tag, original, Method::Identity};
    }

    const std::string folded = ascii_lower(original);
    const auto candidates = res.match_index.candidates_within(folded, max_dist);
    const auto phonetic = phonetic_filter(folded, candidates);
    // The corrector's domain is purely alphabetic; drop apostrophes first.
    const auto suggestion = correct(strip_apostrophes(folded), res.freq_model);

    if (phonetic.empty()) {
        if (suggestion) {
            return NormalisationResult{original, Tag::OOV, *suggestion, Method::NorvigOnly};
        }
        return NormalisationResult{original, Tag::OOV, original, Method::Unchanged};
    }
    if (phonetic.size() == 1 && suggestion && phonetic.front() == *suggestion) {
        return NormalisationResult{original, Tag::OOV, *suggestion, Method::PhoneticAgreement};
    }

    std::unordered_map<std::string, unsigned> distance_of;
    distance_of.reserve(candidates.size());
    for (const DistanceCandidate& c : candidates) distance_of.emplace(c.word, c.distance);

    std::vector<ScoredCandidate> pool;
    pool.reserve(phonetic.size() + 1);
    for (const std::string& word : phonetic) {
        pool.push_back(ScoredCandidate{word, distance_of.at(word), res.freq_model.count(word)});
    }

    Method method = Method::ContextSelection;
    if (phonetic.size() == 1) {
        // A lone phonetic match that the corrector does not confirm:
        // let context arbitrate between the two signals. The corrector's
        // word joins the pool only if the match dictionary knows it, so
        // every emitted normalisation stays a dictionary word.
        method = Method::Fallback;
        if (suggestion && *suggestion != phonetic.front() &&
            res.match_index.source().contains(*suggestion)) {
            pool.push_back(ScoredCandidate{*suggestion, levenshtein(folded, *suggestion),
                                           res.freq_model.count(*suggestion)});
        }
    }

    std::string winner = select_by_context(res.fivegram_index, pool, prev, next);
    return NormalisationResult{original, Tag::OOV, std::move(winner), method};
}

std::vector<NormalisationResult> normalise_message(std::string_view line,
                                                   const Resources& res,
                                                   unsigned max_dist) {
    const std::vector<Token> tokens = tokenize(line);
    std::vector<TaggedToken> tagged;
    tagged.reserve(tokens.size());
    for (const Token& token : tokens) tagged.push_back(classify(token, res.iv_lexicon));

    std::vector<NormalisationResult> results;
    results.reserve(tagged.size());
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        const TaggedToken* prev = i > 0 ? &tagged[i - 1] : nullptr;
        const TaggedToken* next = i + 1 < tagged.size() ? &tagged[i + 1] : nullptr;
        results.push_back(normalise_token(tagged[i], prev, next, res, max_dist));
    }
    return results;
}

} // namespace lexnorm
