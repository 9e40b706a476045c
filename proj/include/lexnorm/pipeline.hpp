#pragma once

// The normalisation cascade. For each OOV token:
//   1. edit-distance candidates from the match dictionary (within 2)
//   2. phonetic filter: keep candidates code-equal to the query
//   3. frequency-based correction over the unigram model
//   4. decision rules: no phonetic match -> the corrector's result;
//      exactly one phonetic match equal to it -> done;
//      several phonetic matches -> 5-gram context selection
//   5. context selection scores {prev, candidate, next} windows
// IV and NO tokens pass through untouched.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/edit_distance.hpp"
#include "lexnorm/lexicon.hpp"
#include "lexnorm/ngram_context.hpp"
#include "lexnorm/norvig_corrector.hpp"
#include "lexnorm/token_classifier.hpp"

namespace lexnorm {

/// Everything loaded once up front; immutable afterwards and safe to
/// share across threads.
struct Resources {
    Lexicon iv_lexicon;        // exact-match vocabulary
    DistanceIndex match_index; // approximate-match dictionary
    FrequencyModel freq_model; // unigram counts for correction
    FiveGramIndex fivegram_index;

    static Resources load(const std::filesystem::path& iv_lexicon_path,
                          const std::filesystem::path& match_dict_path,
                          const std::filesystem::path& freq_corpus_path,
                          const std::filesystem::path& fivegram_path);
};

enum class Method {
    Identity,          // IV or NO token, passed through
    NorvigOnly,        // no phonetic match; corrector's result used
    PhoneticAgreement, // single phonetic match, equal to the corrector's result
    ContextSelection,  // several phonetic matches, winner by context
    Fallback,          // single phonetic match disagreeing with (or lacking) a corrector result
    Unchanged          // no phonetic match and no corrector result
};

const char* to_string(Method method) noexcept;

struct NormalisationResult {
    std::string original;
    Tag tag;
    std::string normalised;
    Method method;
};

/// Normalise one classified token. prev and next are the adjacent
/// original tokens with their tags (nullptr at message edges); they only
/// shape the context window, never the candidate set, so results are
/// independent of processing order.
NormalisationResult normalise_token(const TaggedToken& query,
                                    const TaggedToken* prev,
                                    const TaggedToken* next,
                                    const Resources& res,
                                    unsigned max_dist = 2);

/// Tokenize, classify and normalise a whole message, left to right.
std::vector<NormalisationResult> normalise_message(std::string_view line,
                                                   const Resources& res,
                                                   unsigned max_dist = 2);

} // namespace lexnorm
