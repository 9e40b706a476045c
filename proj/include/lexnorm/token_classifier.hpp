#pragma once

// Splits a raw message into tokens and tags each one:
//   IV  -- exact (case-folded) match in the lexicon
//   NO  -- non-candidate: mentions, hashtags, URLs, digit-bearing or
//          punctuation-bearing tokens; excluded from normalisation
//   OOV -- alphabetic token absent from the lexicon; a candidate

#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/lexicon.hpp"

namespace lexnorm {

enum class Tag { IV, OOV, NO };

const char* to_string(Tag tag) noexcept;

struct Token {
    std::string text;   // never empty, never contains whitespace
    std::size_t index;  // zero-based position within its message
};

struct TaggedToken {
    Token token;
    Tag tag;
};

/// Maximal whitespace-free runs of the line, in order.
std::vector<Token> tokenize(std::string_view line);

/// First matching rule wins: non-candidate patterns, then exact lexicon
/// match, then OOV. A token with no letter at all (pure punctuation,
/// emoticons) is a non-candidate.
TaggedToken classify(const Token& token, const Lexicon& lex);

} // namespace lexnorm
