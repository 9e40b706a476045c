#include "lexnorm/refined_soundex.hpp"

#include "lexnorm/text.hpp"

namespace lexnorm {

namespace {

// Group digits, indexed by letter: b,p=1 f,v=2 c,k,s=3 g,j=4 q,x,z=5
// d,t=6 l=7 m,n=8 r=9, vowels and h,w,y=0.
constexpr char kGroupDigit[26] = {
    '0', // a
    '1', // b
    '3', // c
    '6', // d
    '0', // e
    '2', // f
    '4', // g
    '0', // h
    '0', // i
    '4', // j
    '3', // k
    '7', // l
    '8', // m
    '8', // n
    '0', // o
    '1', // p
    '5', // q
    '9', // r
    '3', // s
    '6', // t
    '0', // u
    '2', // v
    '0', // w
    '5', // x
    '0', // y
    '5', // z
};

} // namespace

std::string refined_soundex(std::string_view word) {
    if (word.empty()) {
        throw EncodingError("cannot encode an empty word");
    }
    std::string code;
    code.reserve(word.size() + 1);
    const char first = ascii_lower(word.front());
    if (!is_ascii_letter(first)) {
        throw EncodingError("cannot encode non-alphabetic input: " + std::string(word));
    }
    code.push_back(static_cast<char>(first - ('a' - 'A')));
    char last_digit = '\0';
    for (char raw : word) {
        const char c = ascii_lower(raw);
        if (!is_ascii_letter(c)) {
            throw EncodingError("cannot encode non-alphabetic input: " + std::string(word));
        }
        const char digit = kGroupDigit[c - 'a'];
        if (digit != last_digit) {
            code.push_back(digit);
            last_digit = digit;
        }
    }
    return code;
}

std::vector<std::string> phonetic_filter(std::string_view query,
                                         std::span<const DistanceCandidate> candidates) {
    const std::string query_code = refined_soundex(strip_apostrophes(query));
    std::vector<std::string> matches;
    for (const DistanceCandidate& candidate : candidates) {
        const std::string stripped = strip_apostrophes(candidate.word);
        if (stripped.empty()) continue;
        try {
            if (refined_soundex(stripped) == query_code) {
                matches.push_back(candidate.word);
            }
        } catch (const EncodingError&) {
            // dictionary entries with digits or non-ASCII letters cannot
            // match phonetically
        }
    }
    return matches;
}

} // namespace lexnorm
