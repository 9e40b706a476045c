#pragma once

// Refined Soundex: finer letter groups than classic Soundex and an
// untruncated, variable-length code. Two words are a phonetic match only
// when their full codes are equal.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/edit_distance.hpp"
#include "lexnorm/errors.hpp"

namespace lexnorm {

/// Encode a purely alphabetic word: uppercase initial letter, then the
/// group digit of every letter in order (b,p=1 f,v=2 c,k,s=3 g,j=4
/// q,x,z=5 d,t=6 l=7 m,n=8 r=9, vowels and h,w,y=0), with runs of equal
/// consecutive digits collapsed. Zeros are kept; the code is never
/// truncated. Throws EncodingError on non-alphabetic input.
std::string refined_soundex(std::string_view word);

/// Candidates whose full code equals the query's code, in input order.
/// Apostrophes are stripped before encoding; a candidate that still is
/// not encodable afterwards simply does not match.
std::vector<std::string> phonetic_filter(std::string_view query,
                                         std::span<const DistanceCandidate> candidates);

} // namespace lexnorm
