#pragma once

// Levenshtein distance and distance-bounded dictionary retrieval.
//
// The index buckets dictionary words by code-point length so a query only
// scans buckets with |len(w) - len(q)| <= max_dist, prefilters each word
// with a character-class presence mask, and confirms survivors with a
// banded dynamic program that aborts once the band minimum exceeds the
// bound. Results are exactly the brute-force filter set.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/lexicon.hpp"

namespace lexnorm {

/// Exact Levenshtein distance (insertions, deletions, substitutions),
/// computed over Unicode code points.
unsigned levenshtein(std::string_view a, std::string_view b);

/// Distance if it does not exceed max_dist, nullopt otherwise. O(len * max_dist).
std::optional<unsigned> levenshtein_bounded(std::u32string_view a,
                                            std::u32string_view b,
                                            unsigned max_dist);

struct DistanceCandidate {
    std::string word;
    unsigned distance;

    bool operator==(const DistanceCandidate&) const = default;
};

class DistanceIndex {
public:
    /// Throws std::invalid_argument on an empty lexicon.
    static DistanceIndex build(Lexicon lexicon);

    /// All dictionary words within max_dist of the case-folded query, each
    /// word once, sorted by (distance, word) for reproducible downstream
    /// tie-breaking.
    std::vector<DistanceCandidate> candidates_within(std::string_view query,
                                                     unsigned max_dist = 2) const;

    const Lexicon& source() const noexcept { return source_; }

    /// Bucket introspection, mainly for tests.
    std::vector<std::size_t> bucket_lengths() const;
    std::vector<std::string> words_of_length(std::size_t length) const;

private:
    // Parallel arrays per bucket; the mask vector is scanned densely and
    // the rest is touched only for words that survive the prefilter.
    struct Bucket {
        std::vector<std::uint32_t> masks;
        std::vector<std::u32string> points;
        std::vector<std::string> words;

        std::size_t size() const noexcept { return words.size(); }
    };

    std::vector<Bucket> buckets_; // indexed by code-point length
    Lexicon source_;
};

} // namespace lexnorm
