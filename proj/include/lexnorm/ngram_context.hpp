#pragma once

// 5-gram context matching: candidate normalisations are scored by how
// often the window {previous word, candidate, next word} (or its
// two-token reductions) occurs contiguously inside the 5-gram corpus,
// frequency-weighted and counted at every position.
//
// Tokens are interned to integer ids; window sums live in sorted flat
// tables, which keeps a million-entry corpus cheap to query.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexnorm/errors.hpp"
#include "lexnorm/text.hpp"
#include "lexnorm/token_classifier.hpp"

namespace lexnorm {

struct FiveGram {
    std::array<std::string, 5> tokens;
    std::uint64_t freq = 1;
};

/// The neighbours used to assemble a context window. Only in-vocabulary
/// neighbours participate; with neither present, scoring is skipped and
/// selection falls back to tie data.
struct ContextPattern {
    std::optional<std::string> prev;
    std::optional<std::string> next;
};

class FiveGramIndex {
public:
    /// Accepted line formats: "freq w1 w2 w3 w4 w5" (six fields, first a
    /// positive integer) or "w1 w2 w3 w4 w5" (five fields, frequency 1).
    /// Tokens are lowercased. Malformed lines are skipped and counted.
    /// Throws LoadError on an unreadable path or zero usable lines.
    static FiveGramIndex load(const std::filesystem::path& path);
    static FiveGramIndex parse(std::istream& in, std::string_view origin = {});

    /// Frequency-weighted count of contiguous occurrences of the window
    /// (prev, candidate, next), (prev, candidate) or (candidate, next),
    /// over all entries and all positions within each entry.
    std::uint64_t context_score(std::string_view candidate, const ContextPattern& pattern) const;

    std::size_t entry_count() const noexcept { return freqs_.size(); }
    FiveGram entry(std::size_t i) const;
    std::size_t malformed_line_count() const noexcept { return malformed_lines_; }

private:
    std::uint32_t intern(std::string token);
    std::optional<std::uint32_t> id_of(std::string_view token) const;
    void build_window_sums();

    std::vector<std::string> vocab_;
    std::unordered_map<std::string, std::uint32_t, StringViewHash, std::equal_to<>> ids_;
    std::vector<std::uint32_t> tokens_; // 5 ids per entry, flat
    std::vector<std::uint64_t> freqs_;
    std::size_t malformed_lines_ = 0;

    struct PairSum {
        std::uint64_t key; // (first << 32) | second
        std::uint64_t sum;
    };
    struct TripleSum {
        std::array<std::uint32_t, 3> key;
        std::uint64_t sum;
    };
    std::vector<PairSum> pair_sums_;
    std::vector<TripleSum> triple_sums_;
};

/// Candidate plus the tie-break data computed upstream.
struct ScoredCandidate {
    std::string word;
    unsigned edit_distance = 0;
    std::uint64_t unigram_count = 0;
};

/// Window per the neighbour tags: both IV gives {prev, query, next}, only
/// prev IV gives {prev, query}, only next IV gives {query, next}.
ContextPattern make_pattern(const TaggedToken* prev, const TaggedToken* next);

/// The candidate with the highest context score. Ties, the all-zero case
/// and the no-neighbour fallback resolve by smallest edit distance, then
/// largest unigram count, then lexicographic order; the result never
/// depends on candidate order. Throws std::invalid_argument when
/// candidates is empty.
std::string select_by_context(const FiveGramIndex& index,
                              std::span<const ScoredCandidate> candidates,
                              const TaggedToken* prev,
                              const TaggedToken* next);

} // namespace lexnorm
