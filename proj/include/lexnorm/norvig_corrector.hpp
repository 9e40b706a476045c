#pragma once

// Frequency-based spelling correction in the style of Norvig's corrector:
// a unigram model trained over a large plain-text corpus, candidate
// generation by single edits, and a strict known-word / distance-1 /
// distance-2 tier order.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexnorm/errors.hpp"
#include "lexnorm/text.hpp"

namespace lexnorm {

class FrequencyModel {
public:
    using CountMap =
        std::unordered_map<std::string, std::uint64_t, StringViewHash, std::equal_to<>>;

    static constexpr std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz";

    /// Count maximal alphabetic runs, lowercased. Throws TrainingError when
    /// the text contains no such run.
    static FrequencyModel train(std::string_view corpus_text);

    /// Read a file and train on its contents.
    static FrequencyModel load(const std::filesystem::path& path);

    /// Occurrence count, 0 for unknown words.
    std::uint64_t count(std::string_view word) const;
    bool knows(std::string_view word) const;

    std::uint64_t total() const noexcept { return total_; }
    std::size_t vocabulary_size() const noexcept { return counts_.size(); }
    const CountMap& counts() const noexcept { return counts_; }

private:
    CountMap counts_;
    std::uint64_t total_ = 0;
};

/// Every string one edit away from word, in generation order and before
/// deduplication: n deletes, n-1 adjacent transposes, 26n replaces,
/// 26(n+1) inserts. The pre-dedup size is 2n + 2an + a - 1 for a = 26.
std::vector<std::string> edits1(std::string_view word);

/// Best correction, or nullopt when no model word is within two edits.
/// Tier order is strict: the word itself if known, else known words at
/// one edit, else known words at two edits. Within a tier the highest
/// count wins, ties broken lexicographically.
std::optional<std::string> correct(std::string_view word, const FrequencyModel& model);

} // namespace lexnorm
