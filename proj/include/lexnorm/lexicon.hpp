#pragma once

// Word-list corpora: plain "one word per line" files. The same loader
// backs both the in-vocabulary lexicon and the match dictionary used for
// approximate search; they differ only in role.

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexnorm/errors.hpp"

namespace lexnorm {

class Lexicon {
public:
    Lexicon() = default;

    /// Load a UTF-8 word list, one word per line (LF or CRLF). Lines are
    /// trimmed and lowercased; duplicates collapse. Lines with interior
    /// whitespace are skipped and counted. Throws LoadError if the file
    /// cannot be opened or yields no usable words.
    static Lexicon load(const std::filesystem::path& path);

    /// Build directly from words, applying the same trimming, folding and
    /// dedup rules as load(). Throws LoadError if nothing usable remains.
    static Lexicon from_words(const std::vector<std::string>& words);

    /// Case-insensitive membership.
    bool contains(std::string_view token) const;

    std::size_t size() const noexcept { return words_.size(); }
    const std::unordered_set<std::string>& words() const noexcept { return words_; }
    const std::filesystem::path& source_path() const noexcept { return source_path_; }

    /// Lines discarded because they held interior whitespace.
    std::size_t skipped_line_count() const noexcept { return skipped_lines_; }

private:
    std::unordered_set<std::string> words_;
    std::filesystem::path source_path_;
    std::size_t skipped_lines_ = 0;
};

} // namespace lexnorm
