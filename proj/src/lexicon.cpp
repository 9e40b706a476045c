#include "lexnorm/lexicon.hpp"

#include <fstream>

#include "lexnorm/text.hpp"

namespace lexnorm {

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open word list: " + path.string());
    }
    Lexicon lex;
    lex.source_path_ = path;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view word = trim(line);
        if (word.empty()) continue;
        if (contains_whitespace(word)) {
            ++lex.skipped_lines_;
            continue;
        }
        lex.words_.insert(ascii_lower(word));
    }
    if (lex.words_.empty()) {
        throw LoadError("word list has no usable lines: " + path.string());
    }
    return lex;
}

Lexicon Lexicon::from_words(const std::vector<std::string>& words) {
    Lexicon lex;
    for (const auto& raw : words) {
        const std::string_view word = trim(raw);
        if (word.empty()) continue;
        if (contains_whitespace(word)) {
            ++lex.skipped_lines_;
            continue;
        }
        lex.words_.insert(ascii_lower(word));
    }
    if (lex.words_.empty()) {
        throw LoadError("word list has no usable entries");
    }
    return lex;
}

bool Lexicon::contains(std::string_view token) const {
    return words_.contains(ascii_lower(token));
}

} // namespace lexnorm
