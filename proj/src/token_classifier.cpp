#include "lexnorm/token_classifier.hpp"

#include <cctype>

#include "lexnorm/text.hpp"

namespace lexnorm {

const char* to_string(Tag tag) noexcept {
    switch (tag) {
        case Tag::IV: return "IV";
        case Tag::OOV: return "OOV";
        case Tag::NO: return "NO";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    std::size_t index = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) {
            tokens.push_back(Token{std::string(line.substr(start, i - start)), index++});
        }
    }
    return tokens;
}

namespace {

bool has_url_prefix(std::string_view text) {
    const std::string head = ascii_lower(text.substr(0, 8));
    return head.starts_with("http://") || head.starts_with("https://") ||
           head.starts_with("www.");
}

} // namespace

TaggedToken classify(const Token& token, const Lexicon& lex) {
    const std::string& text = token.text;
    bool has_letter = false;
    bool has_digit = false;
    bool has_other = false;
    for (char c : text) {
        if (is_ascii_letter(c)) has_letter = true;
        else if (is_ascii_digit(c)) has_digit = true;
        else if (c != '\'') has_other = true; // includes non-ASCII bytes
    }
    const bool non_candidate = text.starts_with('@') || text.starts_with('#') ||
                               has_url_prefix(text) || has_digit || has_other ||
                               !has_letter;
    if (non_candidate) {
        return TaggedToken{token, Tag::NO};
    }
    if (lex.contains(text)) {
        return TaggedToken{token, Tag::IV};
    }
    return TaggedToken{token, Tag::OOV};
}

} // namespace lexnorm
