#pragma once

// Byte-level text helpers shared across the library. Case folding is
// ASCII-only: the corpora are English word lists and tweet text, and a
// full Unicode case table would buy nothing here. Non-ASCII bytes pass
// through unchanged.

#include <functional>
#include <string>
#include <string_view>

namespace lexnorm {

/// Hash functor enabling unordered-container lookups by string_view
/// without constructing a temporary std::string.
struct StringViewHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

constexpr bool is_ascii_letter(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr bool is_ascii_digit(char c) noexcept {
    return c >= '0' && c <= '9';
}

constexpr char ascii_lower(char c) noexcept {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : c;
}

std::string ascii_lower(std::string_view s);

/// Strip leading and trailing ASCII whitespace.
std::string_view trim(std::string_view s) noexcept;

bool contains_whitespace(std::string_view s) noexcept;

/// Decode UTF-8 into code points. Permissive: a byte that does not start
/// a valid sequence is emitted as its own code point, so the function is
/// total and never throws on messy corpus data.
std::u32string decode_utf8(std::string_view s);

/// Remove apostrophes; phonetic encoding and the frequency model operate
/// on purely alphabetic forms.
std::string strip_apostrophes(std::string_view s);

} // namespace lexnorm
