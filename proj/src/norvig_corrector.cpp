#include "lexnorm/norvig_corrector.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexnorm/text.hpp"

namespace lexnorm {

FrequencyModel FrequencyModel::train(std::string_view corpus_text) {
    FrequencyModel model;
    std::size_t i = 0;
    while (i < corpus_text.size()) {
        while (i < corpus_text.size() && !is_ascii_letter(corpus_text[i])) ++i;
        const std::size_t start = i;
        while (i < corpus_text.size() && is_ascii_letter(corpus_text[i])) ++i;
        if (i > start) {
            ++model.counts_[ascii_lower(corpus_text.substr(start, i - start))];
            ++model.total_;
        }
    }
    if (model.counts_.empty()) {
        throw TrainingError("frequency corpus contains no alphabetic words");
    }
    return model;
}

FrequencyModel FrequencyModel::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open frequency corpus: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return train(text);
    } catch (const TrainingError&) {
        throw TrainingError("frequency corpus contains no alphabetic words: " + path.string());
    }
}

std::uint64_t FrequencyModel::count(std::string_view word) const {
    const auto it = counts_.find(word);
    return it == counts_.end() ? 0 : it->second;
}

bool FrequencyModel::knows(std::string_view word) const {
    return counts_.find(word) != counts_.end();
}

namespace {

// Enumerates every single-edit variant into a reused scratch buffer, in
// the fixed order deletes, transposes, replaces, inserts. The distance-2
// tier visits ~a^2 n^2 variants, so the enumeration avoids per-variant
// allocations.
template <typename Fn>
void for_each_edit1(std::string_view word, Fn&& fn) {
    const std::size_t n = word.size();
    std::string scratch;
    scratch.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) { // deletes
        scratch.assign(word);
        scratch.erase(i, 1);
        fn(std::string_view(scratch));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) { // adjacent transposes
        scratch.assign(word);
        std::swap(scratch[i], scratch[i + 1]);
        fn(std::string_view(scratch));
    }
    scratch.assign(word);
    for (std::size_t i = 0; i < n; ++i) { // replaces
        const char original = scratch[i];
        for (char c : FrequencyModel::alphabet) {
            scratch[i] = c;
            fn(std::string_view(scratch));
        }
        scratch[i] = original;
    }
    for (std::size_t i = 0; i <= n; ++i) { // inserts
        scratch.assign(word);
        scratch.insert(i, 1, 'a');
        for (char c : FrequencyModel::alphabet) {
            scratch[i] = c;
            fn(std::string_view(scratch));
        }
    }
}

// Highest count wins, ties lexicographically.
struct BestKnown {
    const FrequencyModel& model;
    std::string word;
    std::uint64_t count = 0;

    void consider(std::string_view candidate) {
        const std::uint64_t k = model.count(candidate);
        if (k == 0) return;
        if (k > count || (k == count && candidate < word)) {
            word = candidate;
            count = k;
        }
    }
    bool found() const { return count > 0; }
};

} // namespace

std::vector<std::string> edits1(std::string_view word) {
    const std::size_t n = word.size();
    const std::size_t a = FrequencyModel::alphabet.size();
    std::vector<std::string> out;
    out.reserve(2 * n + 2 * a * n + a);
    for_each_edit1(word, [&out](std::string_view variant) { out.emplace_back(variant); });
    return out;
}

std::optional<std::string> correct(std::string_view word, const FrequencyModel& model) {
    if (word.empty()) return std::nullopt;
    if (model.knows(word)) return std::string(word); // known words stand

    BestKnown tier2{model};
    for_each_edit1(word, [&tier2](std::string_view candidate) { tier2.consider(candidate); });
    if (tier2.found()) return tier2.word;

    // The distance-2 tier is generated lazily, and only from deduplicated
    // distance-1 variants.
    std::vector<std::string> unique = edits1(word);
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    BestKnown tier3{model};
    for (const std::string& mid : unique) {
        for_each_edit1(mid, [&tier3](std::string_view candidate) { tier3.consider(candidate); });
    }
    if (tier3.found()) return tier3.word;
    return std::nullopt;
}

} // namespace lexnorm
