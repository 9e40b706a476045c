#include "lexnorm/ngram_context.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "lexnorm/text.hpp"

namespace lexnorm {

namespace {

std::optional<std::uint64_t> parse_count(std::string_view field) {
    std::uint64_t value = 0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

constexpr std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::uint32_t FiveGramIndex::intern(std::string token) {
    const auto it = ids_.find(std::string_view(token));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(vocab_.size());
    ids_.emplace(token, id);
    vocab_.push_back(std::move(token));
    return id;
}

std::optional<std::uint32_t> FiveGramIndex::id_of(std::string_view token) const {
    const auto it = ids_.find(token);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

FiveGramIndex FiveGramIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open 5-gram corpus: " + path.string());
    }
    return parse(in, path.string());
}

FiveGramIndex FiveGramIndex::parse(std::istream& in, std::string_view origin) {
    FiveGramIndex index;
    std::string line;
    while (std::getline(in, line)) {
        const auto fields = split_fields(line);
        if (fields.empty()) continue; // blank line
        std::uint64_t freq = 1;
        std::size_t first_token = 0;
        if (fields.size() == 6) {
            const auto parsed = parse_count(fields[0]);
            if (!parsed || *parsed == 0) {
                ++index.malformed_lines_;
                continue;
            }
            freq = *parsed;
            first_token = 1;
        } else if (fields.size() != 5) {
            ++index.malformed_lines_;
            continue;
        }
        for (std::size_t k = 0; k < 5; ++k) {
            index.tokens_.push_back(index.intern(ascii_lower(fields[first_token + k])));
        }
        index.freqs_.push_back(freq);
    }
    if (index.freqs_.empty()) {
        std::string message = "5-gram corpus has no usable lines";
        if (!origin.empty()) message += ": " + std::string(origin);
        throw LoadError(message);
    }
    index.build_window_sums();
    return index;
}

void FiveGramIndex::build_window_sums() {
    pair_sums_.clear();
    triple_sums_.clear();
    pair_sums_.reserve(freqs_.size() * 4);
    triple_sums_.reserve(freqs_.size() * 3);
    for (std::size_t e = 0; e < freqs_.size(); ++e) {
        const std::uint32_t* t = &tokens_[e * 5];
        const std::uint64_t f = freqs_[e];
        for (std::size_t p = 0; p + 1 < 5; ++p) {
            pair_sums_.push_back(PairSum{pair_key(t[p], t[p + 1]), f});
        }
        for (std::size_t p = 0; p + 2 < 5; ++p) {
            triple_sums_.push_back(TripleSum{{t[p], t[p + 1], t[p + 2]}, f});
        }
    }
    const auto aggregate = [](auto& sums) {
        std::sort(sums.begin(), sums.end(),
                  [](const auto& a, const auto& b) { return a.key < b.key; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < sums.size();) {
            auto merged = sums[i];
            for (++i; i < sums.size() && sums[i].key == merged.key; ++i) {
                merged.sum += sums[i].sum;
            }
            sums[out++] = merged;
        }
        sums.resize(out);
    };
    aggregate(pair_sums_);
    aggregate(triple_sums_);
}

FiveGram FiveGramIndex::entry(std::size_t i) const {
    FiveGram gram;
    const std::uint32_t* t = &tokens_[i * 5];
    for (std::size_t k = 0; k < 5; ++k) gram.tokens[k] = vocab_[t[k]];
    gram.freq = freqs_[i];
    return gram;
}

std::uint64_t FiveGramIndex::context_score(std::string_view candidate,
                                           const ContextPattern& pattern) const {
    const auto candidate_id = id_of(ascii_lower(candidate));
    if (!candidate_id) return 0;

    const auto lookup_pair = [this](std::uint32_t a, std::uint32_t b) -> std::uint64_t {
        const std::uint64_t key = pair_key(a, b);
        const auto it = std::lower_bound(pair_sums_.begin(), pair_sums_.end(), key,
                                         [](const PairSum& s, std::uint64_t k) { return s.key < k; });
        return (it != pair_sums_.end() && it->key == key) ? it->sum : 0;
    };
    const auto lookup_triple = [this](const std::array<std::uint32_t, 3>& key) -> std::uint64_t {
        const auto it = std::lower_bound(triple_sums_.begin(), triple_sums_.end(), key,
                                         [](const TripleSum& s, const std::array<std::uint32_t, 3>& k) {
                                             return s.key < k;
                                         });
        return (it != triple_sums_.end() && it->key == key) ? it->sum : 0;
    };

    if (pattern.prev && pattern.next) {
        const auto prev_id = id_of(ascii_lower(*pattern.prev));
        const auto next_id = id_of(ascii_lower(*pattern.next));
        if (!prev_id || !next_id) return 0;
        return lookup_triple({*prev_id, *candidate_id, *next_id});
    }
    if (pattern.prev) {
        const auto prev_id = id_of(ascii_lower(*pattern.prev));
        return prev_id ? lookup_pair(*prev_id, *candidate_id) : 0;
    }
    if (pattern.next) {
        const auto next_id = id_of(ascii_lower(*pattern.next));
        return next_id ? lookup_pair(*candidate_id, *next_id) : 0;
    }
    return 0;
}

ContextPattern make_pattern(const TaggedToken* prev, const TaggedToken* next) {
    ContextPattern pattern;
    if (prev && prev->tag == Tag::IV) pattern.prev = ascii_lower(prev->token.text);
    if (next && next->tag == Tag::IV) pattern.next = ascii_lower(next->token.text);
    return pattern;
}

std::string select_by_context(const FiveGramIndex& index,
                              std::span<const ScoredCandidate> candidates,
                              const TaggedToken* prev,
                              const TaggedToken* next) {
    if (candidates.empty()) {
        throw std::invalid_argument("select_by_context requires at least one candidate");
    }
    const ContextPattern pattern = make_pattern(prev, next);
    const bool score_context = pattern.prev.has_value() || pattern.next.has_value();

    const ScoredCandidate* best = nullptr;
    std::uint64_t best_score = 0;
    for (const ScoredCandidate& candidate : candidates) {
        const std::uint64_t score =
            score_context ? index.context_score(candidate.word, pattern) : 0;
        if (best == nullptr) {
            best = &candidate;
            best_score = score;
            continue;
        }
        bool wins = false;
        if (score != best_score) {
            wins = score > best_score;
        } else if (candidate.edit_distance != best->edit_distance) {
            wins = candidate.edit_distance < best->edit_distance;
        } else if (candidate.unigram_count != best->unigram_count) {
            wins = candidate.unigram_count > best->unigram_count;
        } else {
            wins = candidate.word < best->word;
        }
        if (wins) {
            best = &candidate;
            best_score = score;
        }
    }
    return best->word;
}

} // namespace lexnorm
