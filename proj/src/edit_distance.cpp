#include "lexnorm/edit_distance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lexnorm/text.hpp"

namespace lexnorm {

namespace {

// Presence bits per character class: one bit per letter, one for the
// apostrophe, one shared by everything else. A single edit flips at most
// two presence bits, so popcount(xor) > 2 * max_dist rules a word out.
std::uint32_t class_mask(std::u32string_view points) {
    std::uint32_t mask = 0;
    for (char32_t cp : points) {
        if (cp >= U'a' && cp <= U'z') mask |= 1u << (cp - U'a');
        else if (cp == U'\'') mask |= 1u << 26;
        else mask |= 1u << 27;
    }
    return mask;
}

unsigned levenshtein_codepoints(std::u32string_view a, std::u32string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<unsigned> row(n + 1);
    for (std::size_t j = 0; j <= n; ++j) row[j] = static_cast<unsigned>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        unsigned diag = row[0];
        row[0] = static_cast<unsigned>(i);
        for (std::size_t j = 1; j <= n; ++j) {
            const unsigned up = row[j];
            const unsigned cost = (b[i - 1] == a[j - 1]) ? 0u : 1u;
            row[j] = std::min({diag + cost, up + 1, row[j - 1] + 1});
            diag = up;
        }
    }
    return row[n];
}

} // namespace

unsigned levenshtein(std::string_view a, std::string_view b) {
    return levenshtein_codepoints(decode_utf8(a), decode_utf8(b));
}

std::optional<unsigned> levenshtein_bounded(std::u32string_view a,
                                            std::u32string_view b,
                                            unsigned max_dist) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t diff = n > m ? n - m : m - n;
    if (diff > max_dist) return std::nullopt;

    const unsigned inf = max_dist + 1;
    // row holds D[i-1][*]; cells outside the |i-j| <= max_dist band stay at inf.
    std::vector<unsigned> row(m + 1, inf);
    for (std::size_t j = 0; j <= std::min<std::size_t>(m, max_dist); ++j) {
        row[j] = static_cast<unsigned>(j);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > max_dist ? i - max_dist : 1;
        const std::size_t hi = std::min(m, i + max_dist);
        unsigned diag = row[lo - 1];
        row[lo - 1] = (lo == 1 && i <= max_dist) ? static_cast<unsigned>(i) : inf;
        unsigned best = row[lo - 1];
        for (std::size_t j = lo; j <= hi; ++j) {
            const unsigned up = row[j];
            const unsigned cost = (a[i - 1] == b[j - 1]) ? 0u : 1u;
            unsigned value = std::min({diag + cost, up + 1, row[j - 1] + 1});
            if (value > inf) value = inf;
            diag = up;
            row[j] = value;
            best = std::min(best, value);
        }
        if (hi < m) row[hi + 1] = inf; // left behind by the previous row
        if (best > max_dist) return std::nullopt;
    }
    return row[m] <= max_dist ? std::optional<unsigned>(row[m]) : std::nullopt;
}

DistanceIndex DistanceIndex::build(Lexicon lexicon) {
    if (lexicon.size() == 0) {
        throw std::invalid_argument("cannot build a distance index over an empty lexicon");
    }
    DistanceIndex index;
    std::vector<std::vector<std::string>> by_length;
    for (const std::string& word : lexicon.words()) {
        const std::size_t length = decode_utf8(word).size();
        if (length >= by_length.size()) by_length.resize(length + 1);
        by_length[length].push_back(word);
    }
    index.buckets_.resize(by_length.size());
    for (std::size_t length = 0; length < by_length.size(); ++length) {
        auto& words = by_length[length];
        std::sort(words.begin(), words.end());
        Bucket& bucket = index.buckets_[length];
        bucket.words = std::move(words);
        bucket.points.reserve(bucket.words.size());
        bucket.masks.reserve(bucket.words.size());
        for (const std::string& word : bucket.words) {
            bucket.points.push_back(decode_utf8(word));
            bucket.masks.push_back(class_mask(bucket.points.back()));
        }
    }
    index.source_ = std::move(lexicon);
    return index;
}

std::vector<DistanceCandidate> DistanceIndex::candidates_within(std::string_view query,
                                                                unsigned max_dist) const {
    const std::string folded = ascii_lower(query);
    const std::u32string points = decode_utf8(folded);
    const std::uint32_t mask = class_mask(points);
    const int mask_budget = static_cast<int>(2 * max_dist);

    std::vector<DistanceCandidate> out;
    const std::size_t lo = points.size() > max_dist ? points.size() - max_dist : 0;
    const std::size_t hi = points.size() + max_dist;
    for (std::size_t length = lo; length <= hi && length < buckets_.size(); ++length) {
        const Bucket& bucket = buckets_[length];
        const std::uint32_t* masks = bucket.masks.data();
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            if (std::popcount(mask ^ masks[i]) > mask_budget) continue;
            if (auto d = levenshtein_bounded(points, bucket.points[i], max_dist)) {
                out.push_back(DistanceCandidate{bucket.words[i], *d});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DistanceCandidate& a, const DistanceCandidate& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.word < b.word;
    });
    return out;
}

std::vector<std::size_t> DistanceIndex::bucket_lengths() const {
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].size() > 0) lengths.push_back(i);
    }
    return lengths;
}

std::vector<std::string> DistanceIndex::words_of_length(std::size_t length) const {
    return length < buckets_.size() ? buckets_[length].words : std::vector<std::string>{};
}

} // namespace lexnorm
