#pragma once

// Shared test scaffolding: a scratch directory cleaned up on exit and a
// handful of deterministic random generators.

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testing {

class TempDir {
public:
    TempDir() {
        const auto base = std::filesystem::temp_directory_path();
        std::mt19937_64 rng(std::random_device{}());
        path_ = base / ("lexnorm-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& contents) const {
        const auto file = path_ / name;
        std::ofstream out(file, std::ios::binary);
        out << contents;
        return file;
    }

private:
    std::filesystem::path path_;
};

inline std::string random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> letter_dist(0, 25);
    std::string word(len_dist(rng), 'a');
    for (char& c : word) c = static_cast<char>('a' + letter_dist(rng));
    return word;
}

} // namespace testing
