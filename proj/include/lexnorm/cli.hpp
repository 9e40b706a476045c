#pragma once

// Batch front end: load the four corpora, stream messages one per line,
// emit one annotated record per token plus a summary on stderr.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lexnorm/pipeline.hpp"

namespace lexnorm::cli {

enum class OutputFormat { Tsv, JsonLines };

struct Config {
    std::filesystem::path iv_lexicon_path;
    std::filesystem::path match_dict_path;
    std::filesystem::path freq_corpus_path;
    std::filesystem::path fivegram_path;
    std::string input_path = "-";  // "-" reads standard input
    std::string output_path = "-"; // "-" writes standard output
    OutputFormat format = OutputFormat::Tsv;
    unsigned max_dist = 2;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitLoad = 3;

/// Validate the config, load resources, process input and write records.
/// Diagnostics (load/progress summary, errors) go to the given stream.
int run(const Config& config, std::ostream& diagnostics);

/// Parse flags and run. Returns kExitConfig on malformed flags with usage
/// text on stderr.
int main_impl(int argc, const char* const* argv);

} // namespace lexnorm::cli
