#include "lexnorm/cli.hpp"

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

namespace lexnorm::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_tsv(std::ostream& out, const std::vector<NormalisationResult>& results) {
    for (const NormalisationResult& r : results) {
        out << r.original << '\t' << to_string(r.tag) << '\t' << r.normalised << '\t'
            << to_string(r.method) << '\n';
    }
    out << '\n'; // one blank line terminates each message block
}

void write_jsonl(std::ostream& out, const std::vector<NormalisationResult>& results,
                 std::size_t message_index) {
    for (std::size_t i = 0; i < results.size(); ++i) {
        const NormalisationResult& r = results[i];
        nlohmann::ordered_json record;
        record["original"] = r.original;
        record["tag"] = to_string(r.tag);
        record["normalised"] = r.normalised;
        record["method"] = to_string(r.method);
        record["message"] = message_index;
        record["token"] = i;
        out << record.dump() << '\n';
    }
}

} // namespace

int run(const Config& config, std::ostream& diagnostics) {
    if (config.max_dist < 1) {
        diagnostics << "error: --max-dist must be at least 1\n";
        return kExitConfig;
    }
    const std::array<std::filesystem::path, 4> corpus_paths = {
        config.iv_lexicon_path, config.match_dict_path, config.freq_corpus_path,
        config.fivegram_path};
    std::set<std::string> distinct;
    for (const auto& path : corpus_paths) {
        if (path.empty()) {
            diagnostics << "error: all four corpus paths are required\n";
            return kExitConfig;
        }
        distinct.insert(path.string());
    }
    if (distinct.size() != corpus_paths.size()) {
        diagnostics << "error: corpus paths must be distinct\n";
        return kExitConfig;
    }

    const auto load_start = Clock::now();
    Resources res;
    try {
        res = Resources::load(config.iv_lexicon_path, config.match_dict_path,
                              config.freq_corpus_path, config.fivegram_path);
    } catch (const LoadError& e) {
        diagnostics << "error: " << e.what() << '\n';
        return kExitLoad;
    } catch (const TrainingError& e) {
        diagnostics << "error: " << e.what() << '\n';
        return kExitLoad;
    }
    const double load_seconds = seconds_since(load_start);

    std::ifstream input_file;
    std::istream* input = &std::cin;
    if (config.input_path != "-") {
        input_file.open(config.input_path, std::ios::binary);
        if (!input_file) {
            diagnostics << "error: cannot open input file: " << config.input_path << '\n';
            return kExitConfig;
        }
        input = &input_file;
    }
    std::ofstream output_file;
    std::ostream* output = &std::cout;
    if (config.output_path != "-") {
        output_file.open(config.output_path, std::ios::binary);
        if (!output_file) {
            diagnostics << "error: cannot open output file: " << config.output_path << '\n';
            return kExitConfig;
        }
        output = &output_file;
    }

    std::size_t messages = 0;
    std::map<Tag, std::size_t> tag_counts;
    std::map<Method, std::size_t> method_counts;
    const auto process_start = Clock::now();
    std::string line;
    while (std::getline(*input, line)) {
        const auto results = normalise_message(line, res, config.max_dist);
        for (const NormalisationResult& r : results) {
            ++tag_counts[r.tag];
            ++method_counts[r.method];
        }
        if (config.format == OutputFormat::Tsv) {
            write_tsv(*output, results);
        } else {
            write_jsonl(*output, results, messages);
        }
        ++messages;
    }
    output->flush();
    const double process_seconds = seconds_since(process_start);

    const std::size_t total_tokens =
        tag_counts[Tag::IV] + tag_counts[Tag::OOV] + tag_counts[Tag::NO];
    const std::size_t oov_tokens = tag_counts[Tag::OOV];
    const double oov_rate = process_seconds > 0 ? oov_tokens / process_seconds : 0.0;

    diagnostics << "[lexnorm] corpora loaded in " << load_seconds << "s (lexicon "
                << res.iv_lexicon.size() << " words, dictionary " << res.match_index.source().size()
                << " words, model " << res.freq_model.vocabulary_size() << " terms, 5-grams "
                << res.fivegram_index.entry_count() << " entries";
    const std::size_t skipped = res.iv_lexicon.skipped_line_count() +
                                res.match_index.source().skipped_line_count() +
                                res.fivegram_index.malformed_line_count();
    if (skipped > 0) diagnostics << ", " << skipped << " malformed lines skipped";
    diagnostics << ")\n";
    diagnostics << "[lexnorm] messages " << messages << ", tokens " << total_tokens << " (IV "
                << tag_counts[Tag::IV] << ", OOV " << oov_tokens << ", NO " << tag_counts[Tag::NO]
                << ")\n";
    diagnostics << "[lexnorm] methods:";
    for (Method m : {Method::Identity, Method::NorvigOnly, Method::PhoneticAgreement,
                     Method::ContextSelection, Method::Fallback, Method::Unchanged}) {
        diagnostics << ' ' << to_string(m) << ' ' << method_counts[m];
    }
    diagnostics << '\n';
    diagnostics << "[lexnorm] processed in " << process_seconds << "s (" << oov_rate
                << " OOV tokens/second)\n";
    return kExitOk;
}

int main_impl(int argc, const char* const* argv) {
    CLI::App app{"lexnorm: lexical normalisation of noisy short-text messages"};
    Config config;
    std::string format = "tsv";

    app.add_option("--lexicon", config.iv_lexicon_path,
                   "In-vocabulary lexicon, one word per line")
        ->required();
    app.add_option("--dict", config.match_dict_path,
                   "Match dictionary for approximate search, one word per line")
        ->required();
    app.add_option("--corpus", config.freq_corpus_path,
                   "Plain-text corpus for the word-frequency model")
        ->required();
    app.add_option("--fivegrams", config.fivegram_path,
                   "5-gram corpus: 'freq w1 w2 w3 w4 w5' or 'w1 w2 w3 w4 w5' per line")
        ->required();
    app.add_option("--input", config.input_path, "Input file, one message per line ('-' = stdin)");
    app.add_option("--output", config.output_path, "Output file ('-' = stdout)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "jsonl"}));
    app.add_option("--max-dist", config.max_dist, "Maximum edit distance for candidate search")
        ->check(CLI::Range(1u, 16u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }
    config.format = (format == "jsonl") ? OutputFormat::JsonLines : OutputFormat::Tsv;
    return run(config, std::cerr);
}

} // namespace lexnorm::cli
