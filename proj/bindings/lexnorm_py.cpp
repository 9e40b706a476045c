// Python bindings for the normalisation library. The extension exposes
// the individual operations (distance, phonetic encoding, correction,
// context scoring) plus a Normaliser that owns the loaded corpora and
// runs the whole cascade.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "lexnorm/cli.hpp"
#include "lexnorm/edit_distance.hpp"
#include "lexnorm/lexicon.hpp"
#include "lexnorm/ngram_context.hpp"
#include "lexnorm/norvig_corrector.hpp"
#include "lexnorm/pipeline.hpp"
#include "lexnorm/refined_soundex.hpp"
#include "lexnorm/token_classifier.hpp"

namespace py = pybind11;
using namespace lexnorm;

namespace {

ContextPattern pattern_from(const std::optional<std::string>& prev,
                            const std::optional<std::string>& next) {
    ContextPattern pattern;
    pattern.prev = prev;
    pattern.next = next;
    return pattern;
}

} // namespace

PYBIND11_MODULE(_lexnorm, m) {
    m.doc() = "Lexical normalisation of noisy short-text messages: edit-distance "
              "candidate search, Refined Soundex filtering, frequency-based "
              "correction and 5-gram context selection.";

    py::register_exception<LoadError>(m, "LoadError");
    py::register_exception<TrainingError>(m, "TrainingError");
    py::register_exception<EncodingError>(m, "EncodingError");

    py::enum_<Tag>(m, "Tag")
        .value("IV", Tag::IV)
        .value("OOV", Tag::OOV)
        .value("NO", Tag::NO);

    py::enum_<Method>(m, "Method")
        .value("Identity", Method::Identity)
        .value("NorvigOnly", Method::NorvigOnly)
        .value("PhoneticAgreement", Method::PhoneticAgreement)
        .value("ContextSelection", Method::ContextSelection)
        .value("Fallback", Method::Fallback)
        .value("Unchanged", Method::Unchanged);

    py::class_<Token>(m, "Token")
        .def_readonly("text", &Token::text)
        .def_readonly("index", &Token::index)
        .def("__repr__", [](const Token& t) {
            return "Token(text='" + t.text + "', index=" + std::to_string(t.index) + ")";
        });

    py::class_<TaggedToken>(m, "TaggedToken")
        .def_readonly("token", &TaggedToken::token)
        .def_readonly("tag", &TaggedToken::tag)
        .def("__repr__", [](const TaggedToken& t) {
            return "TaggedToken(text='" + t.token.text + "', tag=" +
                   std::string(to_string(t.tag)) + ")";
        });

    py::class_<Lexicon>(m, "Lexicon")
        .def_static("load", &Lexicon::load, py::arg("path"),
                    "Load a one-word-per-line UTF-8 word list.")
        .def_static("from_words", &Lexicon::from_words, py::arg("words"))
        .def("contains", &Lexicon::contains, py::arg("token"))
        .def("__contains__", &Lexicon::contains)
        .def("__len__", &Lexicon::size)
        .def_property_readonly("size", &Lexicon::size)
        .def_property_readonly("skipped_line_count", &Lexicon::skipped_line_count);

    m.def("tokenize", &tokenize, py::arg("line"),
          "Split a message into whitespace-delimited tokens.");
    m.def(
        "classify",
        [](const std::string& text, const Lexicon& lex) {
            return classify(Token{text, 0}, lex);
        },
        py::arg("token"), py::arg("lexicon"),
        "Tag a token IV, OOV or NO against the lexicon.");

    m.def("levenshtein", &levenshtein, py::arg("a"), py::arg("b"),
          "Exact edit distance over Unicode code points.");

    py::class_<DistanceCandidate>(m, "DistanceCandidate")
        .def_readonly("word", &DistanceCandidate::word)
        .def_readonly("distance", &DistanceCandidate::distance)
        .def("__repr__", [](const DistanceCandidate& c) {
            return "DistanceCandidate(word='" + c.word +
                   "', distance=" + std::to_string(c.distance) + ")";
        });

    py::class_<DistanceIndex>(m, "DistanceIndex")
        .def_static("build", &DistanceIndex::build, py::arg("lexicon"))
        .def("candidates_within", &DistanceIndex::candidates_within, py::arg("query"),
             py::arg("max_dist") = 2,
             "All dictionary words within max_dist edits, sorted by (distance, word).")
        .def_property_readonly("source", &DistanceIndex::source);

    m.def("refined_soundex", &refined_soundex, py::arg("word"),
          "Variable-length Refined Soundex code (uppercase initial plus digits).");
    m.def(
        "phonetic_filter",
        [](const std::string& query, const std::vector<DistanceCandidate>& candidates) {
            return phonetic_filter(query, candidates);
        },
        py::arg("query"), py::arg("candidates"),
        "Keep the candidates whose full code equals the query's code.");

    py::class_<FrequencyModel>(m, "FrequencyModel")
        .def_static("train", &FrequencyModel::train, py::arg("corpus_text"))
        .def_static("load", &FrequencyModel::load, py::arg("path"))
        .def("count", &FrequencyModel::count, py::arg("word"))
        .def("knows", &FrequencyModel::knows, py::arg("word"))
        .def_property_readonly("total", &FrequencyModel::total)
        .def_property_readonly("vocabulary_size", &FrequencyModel::vocabulary_size);

    m.def("edits1", &edits1, py::arg("word"),
          "All single-edit variants, in generation order, before dedup.");
    m.def("correct", &correct, py::arg("word"), py::arg("model"),
          "Best correction from the model, or None.");

    py::class_<FiveGram>(m, "FiveGram")
        .def_readonly("tokens", &FiveGram::tokens)
        .def_readonly("freq", &FiveGram::freq);

    py::class_<FiveGramIndex>(m, "FiveGramIndex")
        .def_static("load", &FiveGramIndex::load, py::arg("path"))
        .def_static(
            "parse",
            [](const std::string& text) {
                std::istringstream in(text);
                return FiveGramIndex::parse(in);
            },
            py::arg("text"), "Parse 5-gram lines from a string.")
        .def(
            "context_score",
            [](const FiveGramIndex& index, const std::string& candidate,
               const std::optional<std::string>& prev, const std::optional<std::string>& next) {
                return index.context_score(candidate, pattern_from(prev, next));
            },
            py::arg("candidate"), py::arg("prev") = std::nullopt, py::arg("next") = std::nullopt,
            "Frequency-weighted contiguous-window count.")
        .def("entry", &FiveGramIndex::entry, py::arg("i"))
        .def_property_readonly("entry_count", &FiveGramIndex::entry_count)
        .def_property_readonly("malformed_line_count", &FiveGramIndex::malformed_line_count)
        .def("__len__", &FiveGramIndex::entry_count);

    py::class_<NormalisationResult>(m, "NormalisationResult")
        .def_readonly("original", &NormalisationResult::original)
        .def_readonly("tag", &NormalisationResult::tag)
        .def_readonly("normalised", &NormalisationResult::normalised)
        .def_readonly("method", &NormalisationResult::method)
        .def("__repr__", [](const NormalisationResult& r) {
            return "NormalisationResult(original='" + r.original + "', tag=" +
                   std::string(to_string(r.tag)) + ", normalised='" + r.normalised +
                   "', method=" + std::string(to_string(r.method)) + ")";
        });

    py::class_<Resources>(m, "Normaliser")
        .def(py::init([](const std::filesystem::path& lexicon, const std::filesystem::path& dict,
                         const std::filesystem::path& corpus,
                         const std::filesystem::path& fivegrams) {
                 return Resources::load(lexicon, dict, corpus, fivegrams);
             }),
             py::arg("lexicon"), py::arg("dictionary"), py::arg("corpus"), py::arg("fivegrams"),
             "Load the four corpora: IV lexicon, match dictionary, frequency "
             "corpus and 5-gram corpus.")
        .def(
            "normalise_message",
            [](const Resources& res, const std::string& line, unsigned max_dist) {
                return normalise_message(line, res, max_dist);
            },
            py::arg("line"), py::arg("max_dist") = 2,
            "Tokenize, classify and normalise one message.")
        .def_property_readonly("lexicon",
                               [](const Resources& res) -> const Lexicon& {
                                   return res.iv_lexicon;
                               },
                               py::return_value_policy::reference_internal)
        .def_property_readonly("dictionary",
                               [](const Resources& res) -> const Lexicon& {
                                   return res.match_index.source();
                               },
                               py::return_value_policy::reference_internal);

    m.attr("__version__") = "0.1.0";
}
