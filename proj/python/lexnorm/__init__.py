"""Lexical normalisation of noisy short-text messages.

The heavy lifting lives in the compiled extension: edit-distance candidate
search over a match dictionary, Refined Soundex phonetic filtering,
frequency-based correction and 5-gram context selection.
"""

from ._lexnorm import (
    DistanceCandidate,
    DistanceIndex,
    EncodingError,
    FiveGram,
    FiveGramIndex,
    FrequencyModel,
    Lexicon,
    LoadError,
    Method,
    NormalisationResult,
    Normaliser,
    Tag,
    TaggedToken,
    Token,
    TrainingError,
    __version__,
    classify,
    correct,
    edits1,
    levenshtein,
    phonetic_filter,
    refined_soundex,
    tokenize,
)

__all__ = [
    "DistanceCandidate",
    "DistanceIndex",
    "EncodingError",
    "FiveGram",
    "FiveGramIndex",
    "FrequencyModel",
    "Lexicon",
    "LoadError",
    "Method",
    "NormalisationResult",
    "Normaliser",
    "Tag",
    "TaggedToken",
    "Token",
    "TrainingError",
    "__version__",
    "classify",
    "correct",
    "edits1",
    "levenshtein",
    "phonetic_filter",
    "refined_soundex",
    "tokenize",
]
