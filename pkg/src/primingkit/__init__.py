"""Structural priming evaluation toolkit.

Generates controlled prime-target corpora for the dative and transitive
alternations, scores them through pluggable sentence scorers, and aggregates
the Priming Effect with confidence intervals and behavior classification.
"""

from .generator import (
    ConditionSpec,
    GenerationError,
    PrimePair,
    PrimeTargetItem,
    build_corpus,
    default_condition_matrix,
    padding_sentence,
    synthesize_training_corpus,
)
from .lexicon import (
    Lexicon,
    LexiconError,
    cosine_similarity,
    is_associated,
    load_lexicon,
    similarity_threshold,
)
from .metrics import (
    ConditionReport,
    PairedScore,
    TargetPE,
    aggregate,
    classify_behavior,
    cochran_sample_size,
    priming_effect,
)
from .scoring import (
    NGramScorer,
    RemoteScorer,
    ScoreRequest,
    ScoredSequence,
    UniformScorer,
    batch_score,
    score,
    train_ngram,
)
from .sentences import (
    Construction,
    NounPhraseSpec,
    Sentence,
    SentenceSpec,
    alternate,
    indefinite_article,
    realize,
)
from .validator import Violation, validate_items, validate_pair

__version__ = "0.1.0"

__all__ = [
    "ConditionSpec",
    "ConditionReport",
    "Construction",
    "GenerationError",
    "Lexicon",
    "LexiconError",
    "NGramScorer",
    "NounPhraseSpec",
    "PairedScore",
    "PrimePair",
    "PrimeTargetItem",
    "RemoteScorer",
    "ScoreRequest",
    "ScoredSequence",
    "Sentence",
    "SentenceSpec",
    "TargetPE",
    "UniformScorer",
    "Violation",
    "aggregate",
    "alternate",
    "batch_score",
    "build_corpus",
    "classify_behavior",
    "cochran_sample_size",
    "cosine_similarity",
    "default_condition_matrix",
    "indefinite_article",
    "is_associated",
    "load_lexicon",
    "padding_sentence",
    "priming_effect",
    "realize",
    "score",
    "similarity_threshold",
    "synthesize_training_corpus",
    "train_ngram",
    "validate_items",
    "validate_pair",
]
