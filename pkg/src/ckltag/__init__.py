"""Central Kurdish (Sorani) POS annotation toolkit."""

from .config import ServiceConfig, Toolkit
from .morphology import (
    AffixTable,
    LexiconEntry,
    Morph,
    MorphRole,
    RootLexicon,
    ScoringWeights,
    Segmentation,
    load_affix_table,
    load_root_lexicon,
    root_of,
    segment_token,
)
from .normalize import NormalizedText, normalize_text
from .suggestion import BaseScores, Rule, ScoredTag, auto_annotate, load_rules, suggest_tags
from .tagset import (
    CategoryTree,
    TagCategory,
    TagDescriptor,
    TagRegistry,
    load_registry,
)
from .tokenizer import SentenceSpan, Token, TokenKind, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "AffixTable",
    "auto_annotate",
    "BaseScores",
    "CategoryTree",
    "LexiconEntry",
    "load_affix_table",
    "load_registry",
    "load_root_lexicon",
    "load_rules",
    "Morph",
    "MorphRole",
    "NormalizedText",
    "normalize_text",
    "root_of",
    "RootLexicon",
    "Rule",
    "ScoredTag",
    "ScoringWeights",
    "Segmentation",
    "segment_token",
    "SentenceSpan",
    "ServiceConfig",
    "split_sentences",
    "suggest_tags",
    "TagCategory",
    "TagDescriptor",
    "TagRegistry",
    "Token",
    "TokenKind",
    "tokenize",
    "Toolkit",
]
