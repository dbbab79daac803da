"""Tokenizer and sentence splitter over normalized text.

Tokens are maximal runs of same-class codepoints between whitespace:
letters/marks/ZWNJ form word tokens, decimal digits (ASCII and
Eastern-Arabic alike) form number tokens, characters from the fixed
punctuation set form punctuation tokens, and anything else non-whitespace
is a symbol token. Every non-whitespace codepoint of the normalized text
lands in exactly one token, so offsets reconstruct the input losslessly.

Clitics and attached morphemes are NOT split here; a suffixed word like
نانەکە stays one token and is decomposed by the morphology layer instead.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, replace

from .normalize import ZWNJ, NormalizedText

__all__ = [
    "TokenKind",
    "Token",
    "SentenceSpan",
    "tokenize",
    "split_sentences",
    "classify_char",
    "PUNCTUATION",
    "SENTENCE_TERMINATORS",
]

# Closed punctuation inventory; non-letter non-digit codepoints outside this
# set are classified as symbols.
PUNCTUATION = frozenset(
    ".,;:!?'\"()[]{}<>-_/\\…–—·«»‹›“”‘’‐"
    "،"  # ، comma
    "؛"  # ؛ semicolon
    "؟"  # ؟ question mark
    "۔"  # ۔ full stop
    "٫"  # ٫ decimal separator
    "٬"  # ٬ thousands separator
)

# A sentence ends after one of these when followed by whitespace or
# end-of-text.
SENTENCE_TERMINATORS = frozenset(".!؟؛۔")


class TokenKind(enum.Enum):
    WORD = "word"
    PUNCTUATION = "punctuation"
    NUMBER = "number"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Token:
    surface: str
    start: int  # codepoint offset into the normalized text
    end: int  # exclusive
    index: int  # position within its sentence (within the stream for bare tokenize())
    kind: TokenKind


@dataclass(frozen=True)
class SentenceSpan:
    start: int
    end: int
    tokens: tuple[Token, ...]


def classify_char(ch: str) -> TokenKind | None:
    if ch.isspace():
        return None
    if ch in PUNCTUATION:
        return TokenKind.PUNCTUATION
    cat = unicodedata.category(ch)
    if cat == "Nd":
        return TokenKind.NUMBER
    if cat[0] in ("L", "M") or ch == ZWNJ:
        return TokenKind.WORD
    return TokenKind.SYMBOL


def tokenize(nt: NormalizedText) -> list[Token]:
    """Split normalized text into tokens; index is the stream position.

    Word and number runs extend over any codepoints of the same class;
    punctuation and symbol runs extend only over repeats of the same
    codepoint, so "..." is one token but "»!" is two.
    """
    text = nt.text
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        kind = classify_char(text[i])
        if kind is None:
            i += 1
            continue
        j = i + 1
        if kind in (TokenKind.WORD, TokenKind.NUMBER):
            while j < n and classify_char(text[j]) is kind:
                j += 1
        else:
            while j < n and text[j] == text[i]:
                j += 1
        tokens.append(Token(surface=text[i:j], start=i, end=j, index=len(tokens), kind=kind))
        i = j
    return tokens


def _ends_sentence(token: Token, text: str) -> bool:
    # a punctuation run closes the sentence when it ends in a terminator
    # that is followed by whitespace or end-of-text
    if token.kind is not TokenKind.PUNCTUATION:
        return False
    if token.surface[-1] not in SENTENCE_TERMINATORS:
        return False
    return token.end >= len(text) or text[token.end].isspace()


def split_sentences(nt: NormalizedText) -> list[SentenceSpan]:
    """Group the token stream into sentences; token indices restart at 0 in
    each sentence."""
    sentences: list[SentenceSpan] = []
    current: list[Token] = []

    def close():
        if current:
            sentences.append(
                SentenceSpan(start=current[0].start, end=current[-1].end, tokens=tuple(current))
            )
            current.clear()

    for token in tokenize(nt):
        current.append(replace(token, index=len(current)))
        if _ends_sentence(token, nt.text):
            close()
    close()
    return sentences
