"""Document, annotation, and distribution models for the corpus store."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

from .tagset import TagCategory, TagRegistry
from .tokenizer import SentenceSpan, Token, TokenKind

__all__ = ["Annotation", "Document", "TagDistribution", "now_iso"]

PROVENANCES = ("human", "machine")


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class Annotation:
    doc_id: str
    sentence_index: int
    token_index: int
    tag: str  # canonical abbreviation
    provenance: str  # human | machine
    annotator: str = ""
    score: float | None = None
    timestamp: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}")

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "sentence_index": self.sentence_index,
            "token_index": self.token_index,
            "tag": self.tag,
            "provenance": self.provenance,
            "annotator": self.annotator,
            "score": self.score,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Annotation":
        return cls(
            doc_id=d["doc_id"],
            sentence_index=int(d["sentence_index"]),
            token_index=int(d["token_index"]),
            tag=d["tag"],
            provenance=d["provenance"],
            annotator=d.get("annotator", ""),
            score=d.get("score"),
            timestamp=d.get("timestamp", ""),
        )


@dataclass
class Document:
    """A normalized, tokenized text plus its annotation log.

    annotations maps (sentence_index, token_index) to the full write history
    for that token, oldest first; the last entry is current.
    """

    id: str
    title: str
    raw_text: str
    normalized_text: str
    sentences: tuple[SentenceSpan, ...]
    created_at: str = field(default_factory=now_iso)
    annotations: dict[tuple[int, int], list[Annotation]] = field(default_factory=dict)

    def token_at(self, sentence_index: int, token_index: int) -> Token | None:
        if 0 <= sentence_index < len(self.sentences):
            tokens = self.sentences[sentence_index].tokens
            if 0 <= token_index < len(tokens):
                return tokens[token_index]
        return None

    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)

    def current_annotation(self, sentence_index: int, token_index: int) -> Annotation | None:
        history = self.annotations.get((sentence_index, token_index))
        return history[-1] if history else None

    def annotation_history(self, sentence_index: int, token_index: int) -> list[Annotation]:
        """Superseded writes for the token, oldest first (current excluded)."""
        history = self.annotations.get((sentence_index, token_index), [])
        return list(history[:-1])

    def current_annotations(self) -> dict[tuple[int, int], Annotation]:
        return {addr: hist[-1] for addr, hist in self.annotations.items() if hist}

    def record(self, ann: Annotation) -> None:
        self.annotations.setdefault((ann.sentence_index, ann.token_index), []).append(ann)

    def structure_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "raw_text": self.raw_text,
            "normalized_text": self.normalized_text,
            "created_at": self.created_at,
            "sentences": [
                {
                    "start": s.start,
                    "end": s.end,
                    "tokens": [
                        {
                            "surface": t.surface,
                            "start": t.start,
                            "end": t.end,
                            "index": t.index,
                            "kind": t.kind.value,
                        }
                        for t in s.tokens
                    ],
                }
                for s in self.sentences
            ],
        }

    @classmethod
    def from_structure_dict(cls, d: dict) -> "Document":
        sentences = tuple(
            SentenceSpan(
                start=s["start"],
                end=s["end"],
                tokens=tuple(
                    Token(
                        surface=t["surface"],
                        start=t["start"],
                        end=t["end"],
                        index=t["index"],
                        kind=TokenKind(t["kind"]),
                    )
                    for t in s["tokens"]
                ),
            )
            for s in d["sentences"]
        )
        return cls(
            id=d["id"],
            title=d["title"],
            raw_text=d["raw_text"],
            normalized_text=d["normalized_text"],
            sentences=sentences,
            created_at=d.get("created_at", ""),
        )


@dataclass(frozen=True)
class TagDistribution:
    counts: dict[str, int]
    total: int

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "TagDistribution":
        return cls(counts=dict(counts), total=sum(counts.values()))

    def category_rollup(self, registry: TagRegistry) -> dict[str, int]:
        rollup = {category.value: 0 for category in TagCategory}
        for tag, n in self.counts.items():
            rollup[registry.lookup(tag).category.value] += n
        return rollup
