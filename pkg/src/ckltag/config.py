"""Service configuration and the assembled toolkit object.

ServiceConfig is what `serve --config file.json` reads; the same object
drives the CLI defaults. Toolkit wires the registry, lexicon, affix table,
rules, and corpus store together and offers the pipeline operations the CLI
and HTTP layers share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .corpus import CorpusStore
from .documents import Annotation, Document
from .errors import CkltagError
from .morphology import (
    AffixTable,
    RootLexicon,
    ScoringWeights,
    Segmentation,
    load_affix_table,
    load_root_lexicon,
    seed_affix_path,
    seed_lexicon_path,
    segment_token,
)
from .normalize import normalize_text
from .suggestion import (
    BaseScores,
    Rule,
    ScoredTag,
    auto_annotate,
    load_rules,
    seed_rules_path,
    suggest_tags,
)
from .tagset import TagRegistry, load_registry
from .tokenizer import Token, TokenKind, tokenize

__all__ = ["ServiceConfig", "Toolkit"]


@dataclass
class ServiceConfig:
    listen: str = "127.0.0.1:8571"
    corpus_dir: str = "corpus"
    lexicon_path: Optional[str] = None  # None = packaged seed
    affix_path: Optional[str] = None
    rules_path: Optional[str] = None
    ud_mode: str = "paper"
    static_dir: Optional[str] = None
    w_lex: float = 0.7
    w_shape: float = 0.3
    base_scores: dict = field(default_factory=dict)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ServiceConfig":
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
        known = {f_.name for f_ in cls.__dataclass_fields__.values()}  # type: ignore[attr-defined]
        unknown = set(raw) - known
        if unknown:
            raise CkltagError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)

    def host_and_port(self) -> tuple[str, int]:
        host, sep, port = self.listen.rpartition(":")
        if not sep or not port.isdigit():
            raise CkltagError(f"listen address must be host:port, got {self.listen!r}")
        return host or "127.0.0.1", int(port)

    def validate(self) -> None:
        self.host_and_port()
        if self.ud_mode not in ("paper", "strict"):
            raise CkltagError(f"ud_mode must be paper or strict, got {self.ud_mode!r}")
        for label, path in (
            ("lexicon_path", self.lexicon_path),
            ("affix_path", self.affix_path),
            ("rules_path", self.rules_path),
            ("static_dir", self.static_dir),
        ):
            if path is not None and not Path(path).exists():
                raise CkltagError(f"{label} does not exist: {path}")


@dataclass
class Toolkit:
    registry: TagRegistry
    lexicon: RootLexicon
    affixes: AffixTable
    rules: list[Rule]
    store: Optional[CorpusStore] = None
    weights: ScoringWeights = ScoringWeights()
    scores: BaseScores = BaseScores()
    ud_mode: str = "paper"

    @classmethod
    def from_config(cls, config: ServiceConfig, include_store: bool = True) -> "Toolkit":
        """Assemble everything from a config. include_store=False skips the
        corpus directory, for commands that only run the pure pipeline."""
        config.validate()
        registry = load_registry()
        lexicon = load_root_lexicon(config.lexicon_path or seed_lexicon_path(), registry)
        affixes = load_affix_table(config.affix_path or seed_affix_path(), registry)
        scores = BaseScores(**config.base_scores) if config.base_scores else BaseScores()
        rules = load_rules(config.rules_path or seed_rules_path(), registry, scores)
        weights = ScoringWeights(w_lex=config.w_lex, w_shape=config.w_shape)
        store = None
        if include_store:
            store = CorpusStore(
                config.corpus_dir, registry, lexicon=lexicon, affixes=affixes, weights=weights
            )
        return cls(
            registry=registry,
            lexicon=lexicon,
            affixes=affixes,
            rules=rules,
            store=store,
            weights=weights,
            scores=scores,
            ud_mode=config.ud_mode,
        )

    # -- pipeline helpers shared by CLI and HTTP layers ---------------------

    def segment(self, surface: str, max_results: int = 10) -> list[Segmentation]:
        return segment_token(surface, self.lexicon, self.affixes, max_results, self.weights)

    def suggest_for_surface(
        self, surface: str, left: str | None = None, right: str | None = None
    ) -> list[ScoredTag]:
        """Suggestions for a bare string, with optional neighbor surfaces."""

        def as_token(s: str | None, index: int) -> Token | None:
            if s is None:
                return None
            nt = normalize_text(s)
            tokens = tokenize(nt)
            if len(tokens) == 1:
                return Token(
                    surface=tokens[0].surface,
                    start=0,
                    end=len(tokens[0].surface),
                    index=index,
                    kind=tokens[0].kind,
                )
            return Token(surface=nt.text, start=0, end=len(nt.text), index=index, kind=TokenKind.WORD)

        token = as_token(surface, 1)
        if token is None:
            raise CkltagError("empty token")
        segs = segment_token(token, self.lexicon, self.affixes, weights=self.weights)
        return suggest_tags(
            token,
            as_token(left, 0),
            as_token(right, 2),
            segs,
            self.lexicon,
            self.registry,
            self.rules,
            self.scores,
        )

    def suggest_at(self, doc: Document, sentence_index: int, token_index: int) -> list[ScoredTag]:
        token = doc.token_at(sentence_index, token_index)
        if token is None:
            from .errors import AddressError

            raise AddressError(
                f"document {doc.id!r} has no token ({sentence_index}, {token_index})"
            )
        tokens = doc.sentences[sentence_index].tokens
        left = tokens[token_index - 1] if token_index > 0 else None
        right = tokens[token_index + 1] if token_index + 1 < len(tokens) else None
        segs = segment_token(token, self.lexicon, self.affixes, weights=self.weights)
        return suggest_tags(
            token, left, right, segs, self.lexicon, self.registry, self.rules, self.scores
        )

    def require_store(self) -> CorpusStore:
        if self.store is None:
            raise CkltagError("corpus store not configured")
        return self.store

    def auto_annotate_document(self, doc_id: str, annotator: str = "auto") -> int:
        """Store the top-1 machine suggestion for every token; returns the
        number of annotations written."""
        store = self.require_store()
        doc = store.get_document(doc_id)
        written = 0
        for s_idx, sentence in enumerate(doc.sentences):
            for token_index, scored in auto_annotate(
                sentence,
                self.lexicon,
                self.affixes,
                self.registry,
                self.rules,
                self.weights,
                self.scores,
            ):
                store.record_annotation(
                    Annotation(
                        doc_id=doc_id,
                        sentence_index=s_idx,
                        token_index=token_index,
                        tag=scored.tag,
                        provenance="machine",
                        annotator=annotator,
                        score=scored.score,
                    )
                )
                written += 1
        return written
