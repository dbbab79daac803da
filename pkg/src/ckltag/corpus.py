"""File-backed corpus store.

Layout: one directory per corpus, `corpus.idx` holding one JSON record per
document (id, title, file, counts) and `docs/<id>.jsonl` per document. The
first line of a document file is its structure (text, sentences, tokens);
every later line is one annotation event. Annotation writes append, never
rewrite, so the full history of every token is retained and the current
annotation is simply the last event for its address.

Writes to one document are serialized by a per-document lock; reads and
cross-document operations need no coordination.
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Union

from . import conllu
from .documents import Annotation, Document, TagDistribution, now_iso
from .errors import AddressError, StorageError
from .morphology import AffixTable, RootLexicon, ScoringWeights
from .normalize import normalize_text
from .tagset import TagRegistry
from .tokenizer import split_sentences

__all__ = ["CorpusStore"]


class CorpusStore:
    def __init__(
        self,
        root: Union[str, Path],
        registry: TagRegistry,
        lexicon: RootLexicon | None = None,
        affixes: AffixTable | None = None,
        weights: ScoringWeights = ScoringWeights(),
    ):
        self.root = Path(root)
        self.registry = registry
        self.lexicon = lexicon
        self.affixes = affixes
        self.weights = weights
        try:
            (self.root / "docs").mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot create corpus directory {self.root}: {exc}") from exc
        self._meta_lock = threading.Lock()
        self._doc_locks: dict[str, threading.Lock] = {}

    # -- paths and locks ---------------------------------------------------

    def _index_path(self) -> Path:
        return self.root / "corpus.idx"

    def _doc_path(self, doc_id: str) -> Path:
        return self.root / "docs" / f"{doc_id}.jsonl"

    def _lock_for(self, doc_id: str) -> threading.Lock:
        with self._meta_lock:
            return self._doc_locks.setdefault(doc_id, threading.Lock())

    # -- document lifecycle ------------------------------------------------

    def create_document(self, raw_text: str, title: str) -> Document:
        nt = normalize_text(raw_text)
        sentences = tuple(split_sentences(nt))
        doc = Document(
            id=uuid.uuid4().hex,
            title=title,
            raw_text=raw_text,
            normalized_text=nt.text,
            sentences=sentences,
        )
        self._write_new(doc)
        return doc

    def import_document(
        self, data: Union[bytes, str], title: str = "", on_unknown_xpos: str = "reject"
    ) -> Document:
        doc = conllu.parse_conllu(data, self.registry, on_unknown_xpos=on_unknown_xpos, title=title)
        events = [ann for addr in sorted(doc.annotations) for ann in doc.annotations[addr]]
        self._write_new(doc, events)
        return doc

    def _write_new(self, doc: Document, annotations: list[Annotation] | None = None) -> None:
        path = self._doc_path(doc.id)
        with self._lock_for(doc.id):
            try:
                with open(path, "w", encoding="utf-8") as f:
                    f.write(json.dumps(doc.structure_dict(), ensure_ascii=False) + "\n")
                    for ann in annotations or []:
                        f.write(json.dumps(ann.to_dict(), ensure_ascii=False) + "\n")
            except OSError as exc:
                raise StorageError(f"cannot write document {doc.id}: {exc}") from exc
        record = {
            "id": doc.id,
            "title": doc.title,
            "file": f"docs/{doc.id}.jsonl",
            "sentences": len(doc.sentences),
            "tokens": doc.token_count(),
            "created_at": doc.created_at,
        }
        with self._meta_lock:
            try:
                with open(self._index_path(), "a", encoding="utf-8") as f:
                    f.write(json.dumps(record, ensure_ascii=False) + "\n")
            except OSError as exc:
                raise StorageError(f"cannot update corpus index: {exc}") from exc

    def get_document(self, doc_id: str) -> Document:
        path = self._doc_path(doc_id)
        if not path.exists():
            raise AddressError(f"no document with id {doc_id!r}")
        try:
            with open(path, encoding="utf-8") as f:
                lines = [ln for ln in f.read().split("\n") if ln.strip()]
        except OSError as exc:
            raise StorageError(f"cannot read document {doc_id}: {exc}") from exc
        if not lines:
            raise StorageError(f"document file for {doc_id} is empty")
        doc = Document.from_structure_dict(json.loads(lines[0]))
        for line in lines[1:]:
            doc.record(Annotation.from_dict(json.loads(line)))
        return doc

    def list_documents(self) -> list[dict]:
        path = self._index_path()
        if not path.exists():
            return []
        try:
            with open(path, encoding="utf-8") as f:
                lines = [ln for ln in f.read().split("\n") if ln.strip()]
        except OSError as exc:
            raise StorageError(f"cannot read corpus index: {exc}") from exc
        by_id: dict[str, dict] = {}
        for line in lines:
            record = json.loads(line)
            by_id[record["id"]] = record  # later records supersede
        return list(by_id.values())

    # -- annotations ---------------------------------------------------------

    def record_annotation(self, ann: Annotation) -> Annotation:
        """Canonicalize, validate the address, persist; returns the stored
        annotation (tag canonicalized, timestamp filled)."""
        canonical = self.registry.resolve_alias(ann.tag)
        stored = Annotation(
            doc_id=ann.doc_id,
            sentence_index=ann.sentence_index,
            token_index=ann.token_index,
            tag=canonical,
            provenance=ann.provenance,
            annotator=ann.annotator,
            score=ann.score,
            timestamp=ann.timestamp or now_iso(),
        )
        with self._lock_for(ann.doc_id):
            doc = self.get_document(ann.doc_id)
            if doc.token_at(ann.sentence_index, ann.token_index) is None:
                raise AddressError(
                    f"document {ann.doc_id!r} has no token ({ann.sentence_index}, {ann.token_index})"
                )
            try:
                with open(self._doc_path(ann.doc_id), "a", encoding="utf-8") as f:
                    f.write(json.dumps(stored.to_dict(), ensure_ascii=False) + "\n")
            except OSError as exc:
                raise StorageError(f"cannot append annotation: {exc}") from exc
        return stored

    # -- export / stats ------------------------------------------------------

    def export_document(self, doc_id: str, mode: str = "paper") -> bytes:
        doc = self.get_document(doc_id)
        return conllu.export_document(
            doc,
            self.registry,
            mode=mode,
            lexicon=self.lexicon,
            affixes=self.affixes,
            weights=self.weights,
        )

    def corpus_stats(self) -> TagDistribution:
        counts: dict[str, int] = {}
        for record in self.list_documents():
            doc = self.get_document(record["id"])
            for ann in doc.current_annotations().values():
                counts[ann.tag] = counts.get(ann.tag, 0) + 1
        return TagDistribution.from_counts(counts)
