"""CoNLL-U serialization: export, import, and structural validation.

Exports write one block per sentence with `# sent_id` and `# text`
comments and the standard 10 tab-separated columns. UPOS carries the UD
label of the current tag (source-faithful mode may emit GRD; strict mode
stays inside the official UPOS inventory), XPOS carries the canonical CKL
tag, LEMMA carries the root/stem of the top-ranked analysis when one
scored above zero, and MISC records annotation provenance. HEAD/DEPREL/
DEPS/FEATS are always underscores: no dependency or feature annotation
exists in this toolkit.

Imports are tolerant of foreign files: multiword-token ranges and empty
nodes are skipped, a missing XPOS leaves the token unannotated unless a
UPOS is present, in which case the token gets the UNK placeholder (a fine
tag cannot be recovered from a coarse one).
"""

from __future__ import annotations

import re
import uuid
from typing import Union

from .documents import Annotation, Document
from .errors import ParseError, UnknownTagError
from .morphology import AffixTable, RootLexicon, ScoringWeights, segment_token
from .tagset import UD_UPOS_INVENTORY, TagRegistry
from .tokenizer import SentenceSpan, Token, TokenKind, classify_char

__all__ = ["export_document", "parse_conllu", "validate_conllu"]

_ID_WORD = re.compile(r"^\d+$")
_ID_RANGE = re.compile(r"^\d+-\d+$")
_ID_EMPTY = re.compile(r"^\d+\.\d+$")


def _lemma(token: Token, lexicon: RootLexicon | None, affixes: AffixTable | None,
           weights: ScoringWeights) -> str:
    if token.kind is not TokenKind.WORD or lexicon is None or affixes is None:
        return "_"
    top = segment_token(token, lexicon, affixes, max_results=1, weights=weights)[0]
    if top.score <= 0.0:
        return "_"
    return top.core().surface


def export_document(
    doc: Document,
    registry: TagRegistry,
    mode: str = "paper",
    lexicon: RootLexicon | None = None,
    affixes: AffixTable | None = None,
    weights: ScoringWeights = ScoringWeights(),
) -> bytes:
    blocks: list[str] = []
    for s_idx, sentence in enumerate(doc.sentences):
        rows = [
            f"# sent_id = {doc.id}.{s_idx + 1}",
            f"# text = {doc.normalized_text[sentence.start:sentence.end]}",
        ]
        for t_idx, token in enumerate(sentence.tokens):
            ann = doc.current_annotation(s_idx, t_idx)
            if ann is None:
                upos = xpos = misc = "_"
            else:
                upos = registry.ud_upos_for(ann.tag, mode)
                xpos = ann.tag
                misc = f"Prov={ann.provenance}"
            rows.append(
                "\t".join(
                    (
                        str(t_idx + 1),
                        token.surface,
                        _lemma(token, lexicon, affixes, weights),
                        upos,
                        xpos,
                        "_",
                        "_",
                        "_",
                        "_",
                        misc,
                    )
                )
            )
        blocks.append("\n".join(rows))
    return ("\n\n".join(blocks) + "\n").encode("utf-8") if blocks else b""


def _parse_misc(misc: str) -> dict[str, str]:
    out: dict[str, str] = {}
    if misc == "_":
        return out
    for part in misc.split("|"):
        key, _, value = part.partition("=")
        if key:
            out[key] = value
    return out


def _layout_sentence(
    forms: list[tuple[str, TokenKind]], text_comment: str | None, base: int
) -> tuple[str, list[Token]]:
    """Place token offsets inside the sentence text; falls back to a
    space-joined reconstruction when the text comment does not contain the
    forms in order."""
    if text_comment is not None:
        tokens: list[Token] = []
        cursor = 0
        for i, (form, kind) in enumerate(forms):
            pos = text_comment.find(form, cursor)
            if pos < 0:
                break
            tokens.append(
                Token(surface=form, start=base + pos, end=base + pos + len(form), index=i, kind=kind)
            )
            cursor = pos + len(form)
        else:
            return text_comment, tokens
    text = " ".join(form for form, _ in forms)
    tokens = []
    cursor = 0
    for i, (form, kind) in enumerate(forms):
        tokens.append(
            Token(surface=form, start=base + cursor, end=base + cursor + len(form), index=i, kind=kind)
        )
        cursor += len(form) + 1
    return text, tokens


def _kind_of(form: str) -> TokenKind:
    kind = classify_char(form[0]) if form else None
    return kind if kind is not None else TokenKind.SYMBOL


def parse_conllu(
    data: Union[bytes, str],
    registry: TagRegistry,
    on_unknown_xpos: str = "reject",
    doc_id: str | None = None,
    title: str = "",
) -> Document:
    """Rebuild a Document (structure + annotations) from CoNLL-U bytes."""
    if on_unknown_xpos not in ("reject", "unk"):
        raise ValueError("on_unknown_xpos must be 'reject' or 'unk'")
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if "\r" in text:
        text = text.replace("\r\n", "\n")

    doc_id = doc_id or uuid.uuid4().hex
    sentences: list[SentenceSpan] = []
    doc_text_parts: list[str] = []
    annotations: list[Annotation] = []

    pending_comments: dict[str, str] = {}
    pending_rows: list[tuple[int, list[str]]] = []
    base = 0

    def flush() -> None:
        nonlocal base
        if not pending_rows:
            pending_comments.clear()
            return
        forms: list[tuple[str, TokenKind]] = []
        tags: list[tuple[int, str | None, str]] = []  # (token idx, tag, provenance)
        expected = 1
        for row_line, cols in pending_rows:
            token_id = cols[0]
            if _ID_RANGE.match(token_id) or _ID_EMPTY.match(token_id):
                continue  # tokenization ranges / empty nodes: lexical rows carry the data
            if not _ID_WORD.match(token_id):
                raise ParseError(f"bad token id {token_id!r}", row_line)
            if int(token_id) != expected:
                raise ParseError(f"token ids not sequential (got {token_id}, expected {expected})", row_line)
            expected += 1
            form = cols[1]
            upos, xpos, misc = cols[3], cols[4], cols[9]
            forms.append((form, _kind_of(form)))
            tag: str | None = None
            if xpos != "_":
                try:
                    tag = registry.resolve_alias(xpos)
                except UnknownTagError:
                    if on_unknown_xpos == "reject":
                        raise ParseError(f"XPOS {xpos!r} does not resolve to a known tag", row_line)
                    tag = "UNK"
            elif upos != "_":
                tag = "UNK"  # coarse label only: keep the token flagged, not guessed
            provenance = _parse_misc(misc).get("Prov", "machine")
            if provenance not in ("human", "machine"):
                provenance = "machine"
            if tag is not None:
                tags.append((len(forms) - 1, tag, provenance))
        if forms:
            sent_text, tokens = _layout_sentence(forms, pending_comments.get("text"), base)
            sentences.append(
                SentenceSpan(start=tokens[0].start, end=tokens[-1].end, tokens=tuple(tokens))
            )
            doc_text_parts.append(sent_text)
            base += len(sent_text) + 1  # sentences joined with a newline
            for token_index, tag, provenance in tags:
                annotations.append(
                    Annotation(
                        doc_id=doc_id,
                        sentence_index=len(sentences) - 1,
                        token_index=token_index,
                        tag=tag,
                        provenance=provenance,
                    )
                )
        pending_comments.clear()
        pending_rows.clear()

    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            key, eq, value = line[1:].partition("=")
            if eq:
                pending_comments[key.strip()] = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(f"expected 10 columns, got {len(cols)}", line_no)
        if any(c == "" for c in cols):
            raise ParseError("empty column", line_no)
        pending_rows.append((line_no, cols))
    flush()

    if not sentences:
        raise ParseError("no sentences found")

    full_text = "\n".join(doc_text_parts)
    doc = Document(
        id=doc_id,
        title=title,
        raw_text=full_text,
        normalized_text=full_text,
        sentences=tuple(sentences),
    )
    for ann in annotations:
        doc.record(ann)
    return doc


def validate_conllu(data: Union[bytes, str], strict_upos: bool = False) -> list[str]:
    """Structural checks; returns a list of problems (empty = valid)."""
    problems: list[str] = []
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            return [f"not valid UTF-8: {exc}"]
    else:
        text = data
    if not text:
        return ["empty input"]
    if "\r" in text:
        problems.append("carriage returns present; LF line endings required")
    if not text.endswith("\n"):
        problems.append("missing trailing newline")

    allowed_upos = set(UD_UPOS_INVENTORY) | {"_"}
    if not strict_upos:
        allowed_upos.add("GRD")

    expected = 1
    in_block = False
    saw_token = False
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            if in_block and expected == 1:
                problems.append(f"line {line_no}: sentence block without token rows")
            in_block = False
            expected = 1
            continue
        in_block = True
        if line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            problems.append(f"line {line_no}: expected 10 columns, got {len(cols)}")
            continue
        token_id = cols[0]
        if _ID_RANGE.match(token_id) or _ID_EMPTY.match(token_id):
            continue
        if not _ID_WORD.match(token_id):
            problems.append(f"line {line_no}: bad token id {token_id!r}")
            continue
        if int(token_id) != expected:
            problems.append(f"line {line_no}: token ids not sequential")
        expected = int(token_id) + 1
        saw_token = True
        if cols[3] not in allowed_upos:
            problems.append(f"line {line_no}: UPOS {cols[3]!r} outside the allowed inventory")
    if not saw_token:
        problems.append("no token rows found")
    return problems
