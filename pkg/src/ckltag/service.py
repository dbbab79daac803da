"""HTTP API consumed by the annotation UI and by scripts.

All endpoints live under /api and speak UTF-8 JSON; errors use a uniform
{error, code, detail} envelope. Responses are pure functions of store state
plus the request: there is no session state and no suggestion cache
(suggestions are recomputed on demand). Static assets for the UI are served
from the configured directory when one is given.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .config import Toolkit
from .documents import Annotation, Document
from .errors import (
    AddressError,
    CkltagError,
    ParseError,
    StorageError,
    UnknownTagError,
)
from .tagset import TagDescriptor

__all__ = ["create_app"]


class DocumentIn(BaseModel):
    title: str = ""
    text: str


class AnnotationIn(BaseModel):
    doc: str
    sent: int
    tok: int
    tag: str
    annotator: str = ""
    score: Optional[float] = None


def _envelope(status: int, code: str, message: str, detail: Optional[dict] = None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": message, "code": code, "detail": detail or {}},
    )


def _tag_payload(toolkit: Toolkit, desc: TagDescriptor) -> dict:
    return {
        "table_index": desc.table_index,
        "abbrev": desc.abbrev,
        "english_name": desc.english_name,
        "kurdish_name": desc.kurdish_name,
        "category": desc.category.value,
        "category_kurdish": desc.category.kurdish_name,
        "ud_paper": toolkit.registry.ud_upos_for(desc.abbrev, "paper"),
        "ud_strict": toolkit.registry.ud_upos_for(desc.abbrev, "strict"),
        "kurdish_needs_review": desc.kurdish_needs_review,
    }


def _sentence_payload(doc: Document, index: int) -> dict:
    sentence = doc.sentences[index]
    tokens = []
    for token in sentence.tokens:
        ann = doc.current_annotation(index, token.index)
        tokens.append(
            {
                "index": token.index,
                "surface": token.surface,
                "start": token.start,
                "end": token.end,
                "kind": token.kind.value,
                "status": ann.provenance if ann else "untagged",
                "tag": ann.tag if ann else None,
                "annotator": ann.annotator if ann else None,
            }
        )
    return {
        "index": index,
        "start": sentence.start,
        "end": sentence.end,
        "text": doc.normalized_text[sentence.start : sentence.end],
        "tokens": tokens,
    }


def _doc_summary(doc: Document) -> dict:
    return {
        "id": doc.id,
        "title": doc.title,
        "sentences": len(doc.sentences),
        "tokens": doc.token_count(),
        "created_at": doc.created_at,
    }


def create_app(toolkit: Toolkit, static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="ckltag annotation service", docs_url=None, redoc_url=None)
    # single-team local deployment, no auth: let UI dev servers on other
    # ports talk to the API
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(UnknownTagError)
    async def unknown_tag(request: Request, exc: UnknownTagError):
        return _envelope(422, "unknown_tag", str(exc), {"abbrev": exc.abbrev})

    @app.exception_handler(AddressError)
    async def bad_address(request: Request, exc: AddressError):
        return _envelope(404, "not_found", str(exc))

    @app.exception_handler(ParseError)
    async def bad_parse(request: Request, exc: ParseError):
        return _envelope(400, "parse_error", str(exc))

    @app.exception_handler(StorageError)
    async def storage_failure(request: Request, exc: StorageError):
        return _envelope(500, "storage_error", str(exc))

    @app.exception_handler(CkltagError)
    async def generic_error(request: Request, exc: CkltagError):
        return _envelope(400, "bad_request", str(exc))

    @app.get("/api/tagset")
    def tagset():
        return {
            "tags": [_tag_payload(toolkit, d) for d in toolkit.registry],
            "aliases": dict(toolkit.registry.aliases),
        }

    @app.get("/api/tagset/tree")
    def tagset_tree():
        return toolkit.registry.tree.to_dict()

    @app.get("/api/documents")
    def documents():
        return {"documents": toolkit.store.list_documents()}

    @app.post("/api/documents")
    def create_document(payload: DocumentIn):
        doc = toolkit.store.create_document(payload.text, payload.title)
        return _doc_summary(doc)

    @app.get("/api/documents/{doc_id}")
    def get_document(doc_id: str):
        doc = toolkit.store.get_document(doc_id)
        summary = _doc_summary(doc)
        summary["text"] = doc.normalized_text
        summary["sentences"] = [_sentence_payload(doc, i) for i in range(len(doc.sentences))]
        return summary

    @app.get("/api/documents/{doc_id}/sentences/{index}")
    def get_sentence(doc_id: str, index: int):
        doc = toolkit.store.get_document(doc_id)
        if not 0 <= index < len(doc.sentences):
            raise AddressError(f"document {doc_id!r} has no sentence {index}")
        return _sentence_payload(doc, index)

    @app.get("/api/suggest")
    def suggest(doc: str, sent: int, tok: int):
        document = toolkit.store.get_document(doc)
        ranked = toolkit.suggest_at(document, sent, tok)
        return {
            "doc": doc,
            "sentence": sent,
            "token": tok,
            "suggestions": [
                {
                    "tag": s.tag,
                    "score": s.score,
                    "rule_id": s.rule_id,
                    "explanation": s.explanation,
                }
                for s in ranked
            ],
        }

    @app.post("/api/annotations")
    def post_annotation(payload: AnnotationIn):
        stored = toolkit.store.record_annotation(
            Annotation(
                doc_id=payload.doc,
                sentence_index=payload.sent,
                token_index=payload.tok,
                tag=payload.tag,
                provenance="human",
                annotator=payload.annotator,
                score=payload.score,
            )
        )
        return stored.to_dict()

    @app.post("/api/documents/{doc_id}/auto-annotate")
    def auto_annotate_document(doc_id: str):
        return {"annotated": toolkit.auto_annotate_document(doc_id)}

    @app.get("/api/documents/{doc_id}/export")
    def export_document(doc_id: str, mode: str = None):  # type: ignore[assignment]
        mode = mode or toolkit.ud_mode
        if mode not in ("paper", "strict"):
            raise CkltagError(f"mode must be paper or strict, got {mode!r}")
        data = toolkit.store.export_document(doc_id, mode)
        return Response(
            content=data,
            media_type="text/plain; charset=utf-8",
            headers={"Content-Disposition": f'attachment; filename="{doc_id}.conllu"'},
        )

    @app.get("/api/stats")
    def stats():
        dist = toolkit.store.corpus_stats()
        return {
            "total": dist.total,
            "counts": dist.counts,
            "by_category": dist.category_rollup(toolkit.registry),
        }

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
