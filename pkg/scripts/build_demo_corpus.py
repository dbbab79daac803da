#!/usr/bin/env python3
"""Build a small demo corpus, machine-annotate it, and export CoNLL-U.

    python scripts/build_demo_corpus.py [corpus_dir]

Writes the corpus under corpus_dir (default ./demo-corpus) and prints the
tag distribution plus one exported document.
"""

import sys

from ckltag import ServiceConfig, Toolkit

TEXTS = [
    ("clothes", "جل و بەرگ."),
    ("bread", "نانەکە باشە. نان و ئاو!"),
    ("reading", "خویندن و هاتن؟ کتێب ١٢."),
]


def main():
    corpus_dir = sys.argv[1] if len(sys.argv) > 1 else "demo-corpus"
    toolkit = Toolkit.from_config(ServiceConfig(corpus_dir=corpus_dir))
    store = toolkit.require_store()

    doc_ids = []
    for title, text in TEXTS:
        doc = store.create_document(text, title)
        written = toolkit.auto_annotate_document(doc.id)
        doc_ids.append(doc.id)
        print(f"{doc.id}  {title}: {written} tokens machine-annotated")

    dist = store.corpus_stats()
    print(f"\ntotal annotations: {dist.total}")
    for tag in sorted(dist.counts):
        print(f"  {tag}\t{dist.counts[tag]}")

    print("\n== strict-mode export of the first document ==")
    sys.stdout.write(store.export_document(doc_ids[0], "strict").decode("utf-8"))


if __name__ == "__main__":
    main()
