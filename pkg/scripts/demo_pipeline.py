#!/usr/bin/env python3
"""Walk the full pipeline on the attested example words and one sentence.

Run from the repository root:

    python scripts/demo_pipeline.py
"""

from ckltag import (
    load_affix_table,
    load_registry,
    load_root_lexicon,
    load_rules,
    normalize_text,
    segment_token,
    split_sentences,
    suggest_tags,
)
from ckltag.morphology import seed_affix_path, seed_lexicon_path
from ckltag.suggestion import auto_annotate, seed_rules_path

WORDS = ["بکوژ", "بەهێز", "ئاسنگەر", "هەڵگرتنەوە", "نانەکە", "خویندن", "هاتن"]
SENTENCE = "جل و بەرگ"


def main():
    registry = load_registry()
    lexicon = load_root_lexicon(seed_lexicon_path(), registry)
    affixes = load_affix_table(seed_affix_path(), registry)
    rules = load_rules(seed_rules_path(), registry)

    print("== word decomposition and top suggestions ==")
    for word in WORDS:
        segs = segment_token(word, lexicon, affixes)
        morphs = " + ".join(f"{m.surface}/{m.role.value}" for m in segs[0].morphs)
        nt = normalize_text(word)
        sentence = split_sentences(nt)[0]
        token = sentence.tokens[0]
        ranked = suggest_tags(token, None, None, segs, lexicon, registry, rules)
        print(f"{word}\t{morphs}\ttop: {ranked[0].tag} ({ranked[0].score:.2f}, {ranked[0].rule_id})")

    print()
    print(f"== sentence: {SENTENCE} ==")
    sentence = split_sentences(normalize_text(SENTENCE))[0]
    for index, scored in auto_annotate(sentence, lexicon, affixes, registry, rules):
        token = sentence.tokens[index]
        print(f"{token.surface}\t{scored.tag}\t{scored.score:.2f}\t{scored.explanation}")


if __name__ == "__main__":
    main()
