import random

import pytest

from ckltag.errors import LoadError, UnknownTagError
from ckltag.morphology import segment_token
from ckltag.normalize import normalize_text
from ckltag.suggestion import (
    BaseScores,
    build_default_rules,
    load_rules,
    suggest_tags,
    auto_annotate,
)
from ckltag.tokenizer import Token, TokenKind, split_sentences

GERUND_EXAMPLES = {
    # verb bases from the source description, one per subtype
    "خویندن": "GRD-D",
    "چون": "GRD-W",
    "کریین": "GRD-Y",
    "هاتن": "GRD-T",
    "شکان": "GRD-A",
}


def word(surface, index=0):
    return Token(surface=surface, start=0, end=len(surface), index=index, kind=TokenKind.WORD)


def suggest(surface, registry, lexicon, affixes, rules, left=None, right=None):
    token = word(surface)
    segs = segment_token(token, lexicon, affixes)
    return suggest_tags(token, left, right, segs, lexicon, registry, rules)


def test_definite_suffix_suggests_definite_noun(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("نانەکە", registry, seed_lexicon, seed_affixes, default_rules)
    assert ranked[0].tag == "N-DNP"
    assert ranked[0].rule_id == "suffix-definite"


def test_number_token_forced_to_simple_number(registry, seed_lexicon, seed_affixes, default_rules):
    token = Token(surface="١٢", start=0, end=2, index=0, kind=TokenKind.NUMBER)
    ranked = suggest_tags(token, None, None, [], seed_lexicon, registry, default_rules)
    assert ranked[0].tag == "NUM-S"


def test_gerund_examples_top_ranked(registry, seed_lexicon, seed_affixes, default_rules):
    for surface, expected in GERUND_EXAMPLES.items():
        ranked = suggest(surface, registry, seed_lexicon, seed_affixes, default_rules)
        assert ranked[0].tag == expected, surface


def test_modern_spelling_buy_fires_same_gerund(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("کڕین", registry, seed_lexicon, seed_affixes, default_rules)
    assert ranked[0].tag == "GRD-Y"


def test_gerund_shape_rule_alone(registry, seed_affixes, default_rules):
    # empty lexicon: only the shape cue fires
    from ckltag.morphology import RootLexicon

    empty = RootLexicon(entries={})
    for surface, expected in GERUND_EXAMPLES.items():
        ranked = suggest(surface, registry, empty, seed_affixes, default_rules)
        assert ranked[0].tag == expected
        assert ranked[0].rule_id.startswith("gerund-ending-")


def test_short_tokens_exempt_from_gerund_rule(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("ین", registry, seed_lexicon, seed_affixes, default_rules)
    assert all(not s.rule_id.startswith("gerund-") for s in ranked)


def test_conjunction_between_words(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest(
        "و",
        registry,
        seed_lexicon,
        seed_affixes,
        default_rules,
        left=word("جل"),
        right=word("بەرگ", 2),
    )
    assert ranked[0].tag == "PART-CONJ"


def test_conjunction_requires_word_neighbors(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("و", registry, seed_lexicon, seed_affixes, default_rules)
    assert ranked[0].tag == "UNK"


def test_nonsense_token_gets_unk_only(registry, seed_affixes, default_rules):
    from ckltag.morphology import RootLexicon

    empty = RootLexicon(entries={})
    ranked = suggest("qqq", registry, empty, seed_affixes, default_rules)
    assert [(s.tag, s.score) for s in ranked] == [("UNK", 0.05)]


def test_unk_always_present(registry, seed_lexicon, seed_affixes, default_rules):
    for surface in ["نانەکە", "خویندن", "نان", "یەک"]:
        ranked = suggest(surface, registry, seed_lexicon, seed_affixes, default_rules)
        assert "UNK" in {s.tag for s in ranked}
        assert ranked  # non-empty


def test_affix_hints_drive_derived_words(registry, seed_lexicon, seed_affixes, default_rules):
    cases = {
        "بکوژ": "V-IMPER",  # imperative prefix
        "بەهێز": "ADJ-EXT",  # adjectival prefix
        "ئاسنگەر": "N-EXT",  # agent suffix
        "هەڵگرتنەوە": "V-COMPOUND",  # compound affix pair
    }
    for surface, expected in cases.items():
        ranked = suggest(surface, registry, seed_lexicon, seed_affixes, default_rules)
        assert ranked[0].tag == expected, surface
        assert ranked[0].rule_id == "affix-hints"


def test_specific_suffix_rule_outranks_hints(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("نانەکە", registry, seed_lexicon, seed_affixes, default_rules)
    top = ranked[0]
    assert (top.tag, top.rule_id) == ("N-DNP", "suffix-definite")


def test_lexicon_passthrough(registry, seed_lexicon, seed_affixes, default_rules):
    ranked = suggest("نان", registry, seed_lexicon, seed_affixes, default_rules)
    assert ranked[0].tag == "N-S"
    assert ranked[0].rule_id == "lexicon-tags"
    assert ranked[0].score == 0.9


def test_all_outputs_resolve_in_registry(registry, seed_lexicon, seed_affixes, seed_rules):
    rng = random.Random(5150)
    alphabet = "ئابجچدرزسشکگلمنهەوی"
    for _ in range(300):
        surface = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 10)))
        ranked = suggest(surface, registry, seed_lexicon, seed_affixes, seed_rules)
        for scored in ranked:
            assert registry.lookup(scored.tag).abbrev == scored.tag
            assert 0.0 <= scored.score <= 1.0
            assert scored.rule_id


def test_determinism(registry, seed_lexicon, seed_affixes, seed_rules):
    rng = random.Random(99)
    alphabet = "ئابجچدرزسشکگلمنهەوی"
    for _ in range(100):
        surface = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 10)))
        first = suggest(surface, registry, seed_lexicon, seed_affixes, seed_rules)
        second = suggest(surface, registry, seed_lexicon, seed_affixes, seed_rules)
        assert first == second


def test_uniform_scaling_keeps_argmax(registry, seed_lexicon, seed_affixes):
    for scale in (1.0, 0.5, 0.1):
        scores = BaseScores(
            lexicon=0.9 * scale,
            closed_class=0.8 * scale,
            affix=0.7 * scale,
            context=0.7 * scale,
            shape=0.6 * scale,
            number=0.95 * scale,
            unknown=0.05 * scale,
        )
        rules = build_default_rules(scores)
        for surface in ["نانەکە", "خویندن", "نان"]:
            token = word(surface)
            segs = segment_token(token, seed_lexicon, seed_affixes)
            ranked = suggest_tags(token, None, None, segs, seed_lexicon, registry, rules, scores)
            baseline = suggest(surface, registry, seed_lexicon, seed_affixes, build_default_rules())
            assert ranked[0].tag == baseline[0].tag


def test_default_ruleset_size():
    assert len(build_default_rules()) >= 8


def test_every_rule_id_traceable_to_loaded_rule(registry, seed_lexicon, seed_affixes, seed_rules):
    import random

    loaded_ids = {r.id for r in seed_rules}
    rng = random.Random(2024)
    alphabet = "ئابجچدرزسشکگلمنهەوی"
    for _ in range(200):
        surface = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 8)))
        for scored in suggest(surface, registry, seed_lexicon, seed_affixes, seed_rules):
            assert scored.rule_id in loaded_ids


def test_rule_ids_unique(seed_rules):
    ids = [r.id for r in seed_rules]
    assert len(ids) == len(set(ids))


def test_load_rules_rejects_unknown_tag(tmp_path, registry):
    path = tmp_path / "rules.tsv"
    path.write_text("bogus\tsurface=x\tN-XYZ:0.5\n", encoding="utf-8")
    with pytest.raises(UnknownTagError):
        load_rules(path, registry)


def test_load_rules_rejects_duplicate_id(tmp_path, registry):
    path = tmp_path / "rules.tsv"
    path.write_text("dup\tsurface=x\tN-S:0.5\ndup\tsurface=y\tN-S:0.5\n", encoding="utf-8")
    with pytest.raises(LoadError):
        load_rules(path, registry)


def test_load_rules_rejects_bad_atom(tmp_path, registry):
    path = tmp_path / "rules.tsv"
    path.write_text("bad\tshape=x\tN-S:0.5\n", encoding="utf-8")
    with pytest.raises(LoadError):
        load_rules(path, registry)


def test_rule_file_atoms(tmp_path, registry, seed_lexicon, seed_affixes):
    path = tmp_path / "rules.tsv"
    path.write_text(
        "demo-suffix\tsuffix=ەکە kind=word\tN-DNP:0.95\n"
        "demo-left\tsurface=ب left.surface=ا\tPART-TOP:0.5\n"
        "demo-lexicon\tlexicon-tag∈N-S|N-CN\tN-COM:0.45\n",
        encoding="utf-8",
    )
    rules = load_rules(path, registry)
    ranked = suggest("نانەکە", registry, seed_lexicon, seed_affixes, rules)
    assert ranked[0].rule_id == "demo-suffix"
    assert ranked[0].score == 0.95

    ranked = suggest("ب", registry, seed_lexicon, seed_affixes, rules, left=word("ا"))
    assert any(s.rule_id == "demo-left" for s in ranked)

    ranked = suggest("نان", registry, seed_lexicon, seed_affixes, rules)
    assert any(s.rule_id == "demo-lexicon" for s in ranked)


def test_closed_class_rules_from_seed_file(registry, seed_lexicon, seed_affixes, seed_rules):
    ranked = suggest("لە", registry, seed_lexicon, seed_affixes, seed_rules)
    assert ranked[0].tag == "PART-LOC"


def test_auto_annotate_empty_and_phrase(registry, seed_lexicon, seed_affixes, default_rules):
    spans = split_sentences(normalize_text(""))
    assert spans == []

    spans = split_sentences(normalize_text("جل و بەرگ"))
    results = auto_annotate(spans[0], seed_lexicon, seed_affixes, registry, default_rules)
    assert len(results) == 3
    assert results[1][1].tag == "PART-CONJ"
    by_index = dict(results)
    assert set(by_index) == {0, 1, 2}
    for _, scored in results:
        assert registry.lookup(scored.tag)
