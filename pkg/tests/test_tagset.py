import pytest
from hypothesis import given
from hypothesis import strategies as st

from ckltag import TagCategory, load_registry
from ckltag.errors import UnknownTagError
from ckltag.tagset import UD_UPOS_INVENTORY

from table1_expected import EXPECTED_TABLE1

CATEGORY_COUNTS = {
    "Noun": 17,
    "Pronoun": 13,
    "Particle": 11,
    "Adjective": 16,
    "Adverb": 12,
    "Numeral": 6,
    "Verb": 14,
    "Gerund": 8,
    "Unknown": 1,
}

# source UD-mapping table groups, abbreviations as printed there
TABLE2_GROUPS = {
    "NOUN": "N-S, N-EXT, N-COMP, N-PROP, N-COM, N-DNP, N-INP, N-SG, N-PL, N-M, N-F, N-GN, N-DUAL, N-CN, N-AB, N-COLL, N-SUB",
    "PRON": "PR-DEM, PR-INT, PR-INDEF, PR-REF, PR-POSS, PR-INDEP, PR-CLIT, PR-QUAN, PR-DEF, PR-S, PR-COMP, PR-EXT, PR-NEG",
    "ADJ": "ADJ-CLR, ADJ-DESC, ADJ-SUPL, ADJ-COMP, ADJ-QUANT, ADJ-S, ADJ-EXT, ADJ-DIM, ADJ-REL, ADJ-REL2, ADJ-COMPOUND, ADJ-INDEF, ADJ-BASE, ADJ-PPP, ADJ-DEG, ADJ-ATT",
    "ADV": "ADV-S, ADV-COMP, ADV-EXT, ADV-CONJ, ADV-MAN, ADV-QUANT, ADV-NEG, ADV-EMPH, ADV-REP, ADV-CAUS, ADV-LOC, ADV-TIME",
    "NUM": "NUM-CARD, NUM-EXT, NUM-COMP, NUM-ORD, NUM-FRAC, NUM-S",
    "VERB": "V-S, V-EXT, V-COMP, V-PST, V-NPST, V-NEG, V-INCOMP, V-COMPLETE, V-AFF, V-DECL, V-INFORM, V-IMPER, V-PERF, V-IMPERF",
    "GRD": "GRD-D, GRD-W, GRD-Y, GRD-T, GRD-A, GRD-S, GRD-EXT, GRD-COMP",
    # the source prints PART-COND twice and omits PART-CONJ; see the particle
    # reconciliation test below
    "PART": "PART-COND, PART-TOP, PART-ADV, PART-LOC, PART-COND, PART-REQ, PART-SURP, PART-EXCL, PART-POL, PART-EMPH, PART-INT",
}


def test_registry_has_98_tags(registry):
    assert len(registry) == 98


def test_category_counts(registry):
    counts = {}
    for desc in registry:
        counts[desc.category.value] = counts.get(desc.category.value, 0) + 1
    assert counts == CATEGORY_COUNTS


def test_full_table_matches_frozen_copy(registry):
    for index, category, english, abbrev, kurdish in EXPECTED_TABLE1:
        desc = registry.lookup(abbrev.upper(), resolve_aliases=False)
        assert desc.table_index == index
        assert desc.english_name == english
        assert desc.kurdish_name == kurdish
        expected_category = "Particle" if category.startswith("Particle") else category
        assert desc.category.value == expected_category


def test_spot_rows(registry):
    # hand-typed row facts, independent of the frozen copy
    assert registry.lookup("N-S").english_name == "Simple Noun"
    assert registry.lookup("N-S").table_index == 1
    assert registry.lookup("N-PROP").english_name == "Proper Noun"
    assert registry.lookup("N-PROP").table_index == 4
    assert registry.lookup("N-DNP").english_name == "Definite Noun Phrase"
    assert registry.lookup("N-INP").english_name == "Indefinite Noun Phrase"
    assert registry.lookup("PART-CONJ").table_index == 34
    assert registry.lookup("ADJ-SIMPLE").table_index == 42
    assert registry.lookup("V-PAST").table_index == 79
    assert registry.lookup("V-NONPAST").table_index == 80
    assert registry.lookup("V-COMPLETE").table_index == 83
    assert registry.lookup("V-INCOMPLETE").table_index == 84
    gerunds = [t.abbrev for t in registry.tags_in_category(TagCategory.GERUND)]
    assert gerunds == ["GRD-D", "GRD-W", "GRD-Y", "GRD-T", "GRD-A", "GRD-S", "GRD-EXT", "GRD-COMP"]
    assert [t.table_index for t in registry.tags_in_category(TagCategory.GERUND)] == list(range(90, 98))


def test_table_index_bijection(registry):
    indices = sorted(d.table_index for d in registry if d.abbrev != "UNK")
    assert indices == list(range(1, 98))
    assert registry.lookup("UNK").table_index == 0


def test_numeral_category_listing(registry):
    nums = [t.abbrev for t in registry.tags_in_category(TagCategory.NUMERAL)]
    assert nums == ["NUM-S", "NUM-COMP", "NUM-EXT", "NUM-CARD", "NUM-FRAC", "NUM-ORD"]


def test_unknown_category_listing(registry):
    assert [t.abbrev for t in registry.tags_in_category(TagCategory.UNKNOWN)] == ["UNK"]


def test_union_of_categories_is_whole_registry(registry):
    union = []
    for category in TagCategory:
        union.extend(t.abbrev for t in registry.tags_in_category(category))
    assert len(union) == 98
    assert len(set(union)) == 98
    assert set(union) == {t.abbrev for t in registry}


def test_category_kurdish_labels(registry):
    assert TagCategory.NOUN.kurdish_name == "ناو"
    assert TagCategory.PRONOUN.kurdish_name == "جیناو"
    assert TagCategory.GERUND.kurdish_name == "چاوگ"
    assert TagCategory.PARTICLE.kurdish_name == "نامراز"


def test_lookup_with_and_without_aliases(registry):
    desc = registry.lookup("V-PST", resolve_aliases=True)
    assert desc.abbrev == "V-PAST"
    with pytest.raises(UnknownTagError):
        registry.lookup("V-PST", resolve_aliases=False)
    assert registry.lookup("n-s").abbrev == "N-S"  # case-insensitive input


def test_lookup_unknown(registry):
    with pytest.raises(UnknownTagError):
        registry.lookup("N-XYZ")


def test_resolve_alias_table(registry):
    assert registry.resolve_alias("N-PROP") == "N-PROP"
    assert registry.resolve_alias("ADJ-S") == "ADJ-SIMPLE"
    assert registry.resolve_alias("V-NPST") == "V-NONPAST"
    assert registry.resolve_alias("V-COMP") == "V-COMPOUND"
    assert registry.resolve_alias("V-NEG") == "V-NEG2"
    assert registry.resolve_alias("V-INCOMP") == "V-INCOMPLETE"
    assert registry.resolve_alias("V-COMplete") == "V-COMPLETE"  # case only
    with pytest.raises(UnknownTagError):
        registry.resolve_alias("NOPE")


def test_resolve_alias_idempotent(registry):
    candidates = [t.abbrev for t in registry] + list(registry.aliases)
    for abbrev in candidates:
        once = registry.resolve_alias(abbrev)
        assert registry.resolve_alias(once) == once


def test_no_alias_shadows_canonical(registry):
    canonical = {t.abbrev for t in registry}
    assert not (set(registry.aliases) & canonical)
    assert all(target in canonical for target in registry.aliases.values())


def test_ud_mapping_modes(registry):
    assert registry.ud_upos_for("PR-DEM", "paper") == "PRON"
    assert registry.ud_upos_for("GRD-D", "paper") == "GRD"
    assert registry.ud_upos_for("GRD-D", "strict") == "VERB"
    assert registry.ud_upos_for("UNK", "paper") == "X"
    assert registry.ud_upos_for("UNK", "strict") == "X"
    with pytest.raises(ValueError):
        registry.ud_upos_for("N-S", "loose")


def test_ud_mapping_total_and_category_coherent(registry):
    by_category = {
        "Noun": "NOUN",
        "Pronoun": "PRON",
        "Adjective": "ADJ",
        "Adverb": "ADV",
        "Numeral": "NUM",
        "Verb": "VERB",
        "Gerund": "GRD",
        "Particle": "PART",
        "Unknown": "X",
    }
    for desc in registry:
        paper = registry.ud_upos_for(desc.abbrev, "paper")
        strict = registry.ud_upos_for(desc.abbrev, "strict")
        assert paper == by_category[desc.category.value]
        assert strict in UD_UPOS_INVENTORY


def test_table2_groups_agree_with_categories(registry):
    seen = set()
    for ud_label, printed in TABLE2_GROUPS.items():
        for raw in printed.split(","):
            desc = registry.lookup(raw.strip())
            assert registry.ud_upos_for(desc.abbrev, "paper") == ud_label
            seen.add(desc.abbrev)
    # the particle row's duplicate hides PART-CONJ; everything else is covered
    assert {t.abbrev for t in registry} - seen == {"PART-CONJ", "UNK"}


def test_review_flags_mark_damaged_kurdish_names(registry):
    # rows whose Kurdish name carries letters outside Kurdish orthography
    assert registry.lookup("ADJ-SIMPLE").kurdish_needs_review  # ط in the name
    assert registry.lookup("V-COMPLETE").kurdish_needs_review  # ھ in the name
    assert not registry.lookup("N-S").kurdish_needs_review
    assert not registry.lookup("GRD-D").kurdish_needs_review
    flagged = sum(1 for t in registry if t.kurdish_needs_review)
    assert 0 < flagged < 98


def test_category_tree_shape(registry):
    tree = registry.tree
    assert tree.root.label == "CKL-POS"
    assert len(tree.root.children) == 9
    assert tree.leaf_count() == 98
    for category_node in tree.root.children:
        for leaf in category_node.children:
            assert leaf.tag is not None
            assert leaf.children == ()  # depth is exactly two


def test_tree_serializable(registry):
    import json

    payload = json.dumps(registry.tree.to_dict(), ensure_ascii=False)
    assert '"CKL-POS"' in payload


def test_load_registry_deterministic(registry):
    again = load_registry()
    assert [t.abbrev for t in again] == [t.abbrev for t in registry]
    assert again.tags == registry.tags
    assert dict(again.aliases) == dict(registry.aliases)


def test_registry_is_immutable(registry):
    with pytest.raises(Exception):
        registry.aliases["X"] = "N-S"  # type: ignore[index]
    with pytest.raises(Exception):
        registry.tags[0].abbrev = "ZZZ"  # type: ignore[misc]


@given(st.text(min_size=1, max_size=12))
def test_resolve_alias_never_invents_tags(random_abbrev):
    registry = load_registry()
    try:
        resolved = registry.resolve_alias(random_abbrev)
    except UnknownTagError:
        return
    assert resolved in registry
