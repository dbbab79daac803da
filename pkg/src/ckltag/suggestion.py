"""Deterministic, explainable tag suggestion over tokens in context.

Every rule is a named predicate over (token, top segmentation, neighbor
tokens, lexicon) that emits candidate tags with fixed base scores. Scores
rank candidates; they are not probabilities and never combine across rules:
when several rules emit the same tag, the best score wins. The UNK fallback
is always appended, so the ranked list is never empty and a human annotator
always has something to confirm or override.

Built-in rules cover the morphology-driven cues (definite/indefinite/plural
suffixes, the five gerund endings, digit runs, lexicon pass-through, and the
standalone transition word between two words). User rule files add
surface-level rules via a small pattern language; see load_rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from .errors import LoadError
from .morphology import (
    AffixTable,
    Morph,
    MorphRole,
    RootLexicon,
    ScoringWeights,
    Segmentation,
    segment_token,
)
from .tagset import TagRegistry
from .tokenizer import SentenceSpan, Token, TokenKind

__all__ = [
    "ScoredTag",
    "Rule",
    "RuleContext",
    "BaseScores",
    "build_default_rules",
    "load_rules",
    "seed_rules_path",
    "suggest_tags",
    "auto_annotate",
]

GERUND_ENDINGS = {
    "د": "GRD-D",  # د
    "و": "GRD-W",  # و
    "ی": "GRD-Y",  # ی
    "ت": "GRD-T",  # ت
    "ا": "GRD-A",  # ا
}
NOON = "ن"  # ن
WAW = "و"  # و, the transition word between coordinated words

DEFINITE_SUFFIX = "ەکە"
INDEFINITE_SUFFIX = "ێک"
PLURAL_SUFFIXES = ("ان", "ەکان")


@dataclass(frozen=True)
class BaseScores:
    """Rule base scores; tunable configuration, not behavior."""

    lexicon: float = 0.9
    closed_class: float = 0.8
    affix: float = 0.7
    context: float = 0.7
    affix_hint: float = 0.65
    shape: float = 0.6
    number: float = 0.95
    unknown: float = 0.05


@dataclass(frozen=True)
class ScoredTag:
    tag: str
    score: float
    rule_id: str
    explanation: str

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score out of range: {self.score}")


@dataclass(frozen=True)
class RuleContext:
    token: Token
    segmentation: Segmentation  # top-ranked analysis
    left: Optional[Token]
    right: Optional[Token]
    lexicon: RootLexicon


@dataclass(frozen=True)
class Rule:
    id: str
    matches: Callable[[RuleContext], bool] = field(repr=False)
    emits: tuple[tuple[str, float], ...]
    explain: Callable[[RuleContext], str] = field(repr=False)


def _suffix_surfaces(seg: Segmentation) -> tuple[str, ...]:
    return tuple(m.surface for m in seg.morphs if m.role is MorphRole.SUFFIX)


def _prefix_surfaces(seg: Segmentation) -> tuple[str, ...]:
    return tuple(m.surface for m in seg.morphs if m.role is MorphRole.PREFIX)


def _gerund_tag(surface: str) -> str | None:
    # word-final letter before ن decides the gerund subtype; very short
    # tokens are exempt
    if len(surface) < 3 or surface[-1] != NOON:
        return None
    return GERUND_ENDINGS.get(surface[-2])


def build_default_rules(scores: BaseScores = BaseScores()) -> list[Rule]:
    rules: list[Rule] = []

    def add(rule_id, matches, emits, explain):
        rules.append(Rule(id=rule_id, matches=matches, emits=tuple(emits), explain=explain))

    add(
        "suffix-definite",
        lambda ctx: DEFINITE_SUFFIX in _suffix_surfaces(ctx.segmentation),
        [("N-DNP", scores.affix)],
        lambda ctx: f"definite suffix {DEFINITE_SUFFIX} in top analysis",
    )
    add(
        "suffix-indefinite",
        lambda ctx: INDEFINITE_SUFFIX in _suffix_surfaces(ctx.segmentation),
        [("N-INP", scores.affix)],
        lambda ctx: f"indefinite suffix {INDEFINITE_SUFFIX} in top analysis",
    )
    for i, plural in enumerate(PLURAL_SUFFIXES):
        add(
            f"suffix-plural-{i + 1}",
            lambda ctx, plural=plural: plural in _suffix_surfaces(ctx.segmentation),
            [("N-PL", scores.affix)],
            lambda ctx, plural=plural: f"plural suffix {plural} in top analysis",
        )
    for ending, tag in GERUND_ENDINGS.items():
        add(
            f"gerund-ending-{tag[-1].lower()}",
            lambda ctx, e=ending: ctx.token.kind is TokenKind.WORD
            and _gerund_tag(ctx.token.surface) == GERUND_ENDINGS[e],
            [(tag, scores.shape)],
            lambda ctx, e=ending: f"verb-base shape: ends in {e}{NOON}",
        )
    add(
        "digit-run",
        lambda ctx: ctx.token.kind is TokenKind.NUMBER,
        [("NUM-S", scores.number)],
        lambda ctx: "digit run",
    )
    add(
        "lexicon-tags",
        lambda ctx: ctx.lexicon.get(ctx.token.surface) is not None,
        [("*lexicon*", scores.lexicon)],  # expanded at evaluation time
        lambda ctx: f"lexicon entry for {ctx.token.surface}",
    )
    add(
        "affix-hints",
        lambda ctx: any(m.tag_hints for m in ctx.segmentation.morphs),
        [("*affix-hints*", scores.affix_hint)],  # expanded at evaluation time
        lambda ctx: "tag hints of the affixes in the top analysis: "
        + ", ".join(m.surface for m in ctx.segmentation.morphs if m.tag_hints),
    )
    add(
        "transition-word",
        lambda ctx: ctx.token.surface == WAW
        and ctx.left is not None
        and ctx.right is not None
        and ctx.left.kind is TokenKind.WORD
        and ctx.right.kind is TokenKind.WORD,
        [("PART-CONJ", scores.context)],
        lambda ctx: f"standalone {WAW} joining two words (transition word)",
    )
    add(
        "fallback-unknown",
        lambda ctx: True,
        [("UNK", scores.unknown)],
        lambda ctx: "fallback: outside the tagset or needs human review",
    )
    return rules


def seed_rules_path() -> Path:
    from importlib.resources import files

    return Path(str(files("ckltag").joinpath("data/rules.tsv")))


def _compile_atom(atom: str, lineno: int) -> Callable[[RuleContext], bool]:
    if atom.startswith("suffix="):
        value = atom[len("suffix=") :]
        return lambda ctx: value in _suffix_surfaces(ctx.segmentation)
    if atom.startswith("prefix="):
        value = atom[len("prefix=") :]
        return lambda ctx: value in _prefix_surfaces(ctx.segmentation)
    if atom.startswith("surface="):
        value = atom[len("surface=") :]
        return lambda ctx: ctx.token.surface == value
    if atom.startswith("kind="):
        value = atom[len("kind=") :]
        kinds = {k.value for k in TokenKind}
        if value not in kinds:
            raise LoadError(f"unknown token kind {value!r}", lineno)
        return lambda ctx: ctx.token.kind.value == value
    if atom.startswith("left.surface="):
        value = atom[len("left.surface=") :]
        return lambda ctx: ctx.left is not None and ctx.left.surface == value
    if atom.startswith("lexicon-tag∈"):
        wanted = set(atom[len("lexicon-tag∈") :].split("|"))
        def check(ctx: RuleContext, wanted=frozenset(wanted)) -> bool:
            entry = ctx.lexicon.get(ctx.token.surface)
            return entry is not None and bool(wanted & set(entry.tags))
        return check
    raise LoadError(f"unknown pattern atom {atom!r}", lineno)


def load_rules(
    source: Union[str, Path, None] = None,
    registry: TagRegistry | None = None,
    scores: BaseScores = BaseScores(),
) -> list[Rule]:
    """Built-in default rules plus, when source is given, rules parsed from
    a rule file. Duplicate ids and unresolvable tags fail the load."""
    rules = build_default_rules(scores)
    seen = {r.id for r in rules}
    if source is not None:
        with open(source, encoding="utf-8") as f:
            for lineno, raw in enumerate(f, start=1):
                line = raw.rstrip("\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 3:
                    raise LoadError("expected id, pattern, emit columns", lineno)
                rule_id, pattern_src, emit_src = (c.strip() for c in cols)
                if not rule_id:
                    raise LoadError("empty rule id", lineno)
                if rule_id in seen:
                    raise LoadError(f"duplicate rule id {rule_id!r}", lineno)
                seen.add(rule_id)
                atoms = [_compile_atom(a, lineno) for a in pattern_src.split() if a]
                if not atoms:
                    raise LoadError("empty pattern", lineno)
                emits = []
                for part in emit_src.split(","):
                    part = part.strip()
                    if not part:
                        continue
                    tag, _, score_src = part.partition(":")
                    try:
                        score = float(score_src) if score_src else scores.affix
                    except ValueError:
                        raise LoadError(f"bad score in {part!r}", lineno)
                    if registry is not None:
                        tag = registry.resolve_alias(tag)
                    emits.append((tag.upper(), score))
                if not emits:
                    raise LoadError("rule emits nothing", lineno)
                rules.append(
                    Rule(
                        id=rule_id,
                        matches=lambda ctx, atoms=tuple(atoms): all(a(ctx) for a in atoms),
                        emits=tuple(emits),
                        explain=lambda ctx, p=pattern_src: f"matched pattern: {p}",
                    )
                )
    if registry is not None:
        for rule in rules:
            for tag, _ in rule.emits:
                if not (tag.startswith("*") and tag.endswith("*")):
                    registry.lookup(tag)
    return rules


def suggest_tags(
    token: Token,
    left: Optional[Token],
    right: Optional[Token],
    segmentations: Sequence[Segmentation],
    lexicon: RootLexicon,
    registry: TagRegistry,
    rules: Sequence[Rule],
    scores: BaseScores = BaseScores(),
) -> list[ScoredTag]:
    """Ranked tag candidates for one token; always ends with (or consists of)
    the UNK fallback."""
    if not segmentations:
        segmentations = [Segmentation(morphs=(Morph(token.surface, MorphRole.STEM),), score=0.0)]
    ctx = RuleContext(
        token=token, segmentation=segmentations[0], left=left, right=right, lexicon=lexicon
    )
    best: dict[str, ScoredTag] = {}
    for rule in rules:
        if not rule.matches(ctx):
            continue
        emits: list[tuple[str, float]] = []
        for tag, score in rule.emits:
            if tag == "*lexicon*":
                entry = lexicon.get(token.surface)
                if entry is not None:
                    emits.extend((t, score) for t in entry.tags)
            elif tag == "*affix-hints*":
                for morph in ctx.segmentation.morphs:
                    emits.extend((t, score) for t in morph.tag_hints)
            else:
                emits.append((tag, score))
        for tag, score in emits:
            canonical = registry.resolve_alias(tag)
            candidate = ScoredTag(
                tag=canonical,
                score=min(1.0, max(0.0, score)),
                rule_id=rule.id,
                explanation=rule.explain(ctx),
            )
            incumbent = best.get(canonical)
            if (
                incumbent is None
                or candidate.score > incumbent.score
                or (candidate.score == incumbent.score and candidate.rule_id < incumbent.rule_id)
            ):
                best[canonical] = candidate
    if "UNK" not in best:
        # guarantees totality even for a custom rule list without the
        # built-in fallback rule
        best["UNK"] = ScoredTag(
            tag="UNK",
            score=scores.unknown,
            rule_id="fallback-unknown",
            explanation="fallback: outside the tagset or needs human review",
        )
    return sorted(best.values(), key=lambda s: (-s.score, s.tag))


def auto_annotate(
    sentence: SentenceSpan,
    lexicon: RootLexicon,
    affixes: AffixTable,
    registry: TagRegistry,
    rules: Sequence[Rule],
    weights: ScoringWeights = ScoringWeights(),
    scores: BaseScores = BaseScores(),
) -> list[tuple[int, ScoredTag]]:
    """Top-1 suggestion for every token of a sentence, in token order."""
    out: list[tuple[int, ScoredTag]] = []
    tokens = sentence.tokens
    for i, token in enumerate(tokens):
        left = tokens[i - 1] if i > 0 else None
        right = tokens[i + 1] if i + 1 < len(tokens) else None
        segs = segment_token(token, lexicon, affixes, weights=weights)
        ranked = suggest_tags(token, left, right, segs, lexicon, registry, rules, scores)
        out.append((token.index, ranked[0]))
    return out
