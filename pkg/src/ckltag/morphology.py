"""Word decomposition into roots, stems, affixes and compound affix pairs.

A word token is analyzed as

    plain-prefix* [pair-prefix] CORE [pair-suffix] plain-suffix*

where CORE comes from the root lexicon (role Root when the lexicon marks it
bound, Stem when free-standing) and affixes come from the affix table. A
compound affix is a prefix+suffix pair that must match jointly and sits
directly against the core; at most one pair participates in an analysis, and
plain affixes stack outside it. Stacking depth is capped at 2 prefixes and
3 suffixes. Mixing plain affixes with a compound pair is allowed but noted
on the segmentation, since that combination is linguistically unvetted.

When nothing lexicon-backed fits, the whole token is returned as a bare
stem with score 0 so callers never see an empty analysis list.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Union

from .errors import LoadError, UnknownTagError
from .tagset import TagRegistry
from .tokenizer import Token

__all__ = [
    "MorphRole",
    "Morph",
    "Segmentation",
    "AffixTable",
    "LexiconEntry",
    "RootLexicon",
    "ScoringWeights",
    "load_affix_table",
    "load_root_lexicon",
    "seed_affix_path",
    "seed_lexicon_path",
    "segment_token",
    "root_of",
    "MAX_PREFIXES",
    "MAX_SUFFIXES",
]

MAX_PREFIXES = 2
MAX_SUFFIXES = 3


class MorphRole(enum.Enum):
    ROOT = "root"
    PREFIX = "prefix"
    SUFFIX = "suffix"
    COMPOUND_PREFIX_PART = "compound-prefix-part"
    COMPOUND_SUFFIX_PART = "compound-suffix-part"
    TRANSITION = "transition"
    STEM = "stem"


CORE_ROLES = (MorphRole.ROOT, MorphRole.STEM)


@dataclass(frozen=True)
class Morph:
    surface: str
    role: MorphRole
    tag_hints: tuple[str, ...] = ()  # from the affix table entry, if any

    def __post_init__(self):
        if not self.surface:
            raise ValueError("morph surface must be non-empty")


@dataclass(frozen=True)
class Segmentation:
    morphs: tuple[Morph, ...]
    score: float
    notes: tuple[str, ...] = ()

    def surface(self) -> str:
        return "".join(m.surface for m in self.morphs)

    def core(self) -> Morph:
        for m in self.morphs:
            if m.role in CORE_ROLES:
                return m
        raise ValueError("segmentation has no core morph")


@dataclass(frozen=True)
class AffixTable:
    prefixes: Mapping[str, tuple[str, ...]]
    suffixes: Mapping[str, tuple[str, ...]]
    compound_pairs: Mapping[tuple[str, str], tuple[str, ...]]


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    bound: bool  # bound core = Root, free-standing = Stem
    tags: tuple[str, ...]
    weight: float = 1.0


@dataclass(frozen=True)
class RootLexicon:
    entries: Mapping[str, LexiconEntry]
    max_weight: float = field(default=1.0)

    def __contains__(self, surface: str) -> bool:
        return surface in self.entries

    def get(self, surface: str) -> LexiconEntry | None:
        return self.entries.get(surface)


@dataclass(frozen=True)
class ScoringWeights:
    """Ranking signal: attested-core weight vs analysis shape (fewer affixes
    score higher). Tunable configuration, not fixed behavior."""

    w_lex: float = 0.7
    w_shape: float = 0.3


def seed_affix_path() -> Path:
    from importlib.resources import files

    return Path(str(files("ckltag").joinpath("data/affixes.tsv")))


def seed_lexicon_path() -> Path:
    from importlib.resources import files

    return Path(str(files("ckltag").joinpath("data/lexicon.tsv")))


def _check_hints(hints: Iterable[str], registry: TagRegistry | None, line: int) -> tuple[str, ...]:
    out = []
    for hint in hints:
        hint = hint.strip()
        if not hint:
            continue
        if registry is not None:
            out.append(registry.resolve_alias(hint))
        else:
            out.append(hint.upper())
    return tuple(out)


def load_affix_table(path: Union[str, Path], registry: TagRegistry | None = None) -> AffixTable:
    """Read a tab-separated affix file.

    Columns: kind(prefix|suffix|compound), surface, [pair surface for
    compound], optional comma-separated tag hints. '#' starts a comment.
    """
    prefixes: dict[str, tuple[str, ...]] = {}
    suffixes: dict[str, tuple[str, ...]] = {}
    pairs: dict[tuple[str, str], tuple[str, ...]] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            kind = cols[0].strip()
            try:
                if kind in ("prefix", "suffix"):
                    if len(cols) < 2 or not cols[1]:
                        raise LoadError("missing affix surface", lineno)
                    hints = _check_hints(cols[2].split(",") if len(cols) > 2 else (), registry, lineno)
                    target = prefixes if kind == "prefix" else suffixes
                    target[cols[1]] = hints
                elif kind == "compound":
                    if len(cols) < 3 or not cols[1] or not cols[2]:
                        raise LoadError("compound needs prefix and suffix surfaces", lineno)
                    hints = _check_hints(cols[3].split(",") if len(cols) > 3 else (), registry, lineno)
                    pairs[(cols[1], cols[2])] = hints
                else:
                    raise LoadError(f"unknown affix kind {kind!r}", lineno)
            except UnknownTagError as exc:
                raise UnknownTagError(f"{exc.abbrev} (affix file line {lineno})") from exc
    return AffixTable(prefixes=prefixes, suffixes=suffixes, compound_pairs=pairs)


def load_root_lexicon(path: Union[str, Path], registry: TagRegistry | None = None) -> RootLexicon:
    """Read a tab-separated lexicon file.

    Columns: surface, bound|free, comma-separated canonical tags, optional
    weight (default 1.0). '#' starts a comment.
    """
    entries: dict[str, LexiconEntry] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) < 3 or not cols[0]:
                raise LoadError("expected surface, bound|free, tags", lineno)
            if cols[1] not in ("bound", "free"):
                raise LoadError(f"flag must be bound or free, got {cols[1]!r}", lineno)
            try:
                tags = _check_hints(cols[2].split(","), registry, lineno)
            except UnknownTagError as exc:
                raise UnknownTagError(f"{exc.abbrev} (lexicon line {lineno})") from exc
            weight = 1.0
            if len(cols) > 3 and cols[3].strip():
                try:
                    weight = float(cols[3])
                except ValueError:
                    raise LoadError(f"bad weight {cols[3]!r}", lineno)
                if weight <= 0:
                    raise LoadError(f"weight must be positive, got {cols[3]!r}", lineno)
            entries[cols[0]] = LexiconEntry(surface=cols[0], bound=cols[1] == "bound", tags=tags, weight=weight)
    max_weight = max((e.weight for e in entries.values()), default=1.0)
    return RootLexicon(entries=entries, max_weight=max(max_weight, 1e-9))


def _affix_sequences(
    surface: str, affixes: Mapping[str, tuple[str, ...]], limit: int, from_left: bool
) -> list[tuple[int, tuple[str, ...]]]:
    """All ways to peel up to `limit` affixes off one side; returns (consumed
    codepoints, affix sequence in surface order)."""
    results = [(0, ())]
    frontier: list[tuple[int, tuple[str, ...]]] = [(0, ())]
    for _ in range(limit):
        nxt: list[tuple[int, tuple[str, ...]]] = []
        for consumed, seq in frontier:
            for a in affixes:
                if len(a) + consumed >= len(surface):
                    continue  # must leave at least one codepoint for the core
                if from_left:
                    if surface.startswith(a, consumed):
                        nxt.append((consumed + len(a), seq + (a,)))
                else:
                    end = len(surface) - consumed
                    if surface.endswith(a, 0, end):
                        nxt.append((consumed + len(a), (a,) + seq))
        results.extend(nxt)
        frontier = nxt
    return results


def _score(entry: LexiconEntry, affix_count: int, lexicon: RootLexicon, weights: ScoringWeights) -> float:
    total = weights.w_lex + weights.w_shape
    if total <= 0:
        return 0.0
    lex_part = weights.w_lex * (entry.weight / lexicon.max_weight)
    shape_part = weights.w_shape * (1.0 / (1.0 + affix_count))
    return min(1.0, max(0.0, (lex_part + shape_part) / total))


def _sort_key(seg: Segmentation):
    return (
        -seg.score,
        len(seg.morphs),
        tuple(m.surface for m in seg.morphs),
        tuple(m.role.value for m in seg.morphs),
    )


def segment_token(
    token: Union[Token, str],
    lexicon: RootLexicon,
    affixes: AffixTable,
    max_results: int = 10,
    weights: ScoringWeights = ScoringWeights(),
) -> list[Segmentation]:
    """Ranked candidate decompositions of a word token; never empty."""
    surface = token.surface if isinstance(token, Token) else token
    if max_results < 1:
        raise ValueError("max_results must be positive")

    found: dict[tuple[Morph, ...], Segmentation] = {}
    prefix_ways = _affix_sequences(surface, affixes.prefixes, MAX_PREFIXES, from_left=True)
    suffix_ways = _affix_sequences(surface, affixes.suffixes, MAX_SUFFIXES, from_left=False)

    def register(morphs: tuple[Morph, ...], entry: LexiconEntry, affix_count: int, notes: tuple[str, ...]):
        seg = Segmentation(
            morphs=morphs,
            score=_score(entry, affix_count, lexicon, weights),
            notes=notes,
        )
        found.setdefault(seg.morphs, seg)

    def prefix_morphs(seq):
        return tuple(Morph(p, MorphRole.PREFIX, affixes.prefixes.get(p, ())) for p in seq)

    def suffix_morphs(seq):
        return tuple(Morph(s, MorphRole.SUFFIX, affixes.suffixes.get(s, ())) for s in seq)

    for left_used, prefix_seq in prefix_ways:
        for right_used, suffix_seq in suffix_ways:
            if left_used + right_used >= len(surface):
                continue
            middle = surface[left_used : len(surface) - right_used]
            plain_morphs = len(prefix_seq) + len(suffix_seq)

            entry = lexicon.get(middle)
            if entry is not None:
                core_role = MorphRole.ROOT if entry.bound else MorphRole.STEM
                morphs = (
                    prefix_morphs(prefix_seq)
                    + (Morph(middle, core_role),)
                    + suffix_morphs(suffix_seq)
                )
                register(morphs, entry, plain_morphs, ())

            for (pair_pre, pair_suf), pair_hints in affixes.compound_pairs.items():
                inner_len = len(middle) - len(pair_pre) - len(pair_suf)
                if inner_len < 1:
                    continue
                if not (middle.startswith(pair_pre) and middle.endswith(pair_suf)):
                    continue
                core = middle[len(pair_pre) : len(middle) - len(pair_suf)]
                entry = lexicon.get(core)
                if entry is None:
                    continue
                core_role = MorphRole.ROOT if entry.bound else MorphRole.STEM
                morphs = (
                    prefix_morphs(prefix_seq)
                    + (
                        Morph(pair_pre, MorphRole.COMPOUND_PREFIX_PART, tuple(pair_hints)),
                        Morph(core, core_role),
                        Morph(pair_suf, MorphRole.COMPOUND_SUFFIX_PART, tuple(pair_hints)),
                    )
                    + suffix_morphs(suffix_seq)
                )
                notes = ("plain affixes stacked outside a compound pair",) if plain_morphs else ()
                register(morphs, entry, plain_morphs + 2, notes)

    if not found:
        return [Segmentation(morphs=(Morph(surface, MorphRole.STEM),), score=0.0)]
    ranked = sorted(found.values(), key=_sort_key)
    return ranked[:max_results]


def root_of(
    token: Union[Token, str],
    lexicon: RootLexicon,
    affixes: AffixTable,
    weights: ScoringWeights = ScoringWeights(),
) -> Morph:
    """Core morph (root or stem) of the top-ranked analysis."""
    return segment_token(token, lexicon, affixes, max_results=1, weights=weights)[0].core()
