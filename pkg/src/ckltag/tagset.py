"""Immutable registry of the 97-tag Central Kurdish inventory plus UNK.

The registry owns three things: the tag descriptors (one per row of the
embedded table, plus the UNK fallback), the alias table reconciling the two
abbreviation spellings found in the source material, and the two-level
category tree used by the annotation UI's tag picker.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import RegistryError, UnknownTagError
from .tagset_data import ALIASES, CATEGORY_KURDISH, SUSPECT_LETTERS, TABLE_ROWS

__all__ = [
    "TagCategory",
    "TagDescriptor",
    "CategoryNode",
    "CategoryTree",
    "TagRegistry",
    "load_registry",
    "UD_UPOS_INVENTORY",
]

ABBREV_PATTERN = re.compile(r"^[A-Z0-9]+(?:-[A-Z0-9]+)*$")

# The official coarse UPOS inventory; strict-mode output is confined to it.
UD_UPOS_INVENTORY = frozenset(
    "ADJ ADP ADV AUX CCONJ DET INTJ NOUN NUM PART PRON PROPN PUNCT SCONJ SYM VERB X".split()
)

EXPECTED_CATEGORY_COUNTS = {
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


class TagCategory(enum.Enum):
    """Top-level word category; order follows the source table."""

    NOUN = "Noun"
    PRONOUN = "Pronoun"
    PARTICLE = "Particle"
    ADJECTIVE = "Adjective"
    ADVERB = "Adverb"
    NUMERAL = "Numeral"
    VERB = "Verb"
    GERUND = "Gerund"
    UNKNOWN = "Unknown"

    @property
    def kurdish_name(self) -> str:
        return CATEGORY_KURDISH[self.value]

    @property
    def ud_label(self) -> str:
        """Source-faithful UD label of the whole category (GRD, X included)."""
        return _CATEGORY_UD[self]


_CATEGORY_UD = {
    TagCategory.NOUN: "NOUN",
    TagCategory.PRONOUN: "PRON",
    TagCategory.PARTICLE: "PART",
    TagCategory.ADJECTIVE: "ADJ",
    TagCategory.ADVERB: "ADV",
    TagCategory.NUMERAL: "NUM",
    TagCategory.VERB: "VERB",
    TagCategory.GERUND: "GRD",
    TagCategory.UNKNOWN: "X",
}

# "GRD" is not a valid UPOS label; strict mode folds gerunds into VERB.
_STRICT_REMAP = {"GRD": "VERB"}


@dataclass(frozen=True)
class TagDescriptor:
    """One tag of the closed inventory."""

    abbrev: str
    english_name: str
    kurdish_name: str
    category: TagCategory
    table_index: int  # 1..97 for table rows, 0 for UNK
    kurdish_needs_review: bool = False

    @property
    def ud_upos(self) -> str:
        return self.category.ud_label


@dataclass(frozen=True)
class CategoryNode:
    """Node of the two-level picker tree; leaves carry a tag abbreviation."""

    label: str
    kurdish_label: str
    children: tuple["CategoryNode", ...] = ()
    tag: str | None = None

    def to_dict(self) -> dict:
        d: dict = {"label": self.label, "kurdish_label": self.kurdish_label}
        if self.tag is not None:
            d["tag"] = self.tag
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


@dataclass(frozen=True)
class CategoryTree:
    root: CategoryNode

    def leaf_count(self) -> int:
        return sum(len(cat.children) for cat in self.root.children)

    def to_dict(self) -> dict:
        return self.root.to_dict()


@dataclass(frozen=True)
class TagRegistry:
    """The closed 98-tag set. Immutable after load_registry()."""

    tags: tuple[TagDescriptor, ...]
    aliases: Mapping[str, str]
    tree: CategoryTree
    _by_abbrev: Mapping[str, TagDescriptor] = field(repr=False)

    def __len__(self) -> int:
        return len(self.tags)

    def __iter__(self):
        return iter(self.tags)

    def __contains__(self, abbrev: str) -> bool:
        return abbrev.strip().upper() in self._by_abbrev

    def resolve_alias(self, abbrev: str) -> str:
        """Map a variant spelling to its canonical abbreviation.

        Identity on canonical abbreviations; case-insensitive on input,
        uppercase on output. Idempotent.
        """
        key = abbrev.strip().upper()
        if key in self._by_abbrev:
            return key
        if key in self.aliases:
            return self.aliases[key]
        raise UnknownTagError(abbrev)

    def lookup(self, abbrev: str, resolve_aliases: bool = True) -> TagDescriptor:
        key = abbrev.strip().upper()
        if resolve_aliases and key in self.aliases:
            key = self.aliases[key]
        desc = self._by_abbrev.get(key)
        if desc is None:
            raise UnknownTagError(abbrev)
        return desc

    def tags_in_category(self, category: TagCategory) -> list[TagDescriptor]:
        """Tags of one category, in table order (UNK sorts by its index 0)."""
        return sorted(
            (t for t in self.tags if t.category is category),
            key=lambda t: t.table_index,
        )

    def ud_upos_for(self, abbrev: str, mode: str = "paper") -> str:
        """UD label for a tag. mode='paper' keeps the source table's labels
        (including GRD and X); mode='strict' confines output to the official
        UPOS inventory."""
        if mode not in ("paper", "strict"):
            raise ValueError(f"mode must be 'paper' or 'strict', got {mode!r}")
        label = self.lookup(abbrev).ud_upos
        if mode == "strict":
            label = _STRICT_REMAP.get(label, label)
        return label

    def category_tree(self) -> CategoryTree:
        return self.tree


def _build_descriptors() -> list[TagDescriptor]:
    descriptors = []
    seen_indices = set()
    for index, category_printed, english, abbrev_printed, kurdish in TABLE_ROWS:
        # The source prints "Particles" on all particle rows but one; the
        # category name is normalized to the singular everywhere.
        category_name = "Particle" if category_printed.startswith("Particle") else category_printed
        try:
            category = TagCategory(category_name)
        except ValueError:
            raise RegistryError(f"row {index}: unknown category {category_printed!r}")
        if index in seen_indices:
            raise RegistryError(f"duplicate table index {index}")
        seen_indices.add(index)
        descriptors.append(
            TagDescriptor(
                abbrev=abbrev_printed.upper(),
                english_name=english,
                kurdish_name=kurdish,
                category=category,
                table_index=index,
                kurdish_needs_review=bool(set(kurdish) & SUSPECT_LETTERS),
            )
        )
    descriptors.append(
        TagDescriptor(
            abbrev="UNK",
            english_name="Unknown",
            kurdish_name="UNKNOWN",
            category=TagCategory.UNKNOWN,
            table_index=0,
        )
    )
    return descriptors


def _build_tree(descriptors: Iterable[TagDescriptor]) -> CategoryTree:
    children = []
    for category in TagCategory:
        leaves = tuple(
            CategoryNode(
                label=t.english_name,
                kurdish_label=t.kurdish_name,
                tag=t.abbrev,
            )
            for t in sorted(
                (t for t in descriptors if t.category is category),
                key=lambda t: t.table_index,
            )
        )
        children.append(
            CategoryNode(
                label=category.value,
                kurdish_label=category.kurdish_name,
                children=leaves,
            )
        )
    root = CategoryNode(label="CKL-POS", kurdish_label="CKL-POS", children=tuple(children))
    return CategoryTree(root=root)


def _validate(descriptors: list[TagDescriptor], aliases: Mapping[str, str]) -> None:
    if len(descriptors) != 98:
        raise RegistryError(f"expected 98 tags, built {len(descriptors)}")
    by_abbrev: dict[str, TagDescriptor] = {}
    for d in descriptors:
        if not ABBREV_PATTERN.match(d.abbrev):
            raise RegistryError(f"malformed abbreviation {d.abbrev!r}")
        if d.abbrev in by_abbrev:
            raise RegistryError(f"duplicate abbreviation {d.abbrev!r}")
        by_abbrev[d.abbrev] = d
    indices = sorted(d.table_index for d in descriptors if d.category is not TagCategory.UNKNOWN)
    if indices != list(range(1, 98)):
        raise RegistryError("table indices 1..97 are not a bijection")
    counts: dict[str, int] = {}
    for d in descriptors:
        counts[d.category.value] = counts.get(d.category.value, 0) + 1
    if counts != EXPECTED_CATEGORY_COUNTS:
        raise RegistryError(f"category counts {counts} != expected {EXPECTED_CATEGORY_COUNTS}")
    for variant, canonical in aliases.items():
        if variant in by_abbrev:
            raise RegistryError(f"alias {variant!r} shadows a canonical abbreviation")
        if canonical not in by_abbrev:
            raise RegistryError(f"alias {variant!r} points at unknown tag {canonical!r}")
    for d in descriptors:
        if d.ud_upos not in ("NOUN", "PRON", "PART", "ADJ", "ADV", "NUM", "VERB", "GRD", "X"):
            raise RegistryError(f"{d.abbrev}: unexpected UD label {d.ud_upos!r}")


def load_registry() -> TagRegistry:
    """Build the registry from the embedded table.

    Raises RegistryError on any structural defect; the table ships with the
    package, so a failure here is a packaging bug, not user error.
    """
    descriptors = _build_descriptors()
    aliases = {k.upper(): v.upper() for k, v in ALIASES.items()}
    _validate(descriptors, aliases)
    ordered = sorted(descriptors, key=lambda d: (d.table_index == 0, d.table_index))
    tree = _build_tree(ordered)
    return TagRegistry(
        tags=tuple(ordered),
        aliases=MappingProxyType(aliases),
        tree=tree,
        _by_abbrev=MappingProxyType({d.abbrev: d for d in ordered}),
    )
