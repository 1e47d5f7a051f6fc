"""Citation extraction: registry-driven mention detection in code texts.

A corpus document is scanned against the normalized aliases of every code
in the registry. At each position the longest matching alias wins and the
scan resumes after it; matches must start and end at word boundaries
(non-letter characters on the normalized alphabet), and mentions of the
document's own code are dropped.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AmbiguousAliasError,
    DuplicateDocumentError,
    DuplicateSlugError,
    MalformedRegistryError,
    UnknownDocumentSlugError,
)

_APOSTROPHES = "’‘ʼ`´"  # curly quotes, modifier letter, backtick, acute
_LIGATURES = {"œ": "oe", "æ": "ae"}  # not decomposed by NFKD


def normalize_text(text: str) -> str:
    """Lowercase, fold diacritics and ligatures, unify apostrophes, collapse whitespace.

    Diacritics are removed by decomposition plus mark stripping; the oe/ae
    ligatures need explicit folding. The result is idempotent under
    re-normalization.
    """
    # apostrophes are folded twice: U+00B4/U+0060 decompose into combining
    # marks (so they must be caught before NFKD), while e.g. U+0149 emits a
    # U+02BC only during decomposition
    for ch in _APOSTROPHES:
        text = text.replace(ch, "'")
    decomposed = unicodedata.normalize("NFKD", text)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    lowered = stripped.lower()
    for ligature, expansion in _LIGATURES.items():
        lowered = lowered.replace(ligature, expansion)
    for ch in _APOSTROPHES:
        lowered = lowered.replace(ch, "'")
    return " ".join(lowered.split())


@dataclass(frozen=True)
class RegistryEntry:
    slug: str
    display_name: str
    aliases: tuple[str, ...]  # normalized


class CodeRegistry:
    """The universe of codes and the surface forms that denote them."""

    def __init__(self, entries: Sequence[RegistryEntry]):
        self.entries = tuple(entries)
        self._alias_to_slug: dict[str, str] = {}
        slugs = set()
        for entry in self.entries:
            if entry.slug in slugs:
                raise DuplicateSlugError(f"slug {entry.slug!r} appears twice")
            slugs.add(entry.slug)
            for alias in entry.aliases:
                if not alias:
                    raise MalformedRegistryError(
                        f"entry {entry.slug!r} has an empty alias"
                    )
                owner = self._alias_to_slug.get(alias)
                if owner is not None and owner != entry.slug:
                    raise AmbiguousAliasError(
                        f"alias {alias!r} claimed by both {owner!r} and {entry.slug!r}"
                    )
                self._alias_to_slug[alias] = entry.slug
        self._slugs = slugs
        # longest alias first, then lexicographic, so the regex alternation
        # implements the longest-match rule
        ordered = sorted(self._alias_to_slug, key=lambda a: (-len(a), a))
        pattern = "|".join(re.escape(a) for a in ordered)
        self._matcher = re.compile(rf"(?<![a-z])(?:{pattern})(?![a-z])") if ordered else None

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, slug: str) -> bool:
        return slug in self._slugs

    def slugs(self) -> list[str]:
        return sorted(self._slugs)

    def slug_of_alias(self, alias: str) -> str:
        return self._alias_to_slug[alias]

    def scan(self, normalized_text: str):
        if self._matcher is None:
            return iter(())
        return self._matcher.finditer(normalized_text)


def load_registry(content: str) -> CodeRegistry:
    """Parse the tab-separated registry format.

    Each line reads ``slug<TAB>display_name<TAB>alias1|alias2|...``; blank
    lines and ``#`` comments are ignored. Aliases are stored normalized.
    """
    entries = []
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t")
        if len(fields) != 3:
            raise MalformedRegistryError(
                f"line {lineno}: expected 3 tab-separated fields, got {len(fields)}"
            )
        slug, display_name, alias_field = (f.strip() for f in fields)
        if not slug or not display_name or not alias_field:
            raise MalformedRegistryError(f"line {lineno}: empty field")
        aliases = tuple(normalize_text(a) for a in alias_field.split("|"))
        if any(not a for a in aliases):
            raise MalformedRegistryError(f"line {lineno}: empty alias")
        entries.append(RegistryEntry(slug, display_name, aliases))
    return CodeRegistry(entries)


@dataclass(frozen=True)
class CodeDocument:
    slug: str
    text: str


@dataclass(frozen=True)
class Mention:
    """One occurrence of another code's name inside a document.

    The offset is the character position of the match in the normalized
    text of the document.
    """

    cited_slug: str
    offset: int
    matched_alias: str


def find_citations(doc: CodeDocument, registry: CodeRegistry) -> list[Mention]:
    """All mentions of other codes in the document, in offset order."""
    if doc.slug not in registry:
        raise UnknownDocumentSlugError(f"document slug {doc.slug!r} not in registry")
    normalized = normalize_text(doc.text)
    mentions = []
    for match in registry.scan(normalized):
        alias = match.group(0)
        slug = registry.slug_of_alias(alias)
        if slug == doc.slug:
            continue  # self-quotation: consumed by the scan but not reported
        mentions.append(Mention(slug, match.start(), alias))
    return mentions


@dataclass(frozen=True)
class EdgeRecord:
    citing_slug: str
    cited_slug: str
    count: int


@dataclass(frozen=True)
class EdgeList:
    """Aggregated citation records, sorted by (citing, cited) slug."""

    records: tuple[EdgeRecord, ...]

    def to_tsv(self) -> str:
        lines = [f"{r.citing_slug}\t{r.cited_slug}\t{r.count}" for r in self.records]
        return "\n".join(lines) + ("\n" if lines else "")


def build_edge_list(corpus: Iterable[CodeDocument], registry: CodeRegistry) -> EdgeList:
    """Scan every document and aggregate mentions into citation counts."""
    counts: Counter[tuple[str, str]] = Counter()
    seen = set()
    for doc in corpus:
        if doc.slug in seen:
            raise DuplicateDocumentError(f"two documents for slug {doc.slug!r}")
        seen.add(doc.slug)
        for mention in find_citations(doc, registry):
            counts[(doc.slug, mention.cited_slug)] += 1
    records = tuple(
        EdgeRecord(citing, cited, counts[(citing, cited)])
        for citing, cited in sorted(counts)
    )
    return EdgeList(records)
