"""Lexical resources backing corpus generation.

The lexicon bundles four line-oriented resources (word lists, association
norms, embeddings, a frequency list) and answers the semantic and frequency
queries that the sentence sampler and the corpus validator rely on.  It is
immutable after loading and safe to share across threads.

File formats (all UTF-8):

* ``nouns.tsv`` / ``verbs.tsv`` / ``adjectives.tsv`` -- tab-separated, column
  one is the lemma, column two the word kind, remaining columns are
  ``key=value`` annotations whose list values are semicolon-separated.
* ``associations.tsv`` -- ``cue<TAB>target<TAB>strength`` with strength in
  [0, 1].
* ``embeddings.txt`` -- first line ``count dimension``, then one
  ``lemma v1 ... vd`` row per lemma.
* ``frequency.txt`` -- one lemma per line, most frequent first; the rank of a
  lemma is its line number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

NOUN_CATEGORIES = frozenset(
    {
        "person",
        "social_group",
        "social_control",
        "institution",
        "physical_entity",
        "object_nonedible",
        "object_edible",
        "object_drinkable",
        "clothing",
        "device",
        "container",
        "country",
    }
)

#: Categories whose nouns may head a "with"-prepositional phrase.
WITH_PP_CATEGORIES = frozenset({"clothing", "device", "container"})

VERB_KINDS = frozenset({"transitive", "ditransitive", "intransitive_padding"})

DEFAULT_FREQUENCY_CUTOFF = 5000


class LexiconError(ValueError):
    """Raised for missing files, malformed rows, or violated entry invariants."""


@dataclass(frozen=True)
class NounEntry:
    lemma: str
    categories: frozenset[str]
    countable: bool
    frequency_rank: int


@dataclass(frozen=True)
class VerbEntry:
    lemma: str
    kind: str
    past: str = ""
    past_participle: str = ""
    third_singular: str = ""
    po_preposition: str = ""
    agent_categories: frozenset[str] = frozenset()
    patient_categories: frozenset[str] = frozenset()
    recipient_categories: frozenset[str] = frozenset()
    frequency_rank: int = 0


@dataclass(frozen=True)
class AdjectiveEntry:
    lemma: str
    compatible_categories: frozenset[str]
    frequency_rank: int


class AssociationTable:
    """Directed (cue, target) -> strength table with symmetric queries.

    A zero-strength row counts as "not associated"; the norms record presence,
    and the generator only cares about strictly positive strengths.
    """

    def __init__(self, entries: dict[tuple[str, str], float]):
        self.entries = dict(entries)
        neighbors: dict[str, set[str]] = {}
        for (cue, tgt), strength in self.entries.items():
            if strength > 0.0:
                neighbors.setdefault(cue, set()).add(tgt)
                neighbors.setdefault(tgt, set()).add(cue)
        self._neighbors = {w: frozenset(ns) for w, ns in neighbors.items()}

    def strength(self, a: str, b: str) -> float:
        return max(self.entries.get((a, b), 0.0), self.entries.get((b, a), 0.0))

    def neighbors(self, lemma: str) -> frozenset[str]:
        return self._neighbors.get(lemma, frozenset())

    def __len__(self) -> int:
        return len(self.entries)


class EmbeddingTable:
    def __init__(self, vectors: dict[str, np.ndarray], dimension: int):
        self.vectors = vectors
        self.dimension = dimension
        # Unit-normalised copies make repeated cosine queries a dot product.
        self._units: dict[str, np.ndarray] = {}
        for lemma, vec in vectors.items():
            norm = float(np.linalg.norm(vec))
            if norm == 0.0:
                raise LexiconError(f"zero embedding vector for {lemma!r}")
            self._units[lemma] = vec / norm

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.vectors

    def unit(self, lemma: str) -> np.ndarray:
        try:
            return self._units[lemma]
        except KeyError:
            raise LexiconError(f"no embedding vector for {lemma!r}") from None


@dataclass
class Lexicon:
    """Loaded lexical resources plus the derived sampling pools.

    ``nouns``/``verbs``/``adjectives`` hold every ingested entry; the
    ``sampling_*`` views are restricted to entries eligible for generation
    (countable, within the frequency cutoff).
    """

    nouns: list[NounEntry]
    verbs: list[VerbEntry]
    adjectives: list[AdjectiveEntry]
    associations: AssociationTable
    embeddings: EmbeddingTable
    frequency_cutoff: int

    noun_by_lemma: dict[str, NounEntry] = field(default_factory=dict)
    verb_by_lemma: dict[str, VerbEntry] = field(default_factory=dict)
    adjective_by_lemma: dict[str, AdjectiveEntry] = field(default_factory=dict)
    sampling_nouns: list[NounEntry] = field(default_factory=list)
    sampling_nouns_by_category: dict[str, list[NounEntry]] = field(default_factory=dict)
    sampling_adjectives_by_category: dict[str, list[AdjectiveEntry]] = field(default_factory=dict)
    verbs_by_kind: dict[str, list[VerbEntry]] = field(default_factory=dict)
    pp_with_nouns: list[NounEntry] = field(default_factory=list)
    countries: list[NounEntry] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.noun_by_lemma = {n.lemma: n for n in self.nouns}
        self.verb_by_lemma = {v.lemma: v for v in self.verbs}
        self.adjective_by_lemma = {a.lemma: a for a in self.adjectives}
        cutoff = self.frequency_cutoff
        self.sampling_nouns = [
            n for n in self.nouns if n.countable and n.frequency_rank <= cutoff
        ]
        self.sampling_nouns_by_category = {}
        for noun in self.sampling_nouns:
            for cat in sorted(noun.categories):
                self.sampling_nouns_by_category.setdefault(cat, []).append(noun)
        self.sampling_adjectives_by_category = {}
        for adj in self.adjectives:
            if adj.frequency_rank > cutoff:
                continue
            for cat in sorted(adj.compatible_categories):
                self.sampling_adjectives_by_category.setdefault(cat, []).append(adj)
        self.verbs_by_kind = {kind: [] for kind in VERB_KINDS}
        for verb in self.verbs:
            if verb.frequency_rank <= cutoff:
                self.verbs_by_kind[verb.kind].append(verb)
        self.pp_with_nouns = [
            n for n in self.sampling_nouns if n.categories and n.categories <= WITH_PP_CATEGORIES
        ]
        self.countries = [n for n in self.sampling_nouns if "country" in n.categories]

    def content_kind(self, lemma: str) -> str | None:
        """Word class of a lemma among content words, or None if unknown."""
        if lemma in self.noun_by_lemma:
            return "noun"
        if lemma in self.verb_by_lemma:
            return "verb"
        if lemma in self.adjective_by_lemma:
            return "adjective"
        return None


# ---------------------------------------------------------------------------
# Queries


def is_associated(a: str, b: str, lex: Lexicon) -> bool:
    """True iff the norms list (a, b) or (b, a) with strength > 0."""
    return lex.associations.strength(a, b) > 0.0


def cosine_similarity(a: str, b: str, lex: Lexicon) -> float:
    return float(np.dot(lex.embeddings.unit(a), lex.embeddings.unit(b)))


def similarity_threshold(samples: list[float], percentile: float) -> float:
    """Nearest-rank percentile of an empirical sample.

    With n samples the value returned is the ceil(percentile/100 * n)-th
    smallest one.
    """
    if not samples:
        raise ValueError("similarity_threshold requires a non-empty sample")
    if not 0.0 < percentile < 100.0:
        raise ValueError(f"percentile must lie in (0, 100), got {percentile}")
    ordered = sorted(samples)
    rank = max(1, math.ceil(percentile / 100.0 * len(ordered)))
    return ordered[rank - 1]


# ---------------------------------------------------------------------------
# Loading


def _parse_annotations(parts: list[str], path: Path, line_no: int) -> dict[str, str]:
    annotations: dict[str, str] = {}
    for part in parts:
        if "=" not in part:
            raise LexiconError(f"{path.name}:{line_no}: malformed annotation {part!r}")
        key, value = part.split("=", 1)
        if key in annotations:
            raise LexiconError(f"{path.name}:{line_no}: duplicate annotation {key!r}")
        annotations[key] = value
    return annotations


def _parse_categories(raw: str, path: Path, line_no: int) -> frozenset[str]:
    cats = frozenset(c for c in raw.split(";") if c)
    unknown = cats - NOUN_CATEGORIES
    if unknown:
        raise LexiconError(
            f"{path.name}:{line_no}: unknown noun categories {sorted(unknown)}"
        )
    return cats


def _iter_rows(path: Path):
    if not path.is_file():
        raise LexiconError(f"missing lexicon file: {path}")
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            yield line_no, line.split("\t")


def _load_frequency(path: Path) -> dict[str, int]:
    ranks: dict[str, int] = {}
    for line_no, parts in _iter_rows(path):
        lemma = parts[0].strip()
        if not lemma or len(parts) != 1:
            raise LexiconError(f"{path.name}:{line_no}: expected one lemma per line")
        if lemma in ranks:
            raise LexiconError(f"{path.name}:{line_no}: duplicate lemma {lemma!r}")
        ranks[lemma] = line_no
    return ranks


def _rank_of(lemma: str, ranks: dict[str, int], path: Path, line_no: int) -> int:
    try:
        return ranks[lemma]
    except KeyError:
        raise LexiconError(
            f"{path.name}:{line_no}: lemma {lemma!r} missing from the frequency list"
        ) from None


def parse_nouns(path: Path, ranks: dict[str, int]) -> list[NounEntry]:
    entries: list[NounEntry] = []
    seen: set[str] = set()
    for line_no, parts in _iter_rows(path):
        if len(parts) < 3:
            raise LexiconError(f"{path.name}:{line_no}: expected lemma, kind, annotations")
        lemma, kind = parts[0], parts[1]
        if kind != "noun":
            raise LexiconError(f"{path.name}:{line_no}: expected kind 'noun', got {kind!r}")
        if lemma != lemma.lower():
            raise LexiconError(f"{path.name}:{line_no}: noun lemma must be lowercase: {lemma!r}")
        if lemma in seen:
            raise LexiconError(f"{path.name}:{line_no}: duplicate noun {lemma!r}")
        seen.add(lemma)
        ann = _parse_annotations(parts[2:], path, line_no)
        if "categories" not in ann:
            raise LexiconError(f"{path.name}:{line_no}: noun {lemma!r} lacks categories")
        categories = _parse_categories(ann["categories"], path, line_no)
        if not categories:
            raise LexiconError(f"{path.name}:{line_no}: noun {lemma!r} has empty categories")
        countable = ann.get("countable", "yes") == "yes"
        entries.append(
            NounEntry(
                lemma=lemma,
                categories=categories,
                countable=countable,
                frequency_rank=_rank_of(lemma, ranks, path, line_no),
            )
        )
    return entries


def parse_verbs(path: Path, ranks: dict[str, int]) -> list[VerbEntry]:
    entries: list[VerbEntry] = []
    seen: set[str] = set()
    for line_no, parts in _iter_rows(path):
        if len(parts) < 2:
            raise LexiconError(f"{path.name}:{line_no}: expected lemma and kind")
        lemma, kind = parts[0], parts[1]
        if kind not in VERB_KINDS:
            raise LexiconError(f"{path.name}:{line_no}: unknown verb kind {kind!r}")
        if lemma in seen:
            raise LexiconError(f"{path.name}:{line_no}: duplicate verb {lemma!r}")
        seen.add(lemma)
        ann = _parse_annotations(parts[2:], path, line_no)

        def cats(key: str) -> frozenset[str]:
            return _parse_categories(ann.get(key, ""), path, line_no)

        entry = VerbEntry(
            lemma=lemma,
            kind=kind,
            past=ann.get("past", ""),
            past_participle=ann.get("participle", ""),
            third_singular=ann.get("third", ""),
            po_preposition=ann.get("prep", ""),
            agent_categories=cats("agent"),
            patient_categories=cats("patient"),
            recipient_categories=cats("recipient"),
            frequency_rank=_rank_of(lemma, ranks, path, line_no),
        )
        if kind == "transitive":
            for attr in ("past", "past_participle", "third_singular"):
                if not getattr(entry, attr):
                    raise LexiconError(
                        f"{path.name}:{line_no}: transitive verb {lemma!r} missing {attr}"
                    )
            if not entry.agent_categories or not entry.patient_categories:
                raise LexiconError(
                    f"{path.name}:{line_no}: transitive verb {lemma!r} missing role categories"
                )
        elif kind == "ditransitive":
            for attr in ("past", "third_singular"):
                if not getattr(entry, attr):
                    raise LexiconError(
                        f"{path.name}:{line_no}: ditransitive verb {lemma!r} missing {attr}"
                    )
            if entry.po_preposition not in {"to", "for"}:
                raise LexiconError(
                    f"{path.name}:{line_no}: ditransitive verb {lemma!r} needs prep=to or prep=for"
                )
            if (
                not entry.agent_categories
                or not entry.patient_categories
                or not entry.recipient_categories
            ):
                raise LexiconError(
                    f"{path.name}:{line_no}: ditransitive verb {lemma!r} missing role categories"
                )
        else:  # intransitive_padding
            if entry.agent_categories or entry.patient_categories or entry.recipient_categories:
                raise LexiconError(
                    f"{path.name}:{line_no}: padding verb {lemma!r} must not carry role categories"
                )
        entries.append(entry)
    return entries


def parse_adjectives(path: Path, ranks: dict[str, int]) -> list[AdjectiveEntry]:
    entries: list[AdjectiveEntry] = []
    seen: set[str] = set()
    for line_no, parts in _iter_rows(path):
        if len(parts) < 3:
            raise LexiconError(f"{path.name}:{line_no}: expected lemma, kind, annotations")
        lemma, kind = parts[0], parts[1]
        if kind != "adjective":
            raise LexiconError(f"{path.name}:{line_no}: expected kind 'adjective', got {kind!r}")
        if lemma in seen:
            raise LexiconError(f"{path.name}:{line_no}: duplicate adjective {lemma!r}")
        seen.add(lemma)
        ann = _parse_annotations(parts[2:], path, line_no)
        categories = _parse_categories(ann.get("categories", ""), path, line_no)
        if not categories:
            raise LexiconError(f"{path.name}:{line_no}: adjective {lemma!r} has empty categories")
        entries.append(
            AdjectiveEntry(
                lemma=lemma,
                compatible_categories=categories,
                frequency_rank=_rank_of(lemma, ranks, path, line_no),
            )
        )
    return entries


def parse_associations(path: Path) -> AssociationTable:
    entries: dict[tuple[str, str], float] = {}
    for line_no, parts in _iter_rows(path):
        if len(parts) != 3:
            raise LexiconError(f"{path.name}:{line_no}: expected cue, target, strength")
        cue, tgt, raw = parts
        try:
            strength = float(raw)
        except ValueError:
            raise LexiconError(f"{path.name}:{line_no}: bad strength {raw!r}") from None
        if not 0.0 <= strength <= 1.0:
            raise LexiconError(f"{path.name}:{line_no}: strength {strength} outside [0, 1]")
        key = (cue, tgt)
        if key in entries:
            raise LexiconError(f"{path.name}:{line_no}: duplicate pair {key}")
        entries[key] = strength
    return AssociationTable(entries)


def parse_embeddings(path: Path) -> EmbeddingTable:
    if not path.is_file():
        raise LexiconError(f"missing lexicon file: {path}")
    vectors: dict[str, np.ndarray] = {}
    with path.open(encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 2:
            raise LexiconError(f"{path.name}:1: header must be 'count dimension'")
        try:
            count, dim = int(header[0]), int(header[1])
        except ValueError:
            raise LexiconError(f"{path.name}:1: header must be 'count dimension'") from None
        if dim < 1:
            raise LexiconError(f"{path.name}:1: dimension must be positive")
        for line_no, line in enumerate(handle, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != dim + 1:
                raise LexiconError(
                    f"{path.name}:{line_no}: expected {dim} components, got {len(parts) - 1}"
                )
            lemma = parts[0]
            if lemma in vectors:
                raise LexiconError(f"{path.name}:{line_no}: duplicate lemma {lemma!r}")
            vectors[lemma] = np.asarray([float(x) for x in parts[1:]], dtype=np.float64)
    if len(vectors) != count:
        raise LexiconError(f"{path.name}: header promises {count} rows, found {len(vectors)}")
    return EmbeddingTable(vectors, dim)


def load_lexicon(
    directory: str | Path, frequency_cutoff: int = DEFAULT_FREQUENCY_CUTOFF
) -> Lexicon:
    """Load and cross-validate every lexicon resource under ``directory``.

    Entries beyond ``frequency_cutoff`` stay in the lexicon (association and
    embedding lookups still work) but are excluded from the sampling pools.
    """
    if frequency_cutoff < 1:
        raise LexiconError(f"frequency_cutoff must be positive, got {frequency_cutoff}")
    directory = Path(directory)
    ranks = _load_frequency(directory / "frequency.txt")
    nouns = parse_nouns(directory / "nouns.tsv", ranks)
    verbs = parse_verbs(directory / "verbs.tsv", ranks)
    adjectives = parse_adjectives(directory / "adjectives.tsv", ranks)
    associations = parse_associations(directory / "associations.tsv")
    embeddings = parse_embeddings(directory / "embeddings.txt")

    for entry in [*nouns, *verbs, *adjectives]:
        if entry.lemma not in embeddings:
            raise LexiconError(f"lemma {entry.lemma!r} has no embedding vector")

    return Lexicon(
        nouns=nouns,
        verbs=verbs,
        adjectives=adjectives,
        associations=associations,
        embeddings=embeddings,
        frequency_cutoff=frequency_cutoff,
    )


def lexicon_fingerprint(directory: str | Path) -> str:
    """Stable digest of the lexicon files, for run manifests."""
    import hashlib

    directory = Path(directory)
    digest = hashlib.sha256()
    for name in sorted(
        ["nouns.tsv", "verbs.tsv", "adjectives.tsv", "associations.tsv", "embeddings.txt", "frequency.txt"]
    ):
        path = directory / name
        digest.update(name.encode())
        digest.update(b"\0")
        if path.is_file():
            digest.update(path.read_bytes())
        digest.update(b"\0")
    return digest.hexdigest()
