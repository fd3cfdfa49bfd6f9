"""Constrained prime-target corpus construction.

``build_corpus`` realizes, for each of the four target structures, a list of
prime-target items: one target sentence paired with N prime pairs, where every
pair holds a congruent context (same construction as the target) and its
content-matched incongruent counterpart (same verb and role nouns, alternated
construction).  The core condition enforces full lexical separation between
prime and target; the remaining conditions each relax or tighten exactly one
factor (semantic similarity, lexical overlap, plausibility, prime recency,
cumulative exposure, or structural complexity).

Sampling is rejection sampling with a bounded retry budget.  Every target owns
an independent, deterministically derived random stream, so corpora are
byte-reproducible for a given (condition, lexicon) and independent of
scheduling.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, replace
from itertools import product

from .lexicon import Lexicon, VerbEntry, cosine_similarity, similarity_threshold
from .sentences import (
    Construction,
    DET_A_AN,
    DET_THE,
    PADDING_AUXILIARIES,
    PADDING_PRONOUNS,
    NounPhraseSpec,
    PPSpec,
    Sentence,
    SentenceSpec,
    alternate,
    join_context,
    realize,
)

CONDITION_NAMES = (
    "core",
    "sem_sim_verb",
    "sem_sim_nouns",
    "sem_sim_all",
    "overlap_random_noun",
    "overlap_all_nouns",
    "overlap_verb",
    "overlap_function_words",
    "identical",
    "implausible_prime",
    "recency",
    "cumulative",
    "complexity",
)

COMPLEXITY_MODES = ("prime", "target", "both")
COMPLEX_SHAPES = ("adjective", "pp", "adjective_pp")

STRUCTURES = (Construction.ACT, Construction.PASS, Construction.DO, Construction.PO)

SIMILARITY_PERCENTILE = 90.0
#: Targets per structure in the internal core sample used to fix the
#: similarity threshold for the semantic-similarity conditions.
THRESHOLD_SAMPLE_TARGETS = 75

DEFAULT_TARGETS_PER_STRUCTURE = 1500
DEFAULT_PRIMES_PER_TARGET = 10
DEFAULT_MAX_ATTEMPTS = 10_000

RECENCY_CONTEXT_LENGTH = 4


class GenerationError(RuntimeError):
    """Constraint-satisfaction exhaustion or invalid generation input."""


@dataclass(frozen=True)
class ConditionSpec:
    """Identifies one experimental condition and its sampling parameters."""

    name: str
    position: int | None = None  # recency: 1 (adjacent to target) .. 4 (farthest)
    k: int | None = None         # cumulative: number of congruent primes
    mode: str | None = None      # complexity: prime | target | both
    targets_per_structure: int = DEFAULT_TARGETS_PER_STRUCTURE
    primes_per_target: int = DEFAULT_PRIMES_PER_TARGET
    seed: int = 0
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
    similarity_threshold: float | None = None  # resolved during generation

    def __post_init__(self) -> None:
        if self.name not in CONDITION_NAMES:
            raise ValueError(f"unknown condition {self.name!r}")
        if self.name == "recency":
            if self.position is None or not 1 <= self.position <= RECENCY_CONTEXT_LENGTH:
                raise ValueError("recency requires position in 1..4")
        elif self.position is not None:
            raise ValueError("position is only valid for the recency condition")
        if self.name == "cumulative":
            if self.k is None or not 1 <= self.k <= 5:
                raise ValueError("cumulative requires k in 1..5")
        elif self.k is not None:
            raise ValueError("k is only valid for the cumulative condition")
        if self.name == "complexity":
            if self.mode not in COMPLEXITY_MODES:
                raise ValueError(f"complexity requires mode in {COMPLEXITY_MODES}")
        elif self.mode is not None:
            raise ValueError("mode is only valid for the complexity condition")
        if self.targets_per_structure < 1:
            raise ValueError("targets_per_structure must be positive")
        if self.primes_per_target < 1:
            raise ValueError("primes_per_target must be positive")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")

    @property
    def condition_id(self) -> str:
        if self.name == "recency":
            return f"recency_pos{self.position}"
        if self.name == "cumulative":
            return f"cumulative_k{self.k}"
        if self.name == "complexity":
            return f"complexity_{self.mode}"
        return self.name


@dataclass(frozen=True)
class PrimePair:
    congruent: tuple[Sentence, ...]
    incongruent: tuple[Sentence, ...]


@dataclass(frozen=True)
class PrimeTargetItem:
    item_id: str
    condition: ConditionSpec
    structure: Construction
    alternation: str
    target: Sentence
    prime_pairs: tuple[PrimePair, ...]


@dataclass(frozen=True)
class _Rules:
    """Pairwise constraints between the congruent prime and the target."""

    determiners: str = "differ"            # differ | share
    tense: str = "differ"                  # transitive alternation only
    preposition: str = "differ"            # dative alternation only
    shared_roles: frozenset[str] = frozenset()
    similar_roles: frozenset[str] = frozenset()
    random_shared_noun: bool = False
    implausible_prime: bool = False
    complexity: str | None = None
    context: str = "single"                # single | recency | cumulative
    identical: bool = False


def _rules_for(cond: ConditionSpec) -> _Rules:
    name = cond.name
    if name == "core":
        return _Rules()
    if name == "sem_sim_verb":
        return _Rules(similar_roles=frozenset({"verb"}))
    if name == "sem_sim_nouns":
        return _Rules(similar_roles=frozenset({"agent", "patient", "recipient"}))
    if name == "sem_sim_all":
        return _Rules(similar_roles=frozenset({"verb", "agent", "patient", "recipient"}))
    if name == "overlap_random_noun":
        return _Rules(random_shared_noun=True)
    if name == "overlap_all_nouns":
        return _Rules(shared_roles=frozenset({"agent", "patient", "recipient"}))
    if name == "overlap_verb":
        return _Rules(shared_roles=frozenset({"verb"}))
    if name == "overlap_function_words":
        return _Rules(determiners="share", tense="share", preposition="share")
    if name == "identical":
        return _Rules(determiners="share", tense="share", preposition="share", identical=True)
    if name == "implausible_prime":
        return _Rules(implausible_prime=True)
    if name == "recency":
        return _Rules(context="recency")
    if name == "cumulative":
        return _Rules(context="cumulative")
    if name == "complexity":
        return _Rules(complexity=cond.mode)
    raise GenerationError(f"unknown condition {name!r}")


# ---------------------------------------------------------------------------
# Deterministic random streams


def _child_rng(*parts) -> random.Random:
    token = ":".join(str(p) for p in parts)
    digest = hashlib.sha256(token.encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class _Retry(Exception):
    """Internal: restart the current sampling attempt."""


def _rejection_choice(rng: random.Random, pool, valid) -> str:
    """Uniform draw over the valid members of pool, or _Retry if none."""
    if not pool:
        raise _Retry
    for _ in range(32):
        word = pool[rng.randrange(len(pool))]
        if valid(word):
            return word
    candidates = [w for w in pool if valid(w)]
    if not candidates:
        raise _Retry
    return rng.choice(candidates)


# ---------------------------------------------------------------------------
# Pool precomputation


class _Pools:
    """Per-lexicon sampling pools with deterministic ordering."""

    def __init__(self, lex: Lexicon):
        self.lex = lex
        self.assoc = lex.associations
        self._role_pools: dict[tuple[str, str], tuple[str, ...]] = {}
        self._implausible_pools: dict[tuple[str, str], tuple[str, ...]] = {}
        self._adjectives_for_noun: dict[str, tuple[str, ...]] = {}
        self.transitive = tuple(lex.verbs_by_kind["transitive"])
        self.ditransitive = tuple(lex.verbs_by_kind["ditransitive"])
        self.padding_verbs = tuple(lex.verbs_by_kind["intransitive_padding"])
        self.with_nouns = tuple(n.lemma for n in lex.pp_with_nouns)
        self.countries = tuple(n.lemma for n in lex.countries)
        self.sampling_noun_lemmas = frozenset(n.lemma for n in lex.sampling_nouns)

    def verbs_for(self, structure: Construction) -> tuple[VerbEntry, ...]:
        return self.ditransitive if structure.alternation == "dative" else self.transitive

    def role_categories(self, verb: VerbEntry, role: str) -> frozenset[str]:
        return {
            "agent": verb.agent_categories,
            "patient": verb.patient_categories,
            "recipient": verb.recipient_categories,
        }[role]

    def role_pool(self, verb: VerbEntry, role: str) -> tuple[str, ...]:
        key = (verb.lemma, role)
        pool = self._role_pools.get(key)
        if pool is None:
            cats = self.role_categories(verb, role)
            pool = tuple(n.lemma for n in self.lex.sampling_nouns if n.categories & cats)
            self._role_pools[key] = pool
        return pool

    def implausible_pool(self, verb: VerbEntry, role: str) -> tuple[str, ...]:
        key = (verb.lemma, role)
        pool = self._implausible_pools.get(key)
        if pool is None:
            cats = self.role_categories(verb, role)
            pool = tuple(
                n.lemma
                for n in self.lex.sampling_nouns
                if not (n.categories & cats) and "country" not in n.categories
            )
            self._implausible_pools[key] = pool
        return pool

    def adjectives_for(self, noun_lemma: str) -> tuple[str, ...]:
        pool = self._adjectives_for_noun.get(noun_lemma)
        if pool is None:
            cats = self.lex.noun_by_lemma[noun_lemma].categories
            pool = tuple(
                a.lemma
                for a in self.lex.adjectives
                if a.frequency_rank <= self.lex.frequency_cutoff
                and a.compatible_categories & cats
            )
            self._adjectives_for_noun[noun_lemma] = pool
        return pool

    def fits_role(self, noun_lemma: str, verb: VerbEntry, role: str) -> bool:
        noun = self.lex.noun_by_lemma.get(noun_lemma)
        return noun is not None and bool(noun.categories & self.role_categories(verb, role))

    def neighbors(self, lemma: str) -> frozenset[str]:
        return self.assoc.neighbors(lemma)


def _roles_for(structure: Construction) -> tuple[str, ...]:
    if structure.alternation == "dative":
        return ("agent", "recipient", "patient")
    return ("agent", "patient")


# ---------------------------------------------------------------------------
# Similarity partners


def _similarity_partners(lex: Lexicon, threshold: float) -> dict[str, tuple[str, ...]]:
    """Lemma -> same-word-class partners that are associated and similar."""
    partners: dict[str, set[str]] = {}
    for (cue, tgt), strength in lex.associations.entries.items():
        if strength <= 0.0 or cue == tgt:
            continue
        if cue not in lex.embeddings or tgt not in lex.embeddings:
            continue
        kind_a, kind_b = lex.content_kind(cue), lex.content_kind(tgt)
        if kind_a is None or kind_a != kind_b:
            continue
        if kind_a == "verb" and lex.verb_by_lemma[cue].kind != lex.verb_by_lemma[tgt].kind:
            continue
        if cosine_similarity(cue, tgt, lex) < threshold:
            continue
        partners.setdefault(cue, set()).add(tgt)
        partners.setdefault(tgt, set()).add(cue)
    return {lemma: tuple(sorted(ps)) for lemma, ps in partners.items()}


def core_similarity_samples(lex: Lexicon, seed: int) -> list[float]:
    """Cosine similarities of role-matched word pairs in a small core sample."""
    cond = ConditionSpec(
        name="core",
        targets_per_structure=THRESHOLD_SAMPLE_TARGETS,
        primes_per_target=DEFAULT_PRIMES_PER_TARGET,
        seed=_child_rng(seed, "similarity-threshold").randrange(2**32),
    )
    corpus = build_corpus(cond, lex)
    samples: list[float] = []
    for items in corpus.values():
        for item in items:
            t_spec = item.target.spec
            for pair in item.prime_pairs:
                p_spec = pair.congruent[0].spec
                samples.append(cosine_similarity(p_spec.verb, t_spec.verb, lex))
                for role, t_np in t_spec.role_nps().items():
                    p_np = p_spec.role_nps()[role]
                    samples.append(cosine_similarity(p_np.noun, t_np.noun, lex))
    return samples


def resolve_similarity_threshold(lex: Lexicon, seed: int) -> float:
    return similarity_threshold(core_similarity_samples(lex, seed), SIMILARITY_PERCENTILE)


# ---------------------------------------------------------------------------
# Sentence construction pieces


def _assemble_spec(structure: Construction, verb: VerbEntry, determiner: str, tense: str,
                   nouns: dict[str, str], implausible: bool = False) -> SentenceSpec:
    nps = {role: NounPhraseSpec(noun=lemma, determiner=determiner) for role, lemma in nouns.items()}
    return SentenceSpec(
        construction=structure,
        verb=verb.lemma,
        tense=tense,
        agent=nps.get("agent"),
        patient=nps.get("patient"),
        recipient=nps.get("recipient"),
        implausible=implausible,
    )


def _sample_role_nouns(rng: random.Random, structure: Construction, verb: VerbEntry,
                       pools: _Pools, noun_for_role) -> dict[str, str]:
    taken: set[str] = set()
    nouns: dict[str, str] = {}
    for role in _roles_for(structure):
        lemma = noun_for_role(role, taken)
        taken.add(lemma)
        nouns[role] = lemma
    return nouns


def _complexify(rng: random.Random, spec: SentenceSpec, pools: _Pools, shape: str,
                word_ok) -> SentenceSpec:
    """Attach the given complexity shape to one randomly chosen role NP."""
    roles = sorted(spec.role_nps())
    rng.shuffle(roles)
    for role in roles:
        np_spec = spec.role_nps()[role]
        adjective = None
        pp = None
        if shape in ("adjective", "adjective_pp"):
            adj_pool = [a for a in pools.adjectives_for(np_spec.noun) if word_ok(a)]
            if not adj_pool:
                continue
            adjective = rng.choice(adj_pool)
        if shape in ("pp", "adjective_pp"):
            with_pool = [n for n in pools.with_nouns if word_ok(n)]
            from_pool = [n for n in pools.countries if word_ok(n)]
            kinds = [k for k, p in (("with", with_pool), ("from", from_pool)) if p]
            if not kinds:
                continue
            kind = rng.choice(kinds)
            if kind == "with":
                inner = rng.choice(with_pool)
                inner_adj = None
                if rng.random() < 0.5:
                    inner_pool = [
                        a for a in pools.adjectives_for(inner)
                        if word_ok(a) and a != adjective and a != inner
                    ]
                    if inner_pool:
                        inner_adj = rng.choice(inner_pool)
                pp = PPSpec(kind="with", noun=inner,
                            determiner=np_spec.determiner, adjective=inner_adj)
            else:
                pp = PPSpec(kind="from", noun=rng.choice(from_pool))
        return replace(spec, **{role: replace(np_spec, adjective=adjective, pp=pp)})
    raise _Retry


def padding_sentence(
    lex: Lexicon,
    rng: random.Random,
    exclude_content: frozenset[str] = frozenset(),
    exclude_texts: frozenset[str] = frozenset(),
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Sentence:
    """Short intransitive filler: personal pronoun + modal/do auxiliary + verb.

    The verb must neither appear in nor be associated with
    ``exclude_content``; ``exclude_texts`` prevents repetition inside one
    padding context.
    """
    pool = lex.verbs_by_kind["intransitive_padding"]
    if not pool:
        raise GenerationError("lexicon has no intransitive padding verbs")
    assoc = lex.associations
    for _ in range(max_attempts):
        verb = rng.choice(pool)
        if verb.lemma in exclude_content or assoc.neighbors(verb.lemma) & exclude_content:
            continue
        spec = SentenceSpec(
            construction=Construction.INTR_PAD,
            verb=verb.lemma,
            tense="present",
            pronoun_subject=rng.choice(PADDING_PRONOUNS),
            auxiliary=rng.choice(PADDING_AUXILIARIES),
        )
        sentence = realize(spec, lex)
        if sentence.text in exclude_texts:
            continue
        return sentence
    raise GenerationError("could not sample a padding sentence disjoint from the context")


# ---------------------------------------------------------------------------
# Condition sampler


class _ConditionSampler:
    def __init__(self, cond: ConditionSpec, lex: Lexicon, rules: _Rules,
                 partners: dict[str, tuple[str, ...]] | None):
        self.cond = cond
        self.lex = lex
        self.rules = rules
        self.pools = _Pools(lex)
        self.partners = partners or {}

    def _word_clear_of(self, word: str, other_content: frozenset[str],
                       allowed: frozenset[str] = frozenset()) -> bool:
        """Lexically and associatively disjoint from other_content, except for
        the explicitly allowed counterparts."""
        if word in other_content:
            return False
        return not (self.pools.neighbors(word) & (other_content - allowed))

    # -- target

    def _target_verb_pool(self, structure: Construction) -> list[VerbEntry]:
        rules = self.rules
        verbs = list(self.pools.verbs_for(structure))
        dative = structure.alternation == "dative"
        if "verb" in rules.similar_roles:
            def has_partner(v: VerbEntry) -> bool:
                for p in self.partners.get(v.lemma, ()):
                    q = self.lex.verb_by_lemma.get(p)
                    if q is None or q.kind != v.kind:
                        continue
                    if dative and rules.preposition == "differ" and q.po_preposition == v.po_preposition:
                        continue
                    return True
                return False

            verbs = [v for v in verbs if has_partner(v)]
        elif dative and rules.preposition == "differ" and "verb" not in rules.shared_roles \
                and not rules.identical:
            verbs = [
                v for v in verbs
                if any(w.po_preposition != v.po_preposition for w in self.pools.ditransitive)
            ]
        if not verbs:
            raise GenerationError(
                f"no eligible {structure.value} verbs for condition {self.cond.condition_id}"
            )
        return verbs

    def sample_target(self, rng: random.Random, structure: Construction,
                      used_texts: set[str]) -> Sentence:
        rules = self.rules
        pool = self._target_verb_pool(structure)
        noun_similar = rules.similar_roles - {"verb"}
        for _ in range(self.cond.max_attempts):
            verb = rng.choice(pool)
            tense = "past" if structure.alternation == "dative" else rng.choice(["past", "present"])
            det = rng.choice([DET_A_AN, DET_THE])

            def noun_for_role(role: str, taken: set[str]) -> str:
                role_pool = self.pools.role_pool(verb, role)
                if role in noun_similar:
                    return _rejection_choice(
                        rng, role_pool,
                        lambda w: w not in taken and bool(self.partners.get(w)),
                    )
                return _rejection_choice(rng, role_pool, lambda w: w not in taken)

            try:
                nouns = _sample_role_nouns(rng, structure, verb, self.pools, noun_for_role)
                spec = _assemble_spec(structure, verb, det, tense, nouns)
                if rules.complexity in ("target", "both"):
                    content = {spec.verb, *nouns.values()}
                    spec = _complexify(rng, spec, self.pools, rng.choice(COMPLEX_SHAPES),
                                       lambda w: w not in content)
            except _Retry:
                continue
            sentence = realize(spec, self.lex)
            if sentence.text in used_texts:
                continue
            return sentence
        raise GenerationError(
            f"exhausted attempts sampling a distinct {structure.value} target "
            f"for condition {self.cond.condition_id}"
        )

    # -- congruent prime

    def _prime_verb(self, rng: random.Random, structure: Construction, t_spec: SentenceSpec,
                    target_content: frozenset[str], shared_roles: set[str]) -> VerbEntry:
        rules = self.rules
        lex = self.lex
        t_verb = lex.verb_by_lemma[t_spec.verb]
        dative = structure.alternation == "dative"

        if "verb" in shared_roles:
            return t_verb

        def compatible_with_shared(v: VerbEntry) -> bool:
            for role in shared_roles:
                if not self.pools.fits_role(t_spec.role_nps()[role].noun, v, role):
                    return False
            return True

        if "verb" in rules.similar_roles:
            candidates = [
                lex.verb_by_lemma[p]
                for p in self.partners.get(t_spec.verb, ())
                if lex.content_kind(p) == "verb"
                and lex.verb_by_lemma[p].kind == t_verb.kind
                and self._word_clear_of(p, target_content, allowed=frozenset({t_spec.verb}))
            ]
        else:
            candidates = [
                v for v in self.pools.verbs_for(structure)
                if v.lemma != t_spec.verb and self._word_clear_of(v.lemma, target_content)
            ]
        if dative:
            if rules.preposition == "differ":
                candidates = [v for v in candidates if v.po_preposition != t_verb.po_preposition]
            else:
                candidates = [v for v in candidates if v.po_preposition == t_verb.po_preposition]
        if shared_roles:
            candidates = [v for v in candidates if compatible_with_shared(v)]
        if not candidates:
            raise _Retry
        return rng.choice(candidates)

    def sample_congruent_prime(
        self,
        rng: random.Random,
        target: Sentence,
        used_content: set[frozenset[str]],
        shared_role_override: str | None = None,
    ) -> Sentence:
        rules = self.rules
        t_spec = target.spec
        structure = t_spec.construction
        target_content = target.content_lemmas
        if rules.identical:
            return target

        target_det = t_spec.role_nps()["agent"].determiner
        if rules.determiners == "share":
            det = target_det
        else:
            det = DET_THE if target_det == DET_A_AN else DET_A_AN
        if structure.alternation == "dative":
            tense = "past"
        elif rules.tense == "share":
            tense = t_spec.tense
        else:
            tense = "present" if t_spec.tense == "past" else "past"

        shared_roles = set(rules.shared_roles)
        if shared_role_override is not None:
            shared_roles.add(shared_role_override)
        shared_roles &= {"verb", *t_spec.role_nps()}
        noun_similar = rules.similar_roles & set(t_spec.role_nps())

        for _ in range(self.cond.max_attempts):
            try:
                verb = self._prime_verb(rng, structure, t_spec, target_content, shared_roles)

                def noun_for_role(role: str, taken: set[str]) -> str:
                    t_noun = t_spec.role_nps()[role].noun
                    if role in shared_roles:
                        if t_noun in taken:
                            raise _Retry
                        return t_noun
                    if role in noun_similar:
                        candidates = [
                            p for p in self.partners.get(t_noun, ())
                            if p not in taken
                            and p in self.pools.sampling_noun_lemmas
                            and self.pools.fits_role(p, verb, role)
                            and self._word_clear_of(p, target_content,
                                                    allowed=frozenset({t_noun}))
                        ]
                        if not candidates:
                            raise _Retry
                        return rng.choice(candidates)
                    pool = (
                        self.pools.implausible_pool(verb, role)
                        if rules.implausible_prime
                        else self.pools.role_pool(verb, role)
                    )
                    return _rejection_choice(
                        rng, pool,
                        lambda w: w not in taken and self._word_clear_of(w, target_content),
                    )

                nouns = _sample_role_nouns(rng, structure, verb, self.pools, noun_for_role)
                spec = _assemble_spec(structure, verb, det, tense, nouns,
                                      implausible=rules.implausible_prime)
                if rules.complexity in ("prime", "both"):
                    if rules.complexity == "both":
                        target_shape = next(
                            np.shape for np in t_spec.role_nps().values() if np.is_complex
                        )
                        shape = rng.choice([s for s in COMPLEX_SHAPES if s != target_shape])
                    else:
                        shape = rng.choice(COMPLEX_SHAPES)
                    own = {spec.verb, *nouns.values()}
                    spec = _complexify(
                        rng, spec, self.pools, shape,
                        lambda w: w not in own and self._word_clear_of(w, target_content),
                    )
            except _Retry:
                continue
            sentence = realize(spec, self.lex)
            if sentence.content_lemmas in used_content:
                continue
            return sentence
        raise GenerationError(
            f"exhausted attempts sampling a prime for condition {self.cond.condition_id} "
            f"({structure.value} target {target.text!r})"
        )

    # -- viability precheck

    def prime_capacity(self, target: Sentence, limit: int) -> int | None:
        """How many content-distinct congruent primes this target supports.

        Returns None when the free noun slots make the space effectively
        unbounded, otherwise a count clipped at ``limit``.  Targets below the
        required capacity are skipped rather than ground through the
        rejection sampler.
        """
        rules = self.rules
        if rules.identical:
            return None
        t_spec = target.spec
        structure = t_spec.construction
        target_content = target.content_lemmas
        t_verb = self.lex.verb_by_lemma[t_spec.verb]
        dative = structure.alternation == "dative"
        roles = _roles_for(structure)
        noun_similar = rules.similar_roles & set(roles)
        # overlap_random_noun shares one noun per pair, leaving the others free.
        shared_nouns = rules.shared_roles & set(roles)
        free_roles = set(roles) - noun_similar - shared_nouns

        if "verb" in rules.shared_roles:
            verbs = [t_verb]
        elif "verb" in rules.similar_roles:
            verbs = [
                self.lex.verb_by_lemma[p]
                for p in self.partners.get(t_spec.verb, ())
                if self.lex.content_kind(p) == "verb"
                and self.lex.verb_by_lemma[p].kind == t_verb.kind
                and self._word_clear_of(p, target_content, allowed=frozenset({t_spec.verb}))
            ]
        else:
            verbs = [
                v for v in self.pools.verbs_for(structure)
                if v.lemma != t_spec.verb and self._word_clear_of(v.lemma, target_content)
            ]
        if dative and "verb" not in rules.shared_roles:
            if rules.preposition == "differ":
                verbs = [v for v in verbs if v.po_preposition != t_verb.po_preposition]
            else:
                verbs = [v for v in verbs if v.po_preposition == t_verb.po_preposition]
        if shared_nouns:
            verbs = [
                v for v in verbs
                if all(
                    self.pools.fits_role(t_spec.role_nps()[role].noun, v, role)
                    for role in shared_nouns
                )
            ]
        if not verbs:
            return 0

        def partner_options(verb: VerbEntry, role: str) -> int:
            t_noun = t_spec.role_nps()[role].noun
            return sum(
                1
                for p in self.partners.get(t_noun, ())
                if p in self.pools.sampling_noun_lemmas
                and self.pools.fits_role(p, verb, role)
                and self._word_clear_of(p, target_content, allowed=frozenset({t_noun}))
            )

        if noun_similar and not free_roles:
            total = 0
            for verb in verbs:
                combo = 1
                for role in noun_similar:
                    combo *= partner_options(verb, role)
                total += combo
                if total >= limit:
                    return limit
            return total
        if noun_similar:
            viable = any(
                all(partner_options(verb, role) > 0 for role in noun_similar)
                for verb in verbs
            )
            return None if viable else 0
        if not free_roles:
            # Content sets differ only in the verb.
            return min(limit, len(verbs))
        return None

    # -- exhaustive enumeration for the all-words similarity condition

    def enumerate_similar_primes(self, target: Sentence, cap: int) -> list[Sentence]:
        t_spec = target.spec
        structure = t_spec.construction
        target_content = target.content_lemmas
        roles = _roles_for(structure)
        t_verb = self.lex.verb_by_lemma[t_spec.verb]
        target_det = t_spec.role_nps()["agent"].determiner
        det = DET_THE if target_det == DET_A_AN else DET_A_AN
        tense = "past" if structure.alternation == "dative" else (
            "present" if t_spec.tense == "past" else "past"
        )
        verb_candidates = [
            self.lex.verb_by_lemma[p]
            for p in self.partners.get(t_spec.verb, ())
            if self.lex.content_kind(p) == "verb"
            and self.lex.verb_by_lemma[p].kind == t_verb.kind
            and self._word_clear_of(p, target_content, allowed=frozenset({t_spec.verb}))
        ]
        if structure.alternation == "dative":
            verb_candidates = [
                v for v in verb_candidates if v.po_preposition != t_verb.po_preposition
            ]
        results: list[Sentence] = []
        seen: set[frozenset[str]] = set()
        for verb in verb_candidates:
            role_options = []
            for role in roles:
                t_noun = t_spec.role_nps()[role].noun
                role_options.append([
                    p for p in self.partners.get(t_noun, ())
                    if p in self.pools.sampling_noun_lemmas
                    and self.pools.fits_role(p, verb, role)
                    and self._word_clear_of(p, target_content, allowed=frozenset({t_noun}))
                ])
            for combo in product(*role_options):
                if len(set(combo)) != len(combo):
                    continue
                spec = _assemble_spec(structure, verb, det, tense, dict(zip(roles, combo)))
                sentence = realize(spec, self.lex)
                if sentence.content_lemmas in seen:
                    continue
                seen.add(sentence.content_lemmas)
                results.append(sentence)
                if len(results) >= cap:
                    return results
        return results


# ---------------------------------------------------------------------------
# Corpus assembly


def _build_prime_pair(sampler: _ConditionSampler, cond: ConditionSpec, rng: random.Random,
                      target: Sentence, used_content: set[frozenset[str]]) -> PrimePair:
    rules = sampler.rules
    if rules.context == "cumulative":
        primes: list[Sentence] = []
        for _ in range(cond.k or 1):
            prime = sampler.sample_congruent_prime(rng, target, used_content)
            used_content.add(prime.content_lemmas)
            primes.append(prime)
        incongruent = realize(alternate(primes[-1].spec), sampler.lex)
        return PrimePair(congruent=tuple(primes), incongruent=(incongruent,))

    shared_role = None
    if rules.random_shared_noun:
        shared_role = rng.choice(sorted(target.spec.role_nps()))
    prime = sampler.sample_congruent_prime(rng, target, used_content, shared_role)
    if not rules.identical:
        used_content.add(prime.content_lemmas)
    incongruent = realize(alternate(prime.spec), sampler.lex)

    if rules.context == "recency":
        pads: list[Sentence] = []
        exclude = frozenset(prime.content_lemmas | target.content_lemmas)
        texts: set[str] = set()
        for _ in range(RECENCY_CONTEXT_LENGTH - 1):
            pad = padding_sentence(
                sampler.lex, rng, exclude_content=exclude,
                exclude_texts=frozenset(texts), max_attempts=cond.max_attempts,
            )
            texts.add(pad.text)
            pads.append(pad)
        # position counts back from the target: 1 = adjacent, 4 = farthest.
        slot = RECENCY_CONTEXT_LENGTH - (cond.position or 1)
        context = pads[:slot] + [prime] + pads[slot:]
        return PrimePair(congruent=tuple(context), incongruent=(incongruent,))

    return PrimePair(congruent=(prime,), incongruent=(incongruent,))


def build_structure(cond: ConditionSpec, lex: Lexicon, structure: Construction,
                    rules: _Rules | None = None,
                    partners: dict[str, tuple[str, ...]] | None = None) -> list[PrimeTargetItem]:
    rules = rules if rules is not None else _rules_for(cond)
    if rules.similar_roles and partners is None:
        if cond.similarity_threshold is None:
            cond = replace(cond, similarity_threshold=resolve_similarity_threshold(lex, cond.seed))
        partners = _similarity_partners(lex, cond.similarity_threshold)
    sampler = _ConditionSampler(cond, lex, rules, partners)
    items: list[PrimeTargetItem] = []
    used_texts: set[str] = set()
    primes_per_target = 1 if rules.identical else cond.primes_per_target
    # Unviable targets are skipped and resampled, so allow extra candidates.
    target_budget = cond.targets_per_structure * 8 + 32

    index = 0
    while len(items) < cond.targets_per_structure and index < target_budget:
        rng = _child_rng(cond.seed, cond.condition_id, structure.value, "target", index)
        index += 1
        target = sampler.sample_target(rng, structure, used_texts)
        used_texts.add(target.text)

        if cond.name == "sem_sim_all":
            primes = sampler.enumerate_similar_primes(target, cap=cond.primes_per_target)
            if not primes:
                continue
            pairs = tuple(
                PrimePair(congruent=(p,), incongruent=(realize(alternate(p.spec), lex),))
                for p in primes
            )
        else:
            needed = primes_per_target * (cond.k or 1)
            capacity = sampler.prime_capacity(target, needed)
            if cond.name == "overlap_all_nouns":
                # Content sets here differ only in the verb, so the verb
                # inventory caps the pair count; keep whatever it admits.
                if capacity == 0:
                    continue
                wanted = min(primes_per_target, capacity or primes_per_target)
            else:
                if capacity is not None and capacity < needed:
                    continue
                wanted = primes_per_target
            used_content: set[frozenset[str]] = set()
            try:
                pairs = tuple(
                    _build_prime_pair(sampler, cond, rng, target, used_content)
                    for _ in range(wanted)
                )
            except GenerationError:
                # Capacity estimation is approximate; drop the target and move on.
                continue

        items.append(
            PrimeTargetItem(
                item_id=f"{cond.condition_id}-{structure.value}-{len(items):05d}",
                condition=cond,
                structure=structure,
                alternation=structure.alternation,
                target=target,
                prime_pairs=pairs,
            )
        )
    if cond.name != "sem_sim_all" and len(items) < cond.targets_per_structure:
        raise GenerationError(
            f"could only build {len(items)}/{cond.targets_per_structure} targets "
            f"for {cond.condition_id} {structure.value}"
        )
    return items


def build_corpus(cond: ConditionSpec, lex: Lexicon) -> dict[Construction, list[PrimeTargetItem]]:
    """Build the condition's corpus for every target structure.

    Deterministic for a given (condition, lexicon); the semantic-similarity
    conditions resolve their cosine threshold from a core-corpus sample first
    and record it on the returned items' condition.
    """
    rules = _rules_for(cond)
    partners = None
    if rules.similar_roles:
        if cond.similarity_threshold is None:
            cond = replace(cond, similarity_threshold=resolve_similarity_threshold(lex, cond.seed))
        partners = _similarity_partners(lex, cond.similarity_threshold)
    return {
        structure: build_structure(cond, lex, structure, rules, partners)
        for structure in STRUCTURES
    }


# ---------------------------------------------------------------------------
# Synthetic scorer-training text


def synthesize_training_corpus(
    lex: Lexicon,
    n_pairs: int,
    weights: dict[str, float],
    seed: int,
) -> list[str]:
    """Concatenated two-sentence strings with a chosen construction mix.

    Used to train the reference n-gram scorer; each line is "S1. S2." where
    each sentence's construction is drawn from ``weights`` (e.g. a corpus
    skewed 90/10 toward one dative variant).
    """
    names = sorted(weights)
    if n_pairs < 1 or not names or sum(weights[n] for n in names) <= 0:
        raise GenerationError("need n_pairs >= 1 and positive construction weights")
    constructions = [Construction(n) for n in names]
    probs = [weights[n] for n in names]
    rng = _child_rng(seed, "training-corpus")
    pools = _Pools(lex)

    def simple_sentence() -> Sentence:
        structure = rng.choices(constructions, weights=probs)[0]
        verbs = pools.verbs_for(structure)
        if not verbs:
            raise GenerationError(f"no verbs available for {structure.value}")
        for _ in range(DEFAULT_MAX_ATTEMPTS):
            verb = verbs[rng.randrange(len(verbs))]
            det = rng.choice([DET_A_AN, DET_THE])
            tense = "past" if structure.alternation == "dative" else rng.choice(["past", "present"])
            try:
                nouns = _sample_role_nouns(
                    rng, structure, verb, pools,
                    lambda role, taken: _rejection_choice(
                        rng, pools.role_pool(verb, role), lambda w: w not in taken
                    ),
                )
            except _Retry:
                continue
            return realize(_assemble_spec(structure, verb, det, tense, nouns), lex)
        raise GenerationError("could not sample a training sentence")

    return [join_context([simple_sentence(), simple_sentence()]) for _ in range(n_pairs)]


def default_condition_matrix(seed: int = 0,
                             targets_per_structure: int = DEFAULT_TARGETS_PER_STRUCTURE,
                             primes_per_target: int = DEFAULT_PRIMES_PER_TARGET) -> list[ConditionSpec]:
    """The full default experiment matrix (one spec per condition variant)."""
    common = dict(targets_per_structure=targets_per_structure,
                  primes_per_target=primes_per_target, seed=seed)
    specs = [
        ConditionSpec(name="core", **common),
        ConditionSpec(name="sem_sim_verb", **common),
        ConditionSpec(name="sem_sim_nouns", **common),
        ConditionSpec(name="sem_sim_all", **common),
        ConditionSpec(name="overlap_random_noun", **common),
        ConditionSpec(name="overlap_all_nouns", **common),
        ConditionSpec(name="overlap_verb", **common),
        ConditionSpec(name="overlap_function_words", **common),
        ConditionSpec(name="identical", **common),
        ConditionSpec(name="implausible_prime", **common),
    ]
    specs.extend(ConditionSpec(name="recency", position=p, **common) for p in range(1, 5))
    specs.extend(ConditionSpec(name="cumulative", k=k, **common) for k in range(1, 6))
    specs.extend(ConditionSpec(name="complexity", mode=m, **common) for m in COMPLEXITY_MODES)
    return specs
