"""Sentence templates: abstract specs, surface realization, and alternation.

Four templated constructions are supported, two per alternation, plus a short
padding pattern used to separate prime and target in recency experiments:

* ``ACT``  -- Dt N_agent V Dt N_patient
* ``PASS`` -- Dt N_patient Aux V_participle by Dt N_agent
* ``DO``   -- Dt N_agent V Dt N_recipient Dt N_patient
* ``PO``   -- Dt N_agent V Dt N_patient Pr Dt N_recipient
* ``INTR_PAD`` -- Pronoun Aux V_base

Surface strings are produced exclusively by :func:`realize`; they start with a
capital letter and carry no terminal punctuation (the period is added when
sentences are concatenated for scoring).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .lexicon import Lexicon, WITH_PP_CATEGORIES


class Construction(str, Enum):
    ACT = "ACT"
    PASS = "PASS"
    DO = "DO"
    PO = "PO"
    INTR_PAD = "INTR_PAD"

    @property
    def alternation(self) -> str:
        if self in (Construction.DO, Construction.PO):
            return "dative"
        if self in (Construction.ACT, Construction.PASS):
            return "transitive"
        return "padding"


#: Content-preserving counterpart within each alternation.
COUNTERPART = {
    Construction.ACT: Construction.PASS,
    Construction.PASS: Construction.ACT,
    Construction.DO: Construction.PO,
    Construction.PO: Construction.DO,
}

DET_A_AN = "a_an"
DET_THE = "the"

PADDING_PRONOUNS = ("i", "you", "he", "she", "we", "they")
PADDING_AUXILIARIES = ("might", "may", "could", "would", "should", "must", "can", "will", "did")


class RealizationError(ValueError):
    """Raised when a sentence spec cannot be realized against the lexicon."""


@dataclass(frozen=True)
class PPSpec:
    """Prepositional modifier of a noun phrase.

    ``with`` takes an inner Dt (A) N phrase over clothing/device/container
    nouns; ``from`` takes a bare country name.
    """

    kind: str  # "with" | "from"
    noun: str
    determiner: str | None = None  # inner determiner, "with" only
    adjective: str | None = None   # inner adjective, "with" only


@dataclass(frozen=True)
class NounPhraseSpec:
    noun: str
    determiner: str  # DET_A_AN | DET_THE
    adjective: str | None = None
    pp: PPSpec | None = None

    @property
    def is_complex(self) -> bool:
        return self.adjective is not None or self.pp is not None

    @property
    def shape(self) -> str:
        """Complexity shape: simple, adjective, pp, or adjective_pp."""
        if self.adjective is not None and self.pp is not None:
            return "adjective_pp"
        if self.adjective is not None:
            return "adjective"
        if self.pp is not None:
            return "pp"
        return "simple"


@dataclass(frozen=True)
class SentenceSpec:
    construction: Construction
    verb: str
    tense: str  # "past" | "present"
    agent: NounPhraseSpec | None = None
    patient: NounPhraseSpec | None = None
    recipient: NounPhraseSpec | None = None
    pronoun_subject: str | None = None  # padding only
    auxiliary: str | None = None        # padding only
    implausible: bool = False

    def role_nps(self) -> dict[str, NounPhraseSpec]:
        roles = {}
        if self.agent is not None:
            roles["agent"] = self.agent
        if self.patient is not None:
            roles["patient"] = self.patient
        if self.recipient is not None:
            roles["recipient"] = self.recipient
        return roles


@dataclass(frozen=True)
class Sentence:
    spec: SentenceSpec
    text: str
    content_lemmas: frozenset[str]
    function_words: frozenset[str]


VOWEL_LETTERS = frozenset("aeiou")

# Words whose spelling and pronunciation disagree for a/an selection.
AN_EXCEPTIONS = frozenset({"hour", "honest", "honor", "honour", "heir", "herb"})
A_EXCEPTIONS = frozenset(
    {
        "university",
        "uniform",
        "union",
        "unit",
        "unique",
        "useful",
        "user",
        "usual",
        "one",
        "once",
        "euro",
        "european",
        "ewe",
    }
)


def indefinite_article(phrase_head: str) -> str:
    """Choose "a" or "an" for the word immediately following the article."""
    if not phrase_head:
        raise ValueError("phrase head must be non-empty")
    head = phrase_head.lower()
    if head in AN_EXCEPTIONS:
        return "an"
    if head in A_EXCEPTIONS:
        return "a"
    return "an" if head[0] in VOWEL_LETTERS else "a"


def _noun_surface(lemma: str, lex: Lexicon) -> str:
    entry = lex.noun_by_lemma.get(lemma)
    if entry is not None and "country" in entry.categories:
        return lemma.capitalize()
    return lemma


def _check_np(np_spec: NounPhraseSpec, role: str, verb_cats: frozenset[str],
              spec: SentenceSpec, lex: Lexicon) -> None:
    noun = lex.noun_by_lemma.get(np_spec.noun)
    if noun is None:
        raise RealizationError(f"unknown noun {np_spec.noun!r}")
    if not noun.countable:
        raise RealizationError(f"uncountable noun {np_spec.noun!r} cannot fill a templated NP")
    if np_spec.determiner not in (DET_A_AN, DET_THE):
        raise RealizationError(f"unknown determiner {np_spec.determiner!r}")
    if verb_cats and not spec.implausible and not (noun.categories & verb_cats):
        raise RealizationError(
            f"noun {np_spec.noun!r} violates the {role} restriction of verb {spec.verb!r}"
        )
    if np_spec.adjective is not None:
        adj = lex.adjective_by_lemma.get(np_spec.adjective)
        if adj is None:
            raise RealizationError(f"unknown adjective {np_spec.adjective!r}")
        if not (adj.compatible_categories & noun.categories):
            raise RealizationError(
                f"adjective {np_spec.adjective!r} incompatible with noun {np_spec.noun!r}"
            )
    pp = np_spec.pp
    if pp is None:
        return
    inner = lex.noun_by_lemma.get(pp.noun)
    if inner is None:
        raise RealizationError(f"unknown noun {pp.noun!r} in prepositional phrase")
    if pp.kind == "with":
        if not inner.categories <= WITH_PP_CATEGORIES:
            raise RealizationError(f"noun {pp.noun!r} cannot head a 'with' phrase")
        if pp.determiner not in (DET_A_AN, DET_THE):
            raise RealizationError("'with' phrase needs an inner determiner")
        if pp.adjective is not None:
            adj = lex.adjective_by_lemma.get(pp.adjective)
            if adj is None:
                raise RealizationError(f"unknown adjective {pp.adjective!r}")
            if not (adj.compatible_categories & inner.categories):
                raise RealizationError(
                    f"adjective {pp.adjective!r} incompatible with noun {pp.noun!r}"
                )
    elif pp.kind == "from":
        if "country" not in inner.categories:
            raise RealizationError(f"'from' phrase requires a country, got {pp.noun!r}")
        if pp.determiner is not None or pp.adjective is not None:
            raise RealizationError("'from' phrase takes a bare country name")
    else:
        raise RealizationError(f"unknown prepositional phrase kind {pp.kind!r}")


def _np_words(np_spec: NounPhraseSpec, lex: Lexicon,
              content: set[str], function_words: set[str]) -> list[str]:
    head = np_spec.adjective if np_spec.adjective is not None else np_spec.noun
    det = "the" if np_spec.determiner == DET_THE else indefinite_article(head)
    function_words.add(det)
    words = [det]
    if np_spec.adjective is not None:
        words.append(np_spec.adjective)
        content.add(np_spec.adjective)
    words.append(_noun_surface(np_spec.noun, lex))
    content.add(np_spec.noun)
    pp = np_spec.pp
    if pp is not None:
        function_words.add(pp.kind)
        words.append(pp.kind)
        if pp.kind == "with":
            inner_head = pp.adjective if pp.adjective is not None else pp.noun
            inner_det = "the" if pp.determiner == DET_THE else indefinite_article(inner_head)
            function_words.add(inner_det)
            words.append(inner_det)
            if pp.adjective is not None:
                words.append(pp.adjective)
                content.add(pp.adjective)
        words.append(_noun_surface(pp.noun, lex))
        content.add(pp.noun)
    return words


def _verb_form(spec: SentenceSpec, lex: Lexicon) -> str:
    verb = lex.verb_by_lemma.get(spec.verb)
    if verb is None:
        raise RealizationError(f"unknown verb {spec.verb!r}")
    c = spec.construction
    if c is Construction.INTR_PAD:
        return spec.verb
    if c is Construction.PASS:
        if not verb.past_participle:
            raise RealizationError(f"verb {spec.verb!r} has no past participle")
        return verb.past_participle
    form = verb.past if spec.tense == "past" else verb.third_singular
    if not form:
        raise RealizationError(f"verb {spec.verb!r} lacks a {spec.tense} form")
    return form


def realize(spec: SentenceSpec, lex: Lexicon) -> Sentence:
    """Render a sentence spec into its surface string.

    Raises :class:`RealizationError` when an inflected form is missing or a
    role noun violates the verb's selectional restriction (unless the spec is
    flagged implausible).
    """
    if spec.tense not in ("past", "present"):
        raise RealizationError(f"unknown tense {spec.tense!r}")
    verb = lex.verb_by_lemma.get(spec.verb)
    if verb is None:
        raise RealizationError(f"unknown verb {spec.verb!r}")

    content: set[str] = {spec.verb}
    function_words: set[str] = set()
    c = spec.construction

    if c is Construction.INTR_PAD:
        if verb.kind != "intransitive_padding":
            raise RealizationError(f"verb {spec.verb!r} is not a padding verb")
        if spec.pronoun_subject not in PADDING_PRONOUNS:
            raise RealizationError(f"unknown pronoun {spec.pronoun_subject!r}")
        if spec.auxiliary not in PADDING_AUXILIARIES:
            raise RealizationError(f"unknown auxiliary {spec.auxiliary!r}")
        pronoun = "I" if spec.pronoun_subject == "i" else spec.pronoun_subject
        function_words.add(spec.auxiliary)
        words = [pronoun, spec.auxiliary, spec.verb]
    else:
        if verb.kind not in ("transitive", "ditransitive"):
            raise RealizationError(f"verb {spec.verb!r} cannot fill a {c.value} template")
        if c.alternation == "dative":
            if verb.kind != "ditransitive":
                raise RealizationError(f"verb {spec.verb!r} is not ditransitive")
            if spec.recipient is None:
                raise RealizationError("dative spec needs a recipient")
            if spec.tense != "past":
                raise RealizationError("dative sentences use the past simple tense")
        else:
            if verb.kind != "transitive":
                raise RealizationError(f"verb {spec.verb!r} is not transitive")
            if spec.recipient is not None:
                raise RealizationError("transitive spec must not carry a recipient")
        if spec.agent is None or spec.patient is None:
            raise RealizationError(f"{c.value} spec needs agent and patient")
        complex_count = sum(1 for np_spec in spec.role_nps().values() if np_spec.is_complex)
        if complex_count > 1:
            raise RealizationError("at most one complex NP per sentence")

        _check_np(spec.agent, "agent", verb.agent_categories, spec, lex)
        _check_np(spec.patient, "patient", verb.patient_categories, spec, lex)
        if spec.recipient is not None:
            _check_np(spec.recipient, "recipient", verb.recipient_categories, spec, lex)

        vform = _verb_form(spec, lex)
        if c is Construction.ACT:
            words = [
                *_np_words(spec.agent, lex, content, function_words),
                vform,
                *_np_words(spec.patient, lex, content, function_words),
            ]
        elif c is Construction.PASS:
            aux = "was" if spec.tense == "past" else "is"
            function_words.update({aux, "by"})
            words = [
                *_np_words(spec.patient, lex, content, function_words),
                aux,
                vform,
                "by",
                *_np_words(spec.agent, lex, content, function_words),
            ]
        elif c is Construction.DO:
            words = [
                *_np_words(spec.agent, lex, content, function_words),
                vform,
                *_np_words(spec.recipient, lex, content, function_words),
                *_np_words(spec.patient, lex, content, function_words),
            ]
        elif c is Construction.PO:
            prep = verb.po_preposition
            function_words.add(prep)
            words = [
                *_np_words(spec.agent, lex, content, function_words),
                vform,
                *_np_words(spec.patient, lex, content, function_words),
                prep,
                *_np_words(spec.recipient, lex, content, function_words),
            ]
        else:  # pragma: no cover - enum is exhaustive
            raise RealizationError(f"unknown construction {c!r}")

    text = " ".join(words)
    text = text[0].upper() + text[1:]
    return Sentence(
        spec=spec,
        text=text,
        content_lemmas=frozenset(content),
        function_words=frozenset(function_words),
    )


def alternate(spec: SentenceSpec) -> SentenceSpec:
    """Content-preserving counterpart in the other construction.

    Verb, role nouns, determiners, tense, and any complexity annotations are
    kept; only the construction label flips, so ``alternate`` is an involution
    on the four templated constructions.
    """
    if spec.construction not in COUNTERPART:
        raise ValueError(f"{spec.construction.value} has no alternation counterpart")
    return replace(spec, construction=COUNTERPART[spec.construction])


# ---------------------------------------------------------------------------
# Concatenation for scoring

SENTENCE_SEPARATOR = " "


def sentence_with_period(sentence: Sentence | str) -> str:
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    return text + "."


def join_context(sentences) -> str:
    """Concatenate context sentences: each ends with a period, single spaces."""
    return SENTENCE_SEPARATOR.join(sentence_with_period(s) for s in sentences)
