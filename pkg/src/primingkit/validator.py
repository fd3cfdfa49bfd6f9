"""Independent constraint checker for generated corpora.

The validator re-parses every surface string with a template-level recognizer
built directly on the lexicon (no sampling code is shared with the generator),
re-derives determiner classes, tenses, roles, and content words from the
parse, and checks the full constraint set of the item's condition.  Violations
are returned as data; an item emitted by the generator must validate to an
empty list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generator import (
    COMPLEX_SHAPES,
    RECENCY_CONTEXT_LENGTH,
    ConditionSpec,
    PrimeTargetItem,
)
from .lexicon import Lexicon, cosine_similarity, is_associated
from .sentences import (
    COUNTERPART,
    Construction,
    DET_A_AN,
    DET_THE,
    PADDING_AUXILIARIES,
    PADDING_PRONOUNS,
    Sentence,
)


@dataclass(frozen=True)
class Violation:
    constraint: str
    message: str
    prime_pair_index: int | None = None

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        where = "" if self.prime_pair_index is None else f" [pair {self.prime_pair_index}]"
        return f"{self.constraint}{where}: {self.message}"


class ParseFailure(ValueError):
    pass


@dataclass(frozen=True)
class ParsedNP:
    determiner_class: str
    noun: str
    adjective: str | None = None
    pp_kind: str | None = None
    pp_noun: str | None = None
    pp_adjective: str | None = None
    pp_determiner_class: str | None = None

    @property
    def is_complex(self) -> bool:
        return self.adjective is not None or self.pp_kind is not None

    @property
    def shape(self) -> str:
        if self.adjective is not None and self.pp_kind is not None:
            return "adjective_pp"
        if self.adjective is not None:
            return "adjective"
        if self.pp_kind is not None:
            return "pp"
        return "simple"

    def content(self) -> set[str]:
        words = {self.noun}
        if self.adjective:
            words.add(self.adjective)
        if self.pp_noun:
            words.add(self.pp_noun)
        if self.pp_adjective:
            words.add(self.pp_adjective)
        return words


@dataclass(frozen=True)
class ParsedSentence:
    construction: Construction
    verb: str
    tense: str
    roles: dict
    determiner_classes: frozenset[str]
    preposition: str | None
    auxiliary: str | None
    pronoun: str | None
    content: frozenset[str]


class TemplateRecognizer:
    """Parses realized surface strings back into construction + roles."""

    def __init__(self, lex: Lexicon):
        self.lex = lex
        self.nouns = set(lex.noun_by_lemma)
        self.adjectives = set(lex.adjective_by_lemma)
        self.countries = {n.lemma for n in lex.nouns if "country" in n.categories}
        self.past_to_lemma: dict[str, str] = {}
        self.third_to_lemma: dict[str, str] = {}
        self.participle_to_lemma: dict[str, str] = {}
        self.padding_lemmas = set()
        for verb in lex.verbs:
            if verb.kind == "intransitive_padding":
                self.padding_lemmas.add(verb.lemma)
                continue
            if verb.past:
                self.past_to_lemma[verb.past] = verb.lemma
            if verb.third_singular:
                self.third_to_lemma[verb.third_singular] = verb.lemma
            if verb.past_participle:
                self.participle_to_lemma[verb.past_participle] = verb.lemma

    # -- NP parsing

    def _det_class(self, token: str) -> str | None:
        if token in ("a", "an"):
            return DET_A_AN
        if token == "the":
            return DET_THE
        return None

    def _parse_np(self, tokens: list[str], i: int) -> tuple[ParsedNP, int]:
        det = self._det_class(tokens[i]) if i < len(tokens) else None
        if det is None:
            raise ParseFailure(f"expected a determiner at position {i}")
        i += 1
        adjective = None
        if (
            i + 1 < len(tokens)
            and tokens[i] in self.adjectives
            and tokens[i + 1] in self.nouns
        ):
            adjective = tokens[i]
            i += 1
        if i >= len(tokens) or tokens[i] not in self.nouns:
            raise ParseFailure(f"expected a noun at position {i}")
        noun = tokens[i]
        i += 1
        pp_kind = pp_noun = pp_adj = pp_det = None
        if i < len(tokens) and tokens[i] == "with":
            pp_kind = "with"
            i += 1
            pp_det = self._det_class(tokens[i]) if i < len(tokens) else None
            if pp_det is None:
                raise ParseFailure("'with' phrase must open with a determiner")
            i += 1
            if (
                i + 1 < len(tokens)
                and tokens[i] in self.adjectives
                and tokens[i + 1] in self.nouns
            ):
                pp_adj = tokens[i]
                i += 1
            if i >= len(tokens) or tokens[i] not in self.nouns:
                raise ParseFailure("'with' phrase lacks a noun")
            pp_noun = tokens[i]
            i += 1
        elif i < len(tokens) and tokens[i] == "from":
            pp_kind = "from"
            i += 1
            if i >= len(tokens) or tokens[i] not in self.countries:
                raise ParseFailure("'from' phrase requires a country name")
            pp_noun = tokens[i]
            i += 1
        return (
            ParsedNP(
                determiner_class=det,
                noun=noun,
                adjective=adjective,
                pp_kind=pp_kind,
                pp_noun=pp_noun,
                pp_adjective=pp_adj,
                pp_determiner_class=pp_det,
            ),
            i,
        )

    # -- sentence parsing

    def parse(self, text: str) -> ParsedSentence:
        if not text or not text[0].isupper():
            raise ParseFailure("sentence must start with a capital letter")
        if text.rstrip() != text or text.endswith("."):
            raise ParseFailure("sentence must carry no terminal punctuation")
        tokens = text.lower().split()

        if len(tokens) == 3 and tokens[0] in PADDING_PRONOUNS:
            if tokens[1] not in PADDING_AUXILIARIES:
                raise ParseFailure(f"unknown padding auxiliary {tokens[1]!r}")
            if tokens[2] not in self.padding_lemmas:
                raise ParseFailure(f"unknown padding verb {tokens[2]!r}")
            return ParsedSentence(
                construction=Construction.INTR_PAD,
                verb=tokens[2],
                tense="present",
                roles={},
                determiner_classes=frozenset(),
                preposition=None,
                auxiliary=tokens[1],
                pronoun=tokens[0],
                content=frozenset({tokens[2]}),
            )

        np1, i = self._parse_np(tokens, 0)
        if i < len(tokens) and tokens[i] in ("is", "was"):
            aux = tokens[i]
            i += 1
            if i >= len(tokens) or tokens[i] not in self.participle_to_lemma:
                raise ParseFailure("passive requires a known past participle")
            verb = self.participle_to_lemma[tokens[i]]
            i += 1
            if i >= len(tokens) or tokens[i] != "by":
                raise ParseFailure("passive requires 'by'")
            i += 1
            np2, i = self._parse_np(tokens, i)
            if i != len(tokens):
                raise ParseFailure("trailing tokens after passive template")
            roles = {"patient": np1, "agent": np2}
            return self._finish(Construction.PASS, verb,
                                "past" if aux == "was" else "present",
                                roles, preposition=None, auxiliary=aux)

        if i >= len(tokens):
            raise ParseFailure("sentence ends before the verb")
        form = tokens[i]
        if form in self.past_to_lemma:
            verb, tense = self.past_to_lemma[form], "past"
        elif form in self.third_to_lemma:
            verb, tense = self.third_to_lemma[form], "present"
        else:
            raise ParseFailure(f"unknown verb form {form!r}")
        i += 1
        np2, i = self._parse_np(tokens, i)
        if i == len(tokens):
            roles = {"agent": np1, "patient": np2}
            return self._finish(Construction.ACT, verb, tense, roles,
                                preposition=None, auxiliary=None)
        if tokens[i] in ("to", "for"):
            prep = tokens[i]
            np3, i = self._parse_np(tokens, i + 1)
            if i != len(tokens):
                raise ParseFailure("trailing tokens after the recipient phrase")
            roles = {"agent": np1, "patient": np2, "recipient": np3}
            return self._finish(Construction.PO, verb, tense, roles,
                                preposition=prep, auxiliary=None)
        np3, i = self._parse_np(tokens, i)
        if i != len(tokens):
            raise ParseFailure("trailing tokens after the second object")
        roles = {"agent": np1, "recipient": np2, "patient": np3}
        return self._finish(Construction.DO, verb, tense, roles,
                            preposition=None, auxiliary=None)

    def _finish(self, construction, verb, tense, roles, preposition, auxiliary) -> ParsedSentence:
        content: set[str] = {verb}
        det_classes: set[str] = set()
        for np in roles.values():
            content |= np.content()
            det_classes.add(np.determiner_class)
            if np.pp_determiner_class is not None:
                det_classes.add(np.pp_determiner_class)
        return ParsedSentence(
            construction=construction,
            verb=verb,
            tense=tense,
            roles=roles,
            determiner_classes=frozenset(det_classes),
            preposition=preposition,
            auxiliary=auxiliary,
            pronoun=None,
            content=frozenset(content),
        )


# ---------------------------------------------------------------------------
# Per-condition expectations


def _expected_shared_roles(cond: ConditionSpec) -> frozenset[str]:
    if cond.name == "overlap_verb":
        return frozenset({"verb"})
    if cond.name == "overlap_all_nouns":
        return frozenset({"agent", "patient", "recipient"})
    return frozenset()


def _similar_roles(cond: ConditionSpec) -> frozenset[str]:
    if cond.name == "sem_sim_verb":
        return frozenset({"verb"})
    if cond.name == "sem_sim_nouns":
        return frozenset({"agent", "patient", "recipient"})
    if cond.name == "sem_sim_all":
        return frozenset({"verb", "agent", "patient", "recipient"})
    return frozenset()


def _function_words_shared(cond: ConditionSpec) -> bool:
    return cond.name in ("overlap_function_words", "identical")


class _PairChecker:
    def __init__(self, cond: ConditionSpec, lex: Lexicon, recognizer: TemplateRecognizer):
        self.cond = cond
        self.lex = lex
        self.rec = recognizer

    def _add(self, out, constraint, message, index=None):
        out.append(Violation(constraint=constraint, message=message, prime_pair_index=index))

    def _parse(self, sentence: Sentence, label: str, index, out) -> ParsedSentence | None:
        try:
            parsed = self.rec.parse(sentence.text)
        except ParseFailure as exc:
            self._add(out, "template", f"{label} {sentence.text!r}: {exc}", index)
            return None
        if parsed.construction.value != sentence.spec.construction.value:
            self._add(
                out, "template",
                f"{label} {sentence.text!r} parses as {parsed.construction.value}, "
                f"spec says {sentence.spec.construction.value}", index,
            )
            return None
        self._check_spec_consistency(sentence, parsed, label, index, out)
        return parsed

    def _check_spec_consistency(self, sentence: Sentence, parsed: ParsedSentence,
                                label: str, index, out) -> None:
        """The stored spec and content sets must agree with the parsed surface."""
        spec = sentence.spec
        if parsed.content != sentence.content_lemmas:
            self._add(out, "spec_consistency",
                      f"{label}: stored content lemmas disagree with the surface", index)
        if parsed.construction is Construction.INTR_PAD:
            if spec.verb != parsed.verb or spec.auxiliary != parsed.auxiliary \
                    or spec.pronoun_subject != parsed.pronoun:
                self._add(out, "spec_consistency",
                          f"{label}: stored padding spec disagrees with the surface", index)
            return
        if spec.verb != parsed.verb:
            self._add(out, "spec_consistency",
                      f"{label}: spec verb {spec.verb!r} but surface verb {parsed.verb!r}",
                      index)
        if spec.tense != parsed.tense:
            self._add(out, "spec_consistency", f"{label}: spec tense disagrees", index)
        spec_nps = spec.role_nps()
        if set(spec_nps) != set(parsed.roles):
            self._add(out, "spec_consistency", f"{label}: spec roles disagree", index)
            return
        for role, np in parsed.roles.items():
            s_np = spec_nps[role]
            surface = (np.noun, np.adjective, np.pp_kind, np.pp_noun, np.pp_adjective,
                       np.determiner_class)
            stored_pp = s_np.pp
            stored = (
                s_np.noun, s_np.adjective,
                stored_pp.kind if stored_pp else None,
                stored_pp.noun if stored_pp else None,
                stored_pp.adjective if stored_pp else None,
                s_np.determiner,
            )
            if surface != stored:
                self._add(out, "spec_consistency",
                          f"{label}: the {role} phrase disagrees with its spec", index)

    # -- universal sentence-level checks

    def _check_sentence(self, parsed: ParsedSentence, label: str, index, out) -> None:
        lex = self.lex
        for lemma in parsed.content:
            noun = lex.noun_by_lemma.get(lemma)
            if noun is not None:
                if noun.frequency_rank > lex.frequency_cutoff:
                    self._add(out, "frequency",
                              f"{label}: noun {lemma!r} beyond the frequency cutoff", index)
                if not noun.countable:
                    self._add(out, "countable",
                              f"{label}: uncountable noun {lemma!r}", index)
        if len(parsed.determiner_classes) > 1:
            self._add(out, "determiner_consistency",
                      f"{label}: mixes determiner classes", index)
        if parsed.construction in (Construction.DO, Construction.PO) and parsed.tense != "past":
            self._add(out, "dative_tense", f"{label}: dative sentence not in past tense", index)
        complex_count = sum(1 for np in parsed.roles.values() if np.is_complex)
        if complex_count > 1:
            self._add(out, "complexity", f"{label}: more than one complex NP", index)

    def _check_selection(self, parsed: ParsedSentence, expect_implausible: bool,
                         label: str, index, out) -> None:
        verb = self.lex.verb_by_lemma.get(parsed.verb)
        if verb is None:
            self._add(out, "lexicon", f"{label}: unknown verb {parsed.verb!r}", index)
            return
        cats_by_role = {
            "agent": verb.agent_categories,
            "patient": verb.patient_categories,
            "recipient": verb.recipient_categories,
        }
        for role, np in parsed.roles.items():
            noun = self.lex.noun_by_lemma.get(np.noun)
            if noun is None:
                self._add(out, "lexicon", f"{label}: unknown noun {np.noun!r}", index)
                continue
            fits = bool(noun.categories & cats_by_role[role])
            if expect_implausible and fits:
                self._add(
                    out, "implausibility",
                    f"{label}: {role} {np.noun!r} satisfies the restriction of {parsed.verb!r}",
                    index,
                )
            if not expect_implausible and not fits:
                self._add(
                    out, "selectional_restriction",
                    f"{label}: {role} {np.noun!r} violates the restriction of {parsed.verb!r}",
                    index,
                )

    # -- pairwise checks between the congruent prime and the target

    def _similar_pairs(self, prime: ParsedSentence, target: ParsedSentence,
                       similar_roles: frozenset[str]) -> set[frozenset[str]]:
        """Role-matched word pairs designated as similar by this condition."""
        pairs: set[frozenset[str]] = set()
        if "verb" in similar_roles:
            pairs.add(frozenset((prime.verb, target.verb)))
        for role in similar_roles - {"verb"}:
            t_np = target.roles.get(role)
            p_np = prime.roles.get(role)
            if t_np is not None and p_np is not None:
                pairs.add(frozenset((p_np.noun, t_np.noun)))
        return pairs

    def _check_pair(self, prime: ParsedSentence, target: ParsedSentence,
                    index: int, out) -> None:
        cond = self.cond
        shared_roles = _expected_shared_roles(cond)
        similar_roles = _similar_roles(cond)
        identical = cond.name == "identical"
        if identical:
            return  # full-equality checked at context level

        # Determiners.
        if prime.determiner_classes and target.determiner_classes:
            same = prime.determiner_classes == target.determiner_classes
            if _function_words_shared(cond) and not same:
                self._add(out, "determiners", "prime and target must share determiners", index)
            if not _function_words_shared(cond) and (
                prime.determiner_classes & target.determiner_classes
            ):
                self._add(out, "determiners", "prime and target must use different determiners", index)

        # Tense / auxiliaries (transitive alternation).
        if target.construction in (Construction.ACT, Construction.PASS):
            if _function_words_shared(cond):
                if prime.tense != target.tense:
                    self._add(out, "auxiliary", "prime and target must share the auxiliary tense", index)
            elif prime.tense == target.tense:
                self._add(out, "auxiliary",
                          "prime and target must use different tenses (is vs was)", index)

        # Preposition (dative alternation).
        if target.construction in (Construction.DO, Construction.PO) and "verb" not in shared_roles:
            p_verb = self.lex.verb_by_lemma.get(prime.verb)
            t_verb = self.lex.verb_by_lemma.get(target.verb)
            if p_verb is not None and t_verb is not None:
                if _function_words_shared(cond):
                    if p_verb.po_preposition != t_verb.po_preposition:
                        self._add(out, "preposition",
                                  "prime and target must share the dative preposition", index)
                elif p_verb.po_preposition == t_verb.po_preposition:
                    self._add(out, "preposition",
                              f"prime and target share preposition {p_verb.po_preposition!r}", index)

        # Lexical overlap.
        expected_shared: set[str] = set()
        if "verb" in shared_roles:
            expected_shared.add(target.verb)
        for role in shared_roles - {"verb"}:
            if role in target.roles:
                expected_shared.add(target.roles[role].noun)
        observed_shared = set(prime.content & target.content)
        if cond.name == "overlap_random_noun":
            if len(observed_shared) != 1:
                self._add(out, "overlap",
                          f"expected exactly one shared noun, found {sorted(observed_shared)}", index)
            else:
                shared = next(iter(observed_shared))
                p_roles = {r for r, np in prime.roles.items() if np.noun == shared}
                t_roles = {r for r, np in target.roles.items() if np.noun == shared}
                if not (p_roles & t_roles):
                    self._add(out, "overlap",
                              f"shared noun {shared!r} fills different roles", index)
                expected_shared = observed_shared
        elif observed_shared != expected_shared:
            self._add(
                out, "overlap",
                f"shared content {sorted(observed_shared)} != expected {sorted(expected_shared)}",
                index,
            )

        # Association.
        allowed_pairs = self._similar_pairs(prime, target, similar_roles)
        for p_word in prime.content - expected_shared:
            for t_word in target.content - expected_shared:
                if p_word == t_word:
                    continue
                if frozenset((p_word, t_word)) in allowed_pairs:
                    continue
                if is_associated(p_word, t_word, self.lex):
                    self._add(out, "association",
                              f"{p_word!r} and {t_word!r} are associated", index)

        # Semantic similarity requirements.
        if similar_roles:
            threshold = cond.similarity_threshold
            if threshold is None:
                self._add(out, "similarity", "condition lacks a resolved threshold", index)
            else:
                pairs = []
                if "verb" in similar_roles:
                    pairs.append(("verb", prime.verb, target.verb))
                for role in similar_roles - {"verb"}:
                    if role in target.roles and role in prime.roles:
                        pairs.append((role, prime.roles[role].noun, target.roles[role].noun))
                for role, p_word, t_word in pairs:
                    if p_word == t_word:
                        self._add(out, "similarity",
                                  f"{role}: prime repeats target word {p_word!r}", index)
                        continue
                    if not is_associated(p_word, t_word, self.lex):
                        self._add(out, "similarity",
                                  f"{role}: {p_word!r} and {t_word!r} are not associated", index)
                    elif cosine_similarity(p_word, t_word, self.lex) < threshold:
                        self._add(
                            out, "similarity",
                            f"{role}: cosine({p_word!r}, {t_word!r}) below {threshold:.4f}", index,
                        )

        # Complexity shapes.
        mode = cond.mode if cond.name == "complexity" else None
        p_complex = [np for np in prime.roles.values() if np.is_complex]
        t_complex = [np for np in target.roles.values() if np.is_complex]
        if mode is None:
            if p_complex:
                self._add(out, "complexity", "unexpected complex NP in prime", index)
            if t_complex:
                self._add(out, "complexity", "unexpected complex NP in target", index)
        else:
            want_prime = mode in ("prime", "both")
            want_target = mode in ("target", "both")
            if len(p_complex) != (1 if want_prime else 0):
                self._add(out, "complexity",
                          f"prime must have {'one complex NP' if want_prime else 'no complex NP'}",
                          index)
            if len(t_complex) != (1 if want_target else 0):
                self._add(out, "complexity",
                          f"target must have {'one complex NP' if want_target else 'no complex NP'}",
                          index)
            if mode == "both" and p_complex and t_complex:
                if p_complex[0].shape == t_complex[0].shape:
                    self._add(out, "complexity",
                              f"prime and target share complex NP shape {p_complex[0].shape!r}",
                              index)
                if p_complex[0].shape not in COMPLEX_SHAPES or t_complex[0].shape not in COMPLEX_SHAPES:
                    self._add(out, "complexity", "unrecognized complex NP shape", index)

    def _check_content_match(self, congruent: ParsedSentence, incongruent: ParsedSentence,
                             index: int, out) -> None:
        if incongruent.construction != COUNTERPART[congruent.construction]:
            self._add(out, "incongruent_construction",
                      f"incongruent prime is {incongruent.construction.value}, expected "
                      f"{COUNTERPART[congruent.construction].value}", index)
            return
        if incongruent.verb != congruent.verb:
            self._add(out, "content_match",
                      f"incongruent verb {incongruent.verb!r} != {congruent.verb!r}", index)
        if incongruent.tense != congruent.tense:
            self._add(out, "content_match", "incongruent prime changes tense", index)
        for role, np in congruent.roles.items():
            other = incongruent.roles.get(role)
            if other is None or other.noun != np.noun:
                self._add(out, "content_match",
                          f"incongruent prime changes the {role} noun", index)
            elif (other.adjective, other.pp_kind, other.pp_noun, other.pp_adjective) != (
                np.adjective, np.pp_kind, np.pp_noun, np.pp_adjective
            ):
                self._add(out, "content_match",
                          f"incongruent prime changes the {role} modifiers", index)
            elif other.determiner_class != np.determiner_class:
                self._add(out, "content_match",
                          f"incongruent prime changes the {role} determiner", index)


def validate_pair(item: PrimeTargetItem, cond: ConditionSpec, lex: Lexicon) -> list[Violation]:
    """All constraint violations for one prime-target item (empty if clean)."""
    out: list[Violation] = []
    recognizer = TemplateRecognizer(lex)
    return _validate_pair(item, cond, lex, recognizer, out)


def _validate_pair(item: PrimeTargetItem, cond: ConditionSpec, lex: Lexicon,
                   recognizer: TemplateRecognizer, out: list[Violation]) -> list[Violation]:
    checker = _PairChecker(cond, lex, recognizer)

    target = checker._parse(item.target, "target", None, out)
    if target is None:
        return out
    if target.construction.value != item.structure.value:
        checker._add(out, "structure",
                     f"target construction {target.construction.value} != {item.structure.value}")
        return out
    checker._check_sentence(target, "target", None, out)
    checker._check_selection(target, expect_implausible=False, label="target", index=None, out=out)

    # The all-words similarity and all-nouns overlap conditions emit whatever
    # the constraints admit, up to the configured pair count.
    variable_pairs = cond.name in ("sem_sim_all", "overlap_all_nouns")
    expected_pairs = 1 if cond.name == "identical" else cond.primes_per_target
    if not variable_pairs and len(item.prime_pairs) != expected_pairs:
        checker._add(out, "pair_count",
                     f"expected {expected_pairs} prime pairs, found {len(item.prime_pairs)}")
    if variable_pairs and not 1 <= len(item.prime_pairs) <= cond.primes_per_target:
        checker._add(out, "pair_count",
                     f"expected 1..{cond.primes_per_target} prime pairs, found {len(item.prime_pairs)}")

    seen_contents: set[frozenset[str]] = set()
    for index, pair in enumerate(item.prime_pairs):
        if len(pair.incongruent) != 1:
            checker._add(out, "context_length",
                         f"incongruent context must be a single sentence, got {len(pair.incongruent)}",
                         index)
            continue
        incongruent = checker._parse(pair.incongruent[0], "incongruent prime", index, out)

        congruent_primes: list[tuple[Sentence, ParsedSentence]] = []
        if cond.name == "recency":
            if len(pair.congruent) != RECENCY_CONTEXT_LENGTH:
                checker._add(out, "context_length",
                             f"recency context must hold {RECENCY_CONTEXT_LENGTH} sentences, "
                             f"got {len(pair.congruent)}", index)
                continue
            parsed_context = []
            for sent in pair.congruent:
                parsed = checker._parse(sent, "context sentence", index, out)
                if parsed is None:
                    break
                parsed_context.append((sent, parsed))
            if len(parsed_context) != len(pair.congruent):
                continue
            prime_slots = [
                i for i, (_, p) in enumerate(parsed_context)
                if p.construction is not Construction.INTR_PAD
            ]
            if len(prime_slots) != 1:
                checker._add(out, "recency", "context must hold exactly one prime", index)
                continue
            slot = prime_slots[0]
            position = RECENCY_CONTEXT_LENGTH - slot
            if cond.position != position:
                checker._add(out, "recency",
                             f"prime sits at position {position}, condition says {cond.position}",
                             index)
            prime_sent, prime = parsed_context[slot]
            congruent_primes.append((prime_sent, prime))
            pad_texts = set()
            anchor = prime.content | target.content
            for i, (sent, parsed) in enumerate(parsed_context):
                if i == slot:
                    continue
                if parsed.construction is not Construction.INTR_PAD:
                    checker._add(out, "recency", f"slot {i} is not a padding sentence", index)
                    continue
                if sent.text in pad_texts:
                    checker._add(out, "recency", f"padding sentence repeated: {sent.text!r}", index)
                pad_texts.add(sent.text)
                for lemma in parsed.content:
                    if lemma in anchor:
                        checker._add(out, "padding_disjoint",
                                     f"padding verb {lemma!r} overlaps prime/target", index)
                    for other in anchor:
                        if is_associated(lemma, other, lex):
                            checker._add(out, "padding_disjoint",
                                         f"padding verb {lemma!r} associated with {other!r}", index)
        else:
            expected_len = cond.k if cond.name == "cumulative" else 1
            if len(pair.congruent) != expected_len:
                checker._add(out, "context_length",
                             f"congruent context must hold {expected_len} sentence(s), "
                             f"got {len(pair.congruent)}", index)
                continue
            for sent in pair.congruent:
                parsed = checker._parse(sent, "congruent prime", index, out)
                if parsed is not None:
                    congruent_primes.append((sent, parsed))

        for sent, prime in congruent_primes:
            if prime.construction.value != item.structure.value:
                checker._add(out, "structure",
                             f"congruent prime is {prime.construction.value}, "
                             f"target structure is {item.structure.value}", index)
                continue
            checker._check_sentence(prime, "prime", index, out)
            checker._check_selection(
                prime,
                expect_implausible=cond.name == "implausible_prime",
                label="prime", index=index, out=out,
            )
            if cond.name == "identical":
                if sent.text != item.target.text:
                    checker._add(out, "identical",
                                 "congruent prime must equal the target sentence", index)
            else:
                checker._check_pair(prime, target, index, out)
                if prime.content in seen_contents:
                    checker._add(out, "prime_distinct",
                                 f"duplicate prime content {sorted(prime.content)}", index)
                seen_contents.add(prime.content)

        if incongruent is not None and congruent_primes:
            checker._check_content_match(congruent_primes[-1][1], incongruent, index, out)

    return out


def validate_items(items: list[PrimeTargetItem], cond: ConditionSpec,
                   lex: Lexicon) -> list[tuple[str, Violation]]:
    """Validate a whole per-structure corpus, including cross-item checks."""
    recognizer = TemplateRecognizer(lex)
    results: list[tuple[str, Violation]] = []
    seen_targets: set[str] = set()
    for item in items:
        for violation in _validate_pair(item, cond, lex, recognizer, []):
            results.append((item.item_id, violation))
        if item.target.text in seen_targets:
            results.append(
                (item.item_id,
                 Violation("target_distinct", f"duplicate target {item.target.text!r}"))
            )
        seen_targets.add(item.target.text)
    return results
