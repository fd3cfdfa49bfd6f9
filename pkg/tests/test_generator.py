import dataclasses
import random

import pytest

from primingkit import (
    ConditionSpec,
    GenerationError,
    build_corpus,
    padding_sentence,
    synthesize_training_corpus,
)
from primingkit.generator import (
    RECENCY_CONTEXT_LENGTH,
    _similarity_partners,
    resolve_similarity_threshold,
)
from primingkit.lexicon import Lexicon
from primingkit.sentences import COUNTERPART, Construction, PADDING_AUXILIARIES, PADDING_PRONOUNS


def _small(name, lex, seed=7, targets=4, primes=6, **kw):
    cond = ConditionSpec(
        name=name, targets_per_structure=targets, primes_per_target=primes,
        seed=seed, **kw,
    )
    return cond, build_corpus(cond, lex)


def test_condition_spec_parameter_ranges():
    with pytest.raises(ValueError):
        ConditionSpec(name="nonsense")
    with pytest.raises(ValueError):
        ConditionSpec(name="recency", position=5)
    with pytest.raises(ValueError):
        ConditionSpec(name="recency")
    with pytest.raises(ValueError):
        ConditionSpec(name="cumulative", k=6)
    with pytest.raises(ValueError):
        ConditionSpec(name="complexity", mode="everything")
    with pytest.raises(ValueError):
        ConditionSpec(name="core", k=2)
    with pytest.raises(ValueError):
        ConditionSpec(name="core", targets_per_structure=0)


def test_core_corpus_shape(fixture_lexicon):
    cond, corpus = _small("core", fixture_lexicon)
    assert set(corpus) == {Construction.ACT, Construction.PASS, Construction.DO, Construction.PO}
    for structure, items in corpus.items():
        assert len(items) == cond.targets_per_structure
        texts = {item.target.text for item in items}
        assert len(texts) == len(items)
        for item in items:
            assert item.structure == structure
            assert item.alternation == structure.alternation
            assert len(item.prime_pairs) == cond.primes_per_target
            contents = [p.congruent[0].content_lemmas for p in item.prime_pairs]
            assert len(set(contents)) == len(contents)
            for pair in item.prime_pairs:
                congruent = pair.congruent[0]
                incongruent = pair.incongruent[0]
                assert congruent.spec.construction == structure
                assert incongruent.spec.construction == COUNTERPART[structure]
                assert incongruent.spec.verb == congruent.spec.verb


def test_core_disjointness(fixture_lexicon):
    _, corpus = _small("core", fixture_lexicon)
    for items in corpus.values():
        for item in items:
            for pair in item.prime_pairs:
                prime = pair.congruent[0]
                assert not (prime.content_lemmas & item.target.content_lemmas)


def test_determinism_byte_level(fixture_lexicon):
    from primingkit.corpus_io import dumps_canonical, item_to_dict

    _, first = _small("core", fixture_lexicon, seed=21)
    _, second = _small("core", fixture_lexicon, seed=21)
    for structure in first:
        a = [dumps_canonical(item_to_dict(i)) for i in first[structure]]
        b = [dumps_canonical(item_to_dict(i)) for i in second[structure]]
        assert a == b


def test_seed_changes_output(fixture_lexicon):
    _, first = _small("core", fixture_lexicon, seed=1)
    _, second = _small("core", fixture_lexicon, seed=2)
    texts_a = [i.target.text for i in first[Construction.ACT]]
    texts_b = [i.target.text for i in second[Construction.ACT]]
    assert texts_a != texts_b


def test_identical_condition_single_pair(fixture_lexicon):
    _, corpus = _small("identical", fixture_lexicon)
    for items in corpus.values():
        for item in items:
            assert len(item.prime_pairs) == 1
            assert item.prime_pairs[0].congruent[0].text == item.target.text


def test_recency_context_layout(fixture_lexicon):
    for position in (1, 4):
        cond, corpus = _small("recency", fixture_lexicon, position=position)
        for structure, items in corpus.items():
            for item in items:
                for pair in item.prime_pairs:
                    assert len(pair.congruent) == RECENCY_CONTEXT_LENGTH
                    kinds = [s.spec.construction for s in pair.congruent]
                    slot = RECENCY_CONTEXT_LENGTH - position
                    assert kinds[slot] == structure
                    assert all(
                        k == Construction.INTR_PAD for i, k in enumerate(kinds) if i != slot
                    )
                    assert len(pair.incongruent) == 1


def test_cumulative_context_layout(fixture_lexicon):
    cond, corpus = _small("cumulative", fixture_lexicon, k=3, targets=3, primes=4)
    for structure, items in corpus.items():
        for item in items:
            for pair in item.prime_pairs:
                assert len(pair.congruent) == 3
                assert len(pair.incongruent) == 1
                # incongruent matches the final (most recent) congruent prime
                last = pair.congruent[-1].spec
                assert pair.incongruent[0].spec.verb == last.verb


def test_complexity_modes(fixture_lexicon):
    for mode in ("prime", "target", "both"):
        _, corpus = _small("complexity", fixture_lexicon, mode=mode, targets=3, primes=4)
        for items in corpus.values():
            for item in items:
                t_complex = [np for np in item.target.spec.role_nps().values() if np.is_complex]
                assert len(t_complex) == (1 if mode in ("target", "both") else 0)
                for pair in item.prime_pairs:
                    p_complex = [
                        np for np in pair.congruent[0].spec.role_nps().values() if np.is_complex
                    ]
                    assert len(p_complex) == (1 if mode in ("prime", "both") else 0)
                    if mode == "both":
                        assert p_complex[0].shape != t_complex[0].shape


def test_implausible_prime_violates_every_role(fixture_lexicon):
    _, corpus = _small("implausible_prime", fixture_lexicon, targets=3, primes=4)
    lex = fixture_lexicon
    for items in corpus.values():
        for item in items:
            for pair in item.prime_pairs:
                spec = pair.congruent[0].spec
                verb = lex.verb_by_lemma[spec.verb]
                cats = {
                    "agent": verb.agent_categories,
                    "patient": verb.patient_categories,
                    "recipient": verb.recipient_categories,
                }
                for role, np_spec in spec.role_nps().items():
                    noun = lex.noun_by_lemma[np_spec.noun]
                    assert not (noun.categories & cats[role])


def test_function_word_overlap_shares_everything(fixture_lexicon):
    _, corpus = _small("overlap_function_words", fixture_lexicon, targets=3, primes=4)
    for items in corpus.values():
        for item in items:
            t_spec = item.target.spec
            for pair in item.prime_pairs:
                p_spec = pair.congruent[0].spec
                assert p_spec.tense == t_spec.tense
                assert (
                    p_spec.role_nps()["agent"].determiner
                    == t_spec.role_nps()["agent"].determiner
                )
                assert not (pair.congruent[0].content_lemmas & item.target.content_lemmas)


def test_similarity_partner_material(data_lexicon):
    threshold = resolve_similarity_threshold(data_lexicon, seed=3)
    assert 0.1 <= threshold <= 0.8  # same order as the reference ~0.4 value
    partners = _similarity_partners(data_lexicon, threshold)
    verb_pairs = {
        frozenset((a, b))
        for a, bs in partners.items()
        if data_lexicon.content_kind(a) == "verb"
        for b in bs
    }
    noun_pairs = {
        frozenset((a, b))
        for a, bs in partners.items()
        if data_lexicon.content_kind(a) == "noun"
        for b in bs
    }
    assert len(verb_pairs) >= 6
    assert len(noun_pairs) >= 12


def test_sem_sim_all_reports_achieved_counts(fixture_lexicon):
    cond, corpus = _small("sem_sim_all", fixture_lexicon, targets=6, primes=10)
    total = sum(len(i.prime_pairs) for items in corpus.values() for i in items)
    assert total > 0
    for items in corpus.values():
        for item in items:
            assert 1 <= len(item.prime_pairs) <= cond.primes_per_target
            assert item.condition.similarity_threshold is not None


# ---------------------------------------------------------------------------
# padding sentences


def test_padding_sentence_shape(fixture_lexicon):
    sentence = padding_sentence(fixture_lexicon, random.Random(5))
    pronoun, aux, verb = sentence.text.split()
    assert pronoun.lower() in PADDING_PRONOUNS
    assert aux in PADDING_AUXILIARIES
    assert verb in {v.lemma for v in fixture_lexicon.verbs_by_kind["intransitive_padding"]}


def test_padding_sentence_deterministic(fixture_lexicon):
    a = padding_sentence(fixture_lexicon, random.Random(5))
    b = padding_sentence(fixture_lexicon, random.Random(5))
    assert a.text == b.text


def test_padding_without_pool_rejected(fixture_lexicon):
    stripped = Lexicon(
        nouns=fixture_lexicon.nouns,
        verbs=[v for v in fixture_lexicon.verbs if v.kind != "intransitive_padding"],
        adjectives=fixture_lexicon.adjectives,
        associations=fixture_lexicon.associations,
        embeddings=fixture_lexicon.embeddings,
        frequency_cutoff=fixture_lexicon.frequency_cutoff,
    )
    with pytest.raises(GenerationError):
        padding_sentence(stripped, random.Random(5))


# ---------------------------------------------------------------------------
# synthetic training corpora


def test_training_corpus_deterministic(fixture_lexicon):
    a = synthesize_training_corpus(fixture_lexicon, 50, {"DO": 0.9, "PO": 0.1}, seed=3)
    b = synthesize_training_corpus(fixture_lexicon, 50, {"DO": 0.9, "PO": 0.1}, seed=3)
    assert a == b
    assert len(a) == 50
    assert all(line.count(".") == 2 for line in a)


def test_training_corpus_respects_weights(fixture_lexicon):
    lines = synthesize_training_corpus(fixture_lexicon, 300, {"DO": 0.9, "PO": 0.1}, seed=3)
    po = sum(line.count(" to ") + line.count(" for ") for line in lines)
    total = 2 * len(lines)
    assert po / total < 0.25  # PO sentences carry the preposition


def test_training_corpus_rejects_bad_weights(fixture_lexicon):
    with pytest.raises(GenerationError):
        synthesize_training_corpus(fixture_lexicon, 0, {"DO": 1.0}, seed=3)
    with pytest.raises(GenerationError):
        synthesize_training_corpus(fixture_lexicon, 5, {}, seed=3)
