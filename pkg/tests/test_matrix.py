from primingkit.generator import STRUCTURES, default_condition_matrix


def test_default_matrix_reaches_full_scale():
    """The shipped condition matrix plans on the order of 1.3M prime pairs."""
    planned = 0
    for cond in default_condition_matrix():
        per_structure = cond.targets_per_structure * cond.primes_per_target
        if cond.name == "identical":
            per_structure = cond.targets_per_structure
        # the all-words similarity condition yields at most the configured cap
        planned += per_structure * len(STRUCTURES)
    assert 1_000_000 <= planned <= 2_000_000


def test_default_matrix_covers_every_condition_variant():
    ids = {c.condition_id for c in default_condition_matrix()}
    assert {"core", "sem_sim_verb", "sem_sim_nouns", "sem_sim_all",
            "overlap_random_noun", "overlap_all_nouns", "overlap_verb",
            "overlap_function_words", "identical", "implausible_prime"} <= ids
    assert {f"recency_pos{p}" for p in range(1, 5)} <= ids
    assert {f"cumulative_k{k}" for k in range(1, 6)} <= ids
    assert {f"complexity_{m}" for m in ("prime", "target", "both")} <= ids
    assert len(ids) == 22
