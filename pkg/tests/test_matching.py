import itertools
import random

import pytest

from matchroid import (
    BudgetExceededError,
    CyclicGroup,
    FreeMatroid,
    GroundSet,
    GroupSubset,
    IntegerWindow,
    PartitionMatroid,
    UniformMatroid,
    enumerate_sparse_paving,
    find_group_matching,
    match_basis,
    match_basis_brute,
    match_matroid,
    mutually_matched,
    rado_transversal,
    rado_transversal_brute,
    rank_criterion,
)

W = IntegerWindow(0, 40)


def sub(group, elems):
    return GroupSubset.of(group, elems)


def sym_counterexample(n=2):
    ground = GroundSet(IntegerWindow(0, 4 * n), range(1, 2 * n + 1))
    blocks = [[i] for i in range(1, n)] + [list(range(n, 2 * n + 1))]
    return PartitionMatroid(ground, blocks, [1] * n)


def brute_group_matching_exists(group, a, b):
    """Oracle: try every bijection outright."""
    a_list, b_list = sorted(a), sorted(b)
    for perm in itertools.permutations(b_list):
        if all(not group.sum_in(x, y, set(a_list)) for x, y in zip(a_list, perm)):
            return True
    return False


def test_group_matching_mod7_example(c7):
    a = sub(c7, [1, 2, 3])
    got = find_group_matching(a, a)
    assert got is not None
    assert brute_group_matching_exists(c7, a.elems, a.elems)
    for x, y in got.pairs:
        assert c7.add(x, y) not in a.elems


def test_group_matching_preconditions(c7):
    with pytest.raises(ValueError):
        find_group_matching(sub(c7, [1, 2]), sub(c7, [1]))
    with pytest.raises(ValueError):
        find_group_matching(sub(c7, [1, 2]), sub(c7, [0, 1]))


def test_group_matching_agrees_with_brute_force(c7):
    for a_elems in itertools.combinations(range(7), 2):
        for b_elems in itertools.combinations(range(1, 7), 2):
            a, b = sub(c7, a_elems), sub(c7, b_elems)
            got = find_group_matching(a, b) is not None
            assert got == brute_group_matching_exists(c7, a.elems, b.elems)


def test_small_sets_below_p_always_match(c7):
    # |A| = |B| = 3 < 7 = p(G) with 0 outside B guarantees a matching.
    for a_elems in itertools.combinations(range(7), 3):
        for b_elems in itertools.combinations(range(1, 7), 3):
            assert find_group_matching(sub(c7, a_elems), sub(c7, b_elems)) is not None


def test_symmetric_matchable_iff_zero_absent(c7):
    for mask in range(1, 1 << 7):
        elems = [i for i in range(7) if mask >> i & 1]
        a = sub(c7, elems)
        if 0 in elems:
            continue  # rejected by the zero-in-B precondition; unmatchable
        assert find_group_matching(a, a) is not None


def test_unmatchable_asymmetric_pair():
    g = CyclicGroup(4)
    assert find_group_matching(sub(g, [0, 2]), sub(g, [1, 2])) is None


def test_rado_shared_singleton_violation():
    n = UniformMatroid(GroundSet(W, [1, 2, 3]), 2)
    verdict = rado_transversal([{1}, {1}], n)
    assert not verdict.has_transversal
    assert verdict.violation == (0, 1)


def test_rado_simple_transversal():
    n = UniformMatroid(GroundSet(W, [1, 2, 3]), 2)
    verdict = rado_transversal([{1}, {2, 3}], n)
    assert verdict.transversal == (1, 2)


def test_rado_family_size_checked():
    n = UniformMatroid(GroundSet(W, [1, 2, 3]), 2)
    with pytest.raises(ValueError):
        rado_transversal([{1}], n)


def test_rado_matches_brute_force_on_random_instances():
    rng = random.Random(99)
    gs = GroundSet(W, range(1, 8))
    for _ in range(200):
        rank = rng.randrange(1, 4)
        census = enumerate_sparse_paving(GroundSet(W, range(1, rng.randrange(4, 8))), rank)
        n = census[rng.randrange(len(census))]
        elems = list(n.ground.elements)
        family = [
            {e for e in elems if rng.random() < 0.5} for _ in range(rank)
        ]
        got = rado_transversal(family, n)
        brute = rado_transversal_brute(family, n)
        assert got.has_transversal == brute.has_transversal
        if not got.has_transversal:
            union = set().union(*(family[i] for i in got.violation))
            assert n.rank(union) < len(got.violation)


def test_match_basis_on_symmetric_counterexample():
    m = sym_counterexample(2)
    assert match_basis(m, [1, 2], m) is None
    assert match_basis_brute(m, [1, 2], m) is None


def test_match_basis_free_pair_over_mod5():
    g = CyclicGroup(5)
    m = FreeMatroid(GroundSet(g, [1, 2]))
    w = match_basis(m, [1, 2], m)
    assert w is not None
    assert w.source == (1, 2)
    assert w.target == (2, 1)  # sums 3, 3 stay outside the ground set


def test_match_basis_validates_source():
    m = sym_counterexample(2)
    with pytest.raises(ValueError):
        match_basis(m, [2, 3], m)  # dependent pair inside one block


def _random_sparse_paving(rng, ground, rank):
    """Greedy random circuit-hyperplane family; falls back to uniform."""
    chosen = []
    from matchroid import ChSparsePavingMatroid

    for combo in itertools.combinations(ground.elements, rank):
        if rng.random() < 0.4 and all(
            len(set(combo) & c) <= rank - 2 for c in chosen
        ):
            chosen.append(set(combo))
    try:
        return ChSparsePavingMatroid(ground, rank, chosen)
    except ValueError:
        return UniformMatroid(ground, rank)


def test_match_basis_agrees_with_brute_force():
    rng = random.Random(4)
    for trial in range(500):
        m_size = rng.randrange(2, 9)
        n_size = rng.randrange(2, 9)
        rank = rng.randrange(1, min(m_size, n_size, 4) + 1)
        m = _random_sparse_paving(rng, GroundSet(W, range(1, m_size + 1)), rank)
        n = _random_sparse_paving(rng, GroundSet(W, range(2, n_size + 2)), rank)
        src = m.bases()[rng.randrange(len(m.bases()))]
        got = match_basis(m, src, n)
        brute = match_basis_brute(m, src, n)
        assert (got is None) == (brute is None)


def test_match_matroid_symmetric_counterexample():
    m = sym_counterexample(2)
    report = match_matroid(m, m)
    assert not report.matched
    assert report.failing_basis == {1, 2}
    assert report.witnesses[frozenset({1, 2})] is None
    assert report.witnesses[frozenset({1, 3})] is None
    assert report.witnesses[frozenset({1, 4})] is not None


def test_match_matroid_asymmetric_counterexample():
    ground = GroundSet(IntegerWindow(0, 8), [1, 2, 3, 4])
    m = UniformMatroid(ground, 2)
    n = PartitionMatroid(ground, [[1], [2, 3, 4]], [1, 1])
    report = match_matroid(m, n)
    assert not report.matched
    assert report.failing_basis == {1, 2}


def test_match_matroid_uniform_self_match(c7):
    m = UniformMatroid(GroundSet(c7, [1, 2, 3]), 2)
    report = match_matroid(m, m)
    assert report.matched
    for basis, witness in report.witnesses.items():
        assert witness is not None
        assert match_basis_brute(m, basis, m) is not None


def test_match_matroid_rank_mismatch(c7):
    m = UniformMatroid(GroundSet(c7, [1, 2, 3]), 2)
    n = UniformMatroid(GroundSet(c7, [1, 2, 3]), 1)
    with pytest.raises(ValueError):
        match_matroid(m, n)


def test_mutually_matched(c7):
    m = UniformMatroid(GroundSet(c7, [1, 2, 3]), 2)
    assert mutually_matched(m, m)


def test_rank_criterion_violated_on_counterexample():
    m = sym_counterexample(2)
    verdict = rank_criterion(m, [1, 2], m)
    assert not verdict.holds
    assert verdict.violating == (0,)


def test_rank_criterion_holds_implies_witness_rank_one():
    g = CyclicGroup(7)
    m = FreeMatroid(GroundSet(g, [1]))
    n = FreeMatroid(GroundSet(g, [2]))
    verdict = rank_criterion(m, [1], n)
    assert verdict.holds  # {b in E(N) : 1 + b in E(M)} is empty
    assert match_basis(m, [1], n) is not None


def test_rank_criterion_holds_implies_witness_enumerated():
    gs = GroundSet(W, [1, 2, 3, 4])
    for m in enumerate_sparse_paving(gs, 2):
        for n in enumerate_sparse_paving(gs, 2):
            for src in m.bases():
                if rank_criterion(m, src, n).holds:
                    assert match_basis(m, src, n) is not None


def test_brute_force_budget():
    g = IntegerWindow(0, 40)
    m = UniformMatroid(GroundSet(g, range(1, 14)), 6)
    with pytest.raises(BudgetExceededError):
        match_basis_brute(m, range(1, 7), m)


def test_cross_group_rejections():
    c7 = CyclicGroup(7)
    w = IntegerWindow(0, 9)
    with pytest.raises(ValueError):
        find_group_matching(sub(c7, [1]), sub(w, [1]))
    m = UniformMatroid(GroundSet(c7, [1, 2]), 1)
    n = UniformMatroid(GroundSet(w, [1, 2]), 1)
    with pytest.raises(ValueError):
        match_matroid(m, n)


def test_zero_rank_rejected():
    gs = GroundSet(W, [1, 2])
    d = UniformMatroid(gs, 2).dual()  # the rank-0 matroid with basis {}
    with pytest.raises(ValueError):
        match_matroid(d, d)
