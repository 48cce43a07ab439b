"""Group-level and matroid-level matching decision procedures.

A group matching from A to B is a bijection f with a + f(a) never landing in
A. A basis of M is matched to a basis of N when some pairing of their
elements keeps every pairwise sum out of E(M); the permutation is normalised
away by returning the target tuple aligned with the (ground-ordered) source.

The matroid-level decision reduces to an independent-transversal question:
with F_i = {b in E(N) : a_i + b not in E(M)}, a transversal of (F_1..F_n)
independent in N is exactly a matched target basis. The transversal search is
a complete backtracking over partial independent transversals, cross-checked
elsewhere against brute force over all bases and bijections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .additive import GroupSubset
from .errors import BudgetExceededError, InternalCheckError

#: Brute-force oracles refuse ranks above this (n! * #bases growth).
BRUTE_FORCE_MAX_RANK = 5


@dataclass(frozen=True)
class GroupMatching:
    """Pairs (a, f(a)) of a matching from A to B, ordered by a."""

    pairs: tuple


@dataclass(frozen=True)
class RadoVerdict:
    """Either an independent transversal or a minimal violating index set.

    Exactly one field is set. ``violation`` holds 0-based indices J into the
    family with rank(union of F_i, i in J) < |J|, smallest size first, then
    lexicographic.
    """

    transversal: tuple | None = None
    violation: tuple | None = None

    @property
    def has_transversal(self):
        return self.transversal is not None


@dataclass(frozen=True)
class MatchWitness:
    """A matched pair of bases: source[i] + target[perm[i]] avoids E(M).

    The transversal construction absorbs the permutation, so ``perm`` is
    always the identity and ``target`` is aligned with ``source``.
    """

    source: tuple
    target: tuple
    perm: tuple


@dataclass(frozen=True)
class CriterionVerdict:
    """Rank-criterion outcome: holds, or the first violating index set."""

    holds: bool
    violating: tuple | None = None


@dataclass(frozen=True)
class MatchReport:
    """Per-basis outcome of matching M into N.

    ``witnesses`` maps each basis of M (as a frozenset) to its MatchWitness
    or None; ``failing_basis`` is the lexicographically first basis without a
    witness.
    """

    matched: bool
    witnesses: dict
    failing_basis: frozenset | None


def find_group_matching(a: GroupSubset, b: GroupSubset):
    """Perfect matching in the bipartite graph with edges where a + b leaves A.

    Returns a GroupMatching or None. Deterministic: vertices are processed in
    sorted order and augmenting paths explore candidates in sorted order.
    """
    if a.group != b.group:
        raise ValueError("subsets live in different groups")
    g = a.group
    if len(a) != len(b):
        raise ValueError(f"size mismatch: |A| = {len(a)}, |B| = {len(b)}")
    if g.zero() in b:
        raise ValueError("0 lies in B; no matching into B can exist")
    a_list, b_list = a.sorted(), b.sorted()
    members = a.elems
    adj = [
        [j for j, y in enumerate(b_list) if not g.sum_in(x, y, members)]
        for x in a_list
    ]
    match_of_b = [-1] * len(b_list)

    def augment(i, seen):
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_of_b[j] == -1 or augment(match_of_b[j], seen):
                match_of_b[j] = i
                return True
        return False

    for i in range(len(a_list)):
        if not augment(i, [False] * len(b_list)):
            return None
    pairing = {}
    for j, i in enumerate(match_of_b):
        pairing[a_list[i]] = b_list[j]
    pairs = tuple((x, pairing[x]) for x in a_list)
    _check_group_matching(g, pairs, a, b)
    return GroupMatching(pairs)


def _check_group_matching(g, pairs, a, b):
    firsts = [p[0] for p in pairs]
    seconds = [p[1] for p in pairs]
    if set(firsts) != set(a.elems) or len(set(firsts)) != len(pairs):
        raise InternalCheckError("matching does not enumerate A exactly once")
    if set(seconds) != set(b.elems) or len(set(seconds)) != len(pairs):
        raise InternalCheckError("matching does not enumerate B exactly once")
    for x, y in pairs:
        if g.sum_in(x, y, a.elems):
            raise InternalCheckError(f"forbidden sum: {x} + {y} lies in A")


def rado_transversal(family, matroid) -> RadoVerdict:
    """Independent transversal of the family in the matroid, or a violating J.

    Complete depth-first search over partial independent transversals
    (exponential worst case, fine at desk scale). On failure the returned J
    certificate re-verifies by direct rank evaluation.
    """
    n = matroid.rank_value
    family = list(family)
    if len(family) != n:
        raise ValueError(
            f"family size {len(family)} differs from the matroid rank {n}"
        )
    ground = matroid.ground
    masks = [ground.mask_of(f) for f in family]

    chosen = []

    def search(i, cur):
        if i == n:
            return True
        avail = masks[i] & ~cur
        while avail:
            low = avail & -avail
            avail ^= low
            new = cur | low
            if matroid.rank_mask(new) == i + 1:
                chosen.append(low)
                if search(i + 1, new):
                    return True
                chosen.pop()
        return False

    if search(0, 0):
        elems = tuple(ground.elems_of(bit)[0] for bit in chosen)
        return RadoVerdict(transversal=elems)

    for size in range(1, n + 1):
        for j in itertools.combinations(range(n), size):
            union = 0
            for i in j:
                union |= masks[i]
            if matroid.rank_mask(union) < size:
                return RadoVerdict(violation=j)
    raise InternalCheckError(
        "no transversal found but every index set satisfies the rank condition"
    )


def rado_transversal_brute(family, matroid) -> RadoVerdict:
    """Same decision by brute force over all tuples; oracle for the search."""
    n = matroid.rank_value
    family = [sorted(f) for f in family]
    if len(family) != n:
        raise ValueError(
            f"family size {len(family)} differs from the matroid rank {n}"
        )
    if n > BRUTE_FORCE_MAX_RANK:
        raise BudgetExceededError(f"brute force refuses rank {n} > {BRUTE_FORCE_MAX_RANK}")
    for combo in itertools.product(*family):
        if len(set(combo)) != n:
            continue
        if matroid.is_independent(combo):
            return RadoVerdict(transversal=tuple(combo))
    for size in range(1, n + 1):
        for j in itertools.combinations(range(n), size):
            union = set().union(*(family[i] for i in j))
            if matroid.rank(union) < size:
                return RadoVerdict(violation=j)
    raise InternalCheckError("brute force found neither transversal nor violation")


def _source_tuple(m, source_basis):
    src = tuple(sorted(source_basis, key=m.ground.index))
    mask = m.ground.mask_of(src)
    if not m.is_basis_mask(mask):
        raise ValueError(f"{sorted(source_basis)} is not a basis of the source matroid")
    return src


def matching_family(m, source, n):
    """F_i = {b in E(N) : source[i] + b not in E(M)}, for a ground-ordered source."""
    g = m.ground.group
    e_m = set(m.ground.elements)
    return [
        frozenset(b for b in n.ground.elements if not g.sum_in(a, b, e_m))
        for a in source
    ]


def match_basis(m, source_basis, n):
    """Match one basis of M to some basis of N, or None if impossible.

    Equivalent to the existence of a permutation pairing the source with a
    target basis so that all pairwise sums avoid E(M); agreement with the
    brute-force bijection oracle is part of the test suite.
    """
    _require_equal_positive_ranks(m, n)
    src = _source_tuple(m, source_basis)
    verdict = rado_transversal(matching_family(m, src, n), n)
    if not verdict.has_transversal:
        return None
    target = verdict.transversal
    witness = MatchWitness(src, target, tuple(range(len(src))))
    _check_witness(m, n, witness)
    return witness


def _check_witness(m, n, witness):
    mask = n.ground.mask_of(witness.target)
    if not n.is_basis_mask(mask):
        raise InternalCheckError("matched target is not a basis of N")
    g = m.ground.group
    e_m = set(m.ground.elements)
    for a, b in zip(witness.source, witness.target):
        if g.sum_in(a, b, e_m):
            raise InternalCheckError(f"witness sum {a} + {b} lands in E(M)")


def match_basis_brute(m, source_basis, n):
    """Oracle: try every basis of N and every bijection (rank <= 5)."""
    _require_equal_positive_ranks(m, n)
    src = _source_tuple(m, source_basis)
    if len(src) > BRUTE_FORCE_MAX_RANK:
        raise BudgetExceededError(
            f"brute force refuses rank {len(src)} > {BRUTE_FORCE_MAX_RANK}"
        )
    g = m.ground.group
    e_m = set(m.ground.elements)
    for basis_mask in n.bases_masks:
        basis = n.ground.elems_of(basis_mask)
        for perm in itertools.permutations(basis):
            if all(not g.sum_in(a, b, e_m) for a, b in zip(src, perm)):
                return MatchWitness(src, perm, tuple(range(len(src))))
    return None


def _require_equal_positive_ranks(m, n):
    if m.ground.group != n.ground.group:
        raise ValueError("matroids live over different groups")
    if m.rank_value != n.rank_value:
        raise ValueError(
            f"rank mismatch: r(M) = {m.rank_value}, r(N) = {n.rank_value}"
        )
    if m.rank_value == 0:
        raise ValueError("matching needs positive rank")


def match_matroid(m, n) -> MatchReport:
    """Whether every basis of M is matched to some basis of N.

    Scans all bases in lexicographic order; the failing basis reported is the
    lexicographically first one, determined after a full scan.
    """
    _require_equal_positive_ranks(m, n)
    witnesses = {}
    failing = None
    for basis in m.bases():
        w = match_basis(m, basis, n)
        witnesses[basis] = w
        if w is None and failing is None:
            failing = basis
    return MatchReport(failing is None, witnesses, failing)


def mutually_matched(m, n) -> bool:
    """Convenience: matched in both directions."""
    return match_matroid(m, n).matched and match_matroid(n, m).matched


def rank_criterion(m, source_basis, n) -> CriterionVerdict:
    """Sufficient condition for match_basis success via ranks of translate intersections.

    Checks, for every nonempty J (by size, then lexicographically), that the
    set of common targets {b in E(N) : a_i + b in E(M) for all i in J} has
    rank at most n - |J| in N. When this holds, a matched basis exists; the
    converse is not asserted.
    """
    _require_equal_positive_ranks(m, n)
    src = _source_tuple(m, source_basis)
    rank = len(src)
    g = m.ground.group
    e_m = set(m.ground.elements)
    ground_n = n.ground
    member_masks = [
        ground_n.mask_of(
            b for b in ground_n.elements if g.sum_in(a, b, e_m)
        )
        for a in src
    ]
    for size in range(1, rank + 1):
        for j in itertools.combinations(range(rank), size):
            inter = ground_n.full_mask
            for i in j:
                inter &= member_masks[i]
            if n.rank_mask(inter) > rank - size:
                return CriterionVerdict(False, j)
    return CriterionVerdict(True)
