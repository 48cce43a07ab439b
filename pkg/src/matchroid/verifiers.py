"""One executable verifier per theorem: hypotheses checked, conclusion asserted.

Each verifier runs either on a single supplied instance (hypotheses are
re-checked; violations raise HypothesisViolation, distinct from a conclusion
failure) or exhaustively over a declared, bounded scope. The outcome is a
VerdictRecord; ``passed=False`` carries a re-verifiable counterexample
payload. Two of the checked claims really are false and their verifiers
report that: sparse paving self-matching (see _verify_sparse_sym) and the
|X| >= |A|+|B|+1 containment bound (see _verify_eliahou). Everything else
holds on every scope this battery can enumerate.

Enumeration scopes draw ground sets from declared universes and matroids from
the censuses this package can enumerate: the sparse paving census, partition
matroids, and (on ground sets of size rank+1, where the basis-exchange axiom
is vacuous) every matroid outright. Scope bounds are recorded in the verdict,
and identical bounds reproduce identical records byte for byte.
"""

from __future__ import annotations

import contextvars
import itertools
import random
import time
from dataclasses import dataclass, field

from . import additive, matching
from .additive import GroupSubset
from .errors import (
    BudgetExceededError,
    HypothesisViolation,
    InternalCheckError,
    UnknownTheoremError,
)
from .groups import (
    Group,
    IntegerWindow,
    Rectification,
    generated_subgroup,
    group_from_json,
    rectify,
)
from .matroids import (
    BasisListMatroid,
    ChSparsePavingMatroid,
    FreeMatroid,
    GroundSet,
    NOT_PAVING,
    PAVING,
    PartitionMatroid,
    SPARSE_PAVING,
    UniformMatroid,
    enumerate_partition_matroids,
    enumerate_sparse_paving,
)
from .serialize import (
    elem_to_json,
    elems_to_json,
    matroid_to_json,
    parse_instance_obj,
)

DEFAULT_UNIVERSE = 6
DEFAULT_MAX_SIZE = 6

#: Optional cap on instances a verifier run may check (the --budget flag).
_INSTANCE_BUDGET = contextvars.ContextVar("matchroid_instance_budget", default=None)


@dataclass
class VerdictRecord:
    """Outcome of one verifier run.

    ``passed`` is False exactly when a counterexample payload is present; the
    payload re-verifies standalone via recheck_counterexample. Bounds state
    the enumerated scope, so reruns with equal bounds give equal counts.
    """

    theorem: str
    instances_checked: int
    passed: bool
    counterexample: dict | None
    runtime_ms: float
    bounds: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    def to_json(self, include_runtime=False):
        out = {
            "theorem": self.theorem,
            "checked": self.instances_checked,
            "passed": self.passed,
            "bounds": self.bounds,
            "extras": self.extras,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if include_runtime:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


class _Run:
    """Collects counters for one verifier run and stamps the record.

    When an instance budget is active (the --budget flag), incrementing the
    checked counter past it aborts the run with BudgetExceededError.
    """

    def __init__(self, theorem, bounds):
        self.theorem = theorem
        self.bounds = bounds
        self.budget = _INSTANCE_BUDGET.get()
        if self.budget is not None:
            self.bounds = dict(bounds, budget=self.budget)
        self._checked = 0
        self.extras = {}
        self.counterexample = None
        self.start = time.perf_counter()

    @property
    def checked(self):
        return self._checked

    @checked.setter
    def checked(self, value):
        if self.budget is not None and value > self.budget:
            raise BudgetExceededError(
                f"instance budget {self.budget} exceeded by {self.theorem}"
            )
        self._checked = value

    def fail(self, payload):
        if self.counterexample is None:
            self.counterexample = payload

    def bump(self, key, amount=1):
        self.extras[key] = self.extras.get(key, 0) + amount

    def record(self):
        return VerdictRecord(
            theorem=self.theorem,
            instances_checked=self.checked,
            passed=self.counterexample is None,
            counterexample=self.counterexample,
            runtime_ms=(time.perf_counter() - self.start) * 1000.0,
            bounds=self.bounds,
            extras=self.extras,
        )


# ---------------------------------------------------------------------------
# Compatible total orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderedContext:
    """A compatible total order on E(M) u E(N) u (E(M)+E(N)) u {0}.

    Backed by a rectification: a <= b iff its integer image is <=. Positive
    means strictly above 0.
    """

    rectification: Rectification

    def value(self, e):
        return self.rectification.mapping[e]

    def is_positive(self, e):
        return self.value(e) > 0

    def is_negative(self, e):
        return self.value(e) < 0

    def all_positive(self, elems):
        return all(self.is_positive(e) for e in elems)

    def all_negative(self, elems):
        return all(self.is_negative(e) for e in elems)

    def max_of(self, elems):
        return max(elems, key=self.value)

    def min_of(self, elems):
        return min(elems, key=self.value)

    def strictly_below(self, first, second):
        """Every element of ``first`` strictly below every element of ``second``."""
        return max(self.value(e) for e in first) < min(self.value(e) for e in second)


def build_ordered_context(m, n, *, node_budget=200_000, image_exponent=None):
    """Order E(M) u E(N) u (E(M)+E(N)) u {0} compatibly, or report absence.

    Integer windows always succeed with the identity order (the integers are
    totally ordered). Finite groups go through the bounded rectification
    search; None means the search proved absence within its image window,
    and an inconclusive search raises SearchInconclusiveError.
    """
    if m.ground.group != n.ground.group:
        raise ValueError("matroids live over different groups")
    g = m.ground.group
    em, en = set(m.ground.elements), set(n.ground.elements)
    sums = {g.add_exact(a, b) for a in em for b in en}
    domain = em | en | sums | {g.zero()}
    if isinstance(g, IntegerWindow):
        return OrderedContext(Rectification(g, {e: e for e in domain}))
    rect = rectify(
        g, domain, node_budget=node_budget, image_exponent=image_exponent
    )
    if rect is None:
        return None
    return OrderedContext(rect)


# ---------------------------------------------------------------------------
# Scope plumbing
# ---------------------------------------------------------------------------


def _group_bound(bounds, *, required=True):
    g = bounds.get("group")
    if g is None:
        if required:
            raise HypothesisViolation("missing group", "bounds must include a group")
        return None
    if isinstance(g, Group):
        return g
    return group_from_json(g)


def _require_finite(group, clause="finite group"):
    if not group.is_finite():
        raise HypothesisViolation(clause, f"{group!r} is not finite")


def _int_tuple(bounds, key, default):
    val = bounds.get(key, default)
    if isinstance(val, int):
        return (val,)
    return tuple(int(v) for v in val)


def _norm_bounds(theorem, group, **rest):
    out = {}
    if group is not None:
        out["group"] = group.to_json()
    for k, v in sorted(rest.items()):
        if isinstance(v, tuple):
            v = [elem_to_json(x) if isinstance(x, tuple) else x for x in v]
        out[k] = v
    return out


def _default_universe(group, *, with_zero, limit=DEFAULT_UNIVERSE):
    """First ``limit`` elements in sorted order, with or without 0."""
    if group.is_finite():
        pool = list(group.elements())
    else:
        pool = [v for v in range(0, group.hi + 1)]
    if not with_zero:
        pool = [e for e in pool if e != group.zero()]
    return tuple(pool[:limit])


def _universe_bound(bounds, key, group, *, with_zero):
    val = bounds.get(key)
    if val is None:
        return _default_universe(group, with_zero=with_zero)
    elems = tuple(tuple(e) if isinstance(e, list) else e for e in val)
    for e in elems:
        group.check(e)
    return elems


def _subsets(pool, size):
    return itertools.combinations(sorted(pool), size)


def _instance_bound(instance, bounds):
    if instance is None:
        return None
    if isinstance(instance, dict):
        return parse_instance_obj(instance)
    return instance


# ---------------------------------------------------------------------------
# Matroid censuses used by exhaustive scopes
# ---------------------------------------------------------------------------


def sparse_census(ground, rank):
    return enumerate_sparse_paving(ground, rank)


def paving_census(ground, rank):
    """Sparse paving census plus strictly-paving partition matroids."""
    out = list(enumerate_sparse_paving(ground, rank))
    for pm in enumerate_partition_matroids(ground, rank):
        if pm.paving_class() == PAVING:
            out.append(pm)
    return out


def corank1_census(ground):
    """Every loopless matroid of rank |E|-1 on the ground set.

    On a ground set of size n+1 the basis-exchange axiom holds for every
    nonempty family of n-subsets, so matroids correspond to subsets D (the
    dropped elements whose complements are bases) with |D| >= 2 for
    looplessness.
    """
    m = len(ground)
    if m < 2:
        raise ValueError("corank-1 census needs at least 2 elements")
    full = ground.full_mask
    out = []
    for size in range(2, m + 1):
        for drop in itertools.combinations(range(m), size):
            bases = [full ^ (1 << i) for i in drop]
            out.append(BasisListMatroid(ground, bases, _from_masks=True))
    return out


# ---------------------------------------------------------------------------
# Cyclic-group mask toolkit (heavy exhaustive additive scopes)
# ---------------------------------------------------------------------------


def _cyc_rotate(mask, shift, n, full):
    if shift == 0:
        return mask
    return ((mask << shift) | (mask >> (n - shift))) & full


def _cyc_sumset(bits_a, mask_b, n, full):
    out = 0
    for a in bits_a:
        out |= _cyc_rotate(mask_b, a, n, full)
    return out


def _mask_elems(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# ---------------------------------------------------------------------------
# Group-level and additive verifiers
# ---------------------------------------------------------------------------


def _verify_sym_group(instance, bounds):
    """Symmetric group matching: A is matched to itself iff 0 is not in A."""
    group = _group_bound(bounds)
    _require_finite(group)
    order = group.order()
    if order > 16:
        raise BudgetExceededError(f"2^{order} subsets exceed the exhaustive budget")
    run = _Run("sym-group", _norm_bounds("sym-group", group))
    elems = list(group.elements())
    zero = group.zero()
    for mask in range(1, 1 << order):
        a = frozenset(elems[i] for i in range(order) if mask >> i & 1)
        run.checked += 1
        if zero in a:
            # 0 in B = A forces some a + 0 = a in A: unmatchable by necessity.
            continue
        sub = GroupSubset(group, a)
        if matching.find_group_matching(sub, sub) is None:
            run.fail(
                {
                    "kind": "group-subset",
                    "group": group.to_json(),
                    "a": elems_to_json(a),
                    "claim": "matchable to itself",
                }
            )
            break
    return run.record()


def _verify_kneser(instance, bounds):
    """Stabilizer witness satisfies both Kneser conditions for all pairs."""
    group = _group_bound(bounds)
    _require_finite(group)
    order = group.order()
    if order > 10:
        raise BudgetExceededError(f"4^{order} pairs exceed the exhaustive budget")
    run = _Run("kneser", _norm_bounds("kneser", group))
    elems = list(group.elements())
    subsets = [
        frozenset(elems[i] for i in range(order) if mask >> i & 1)
        for mask in range(1, 1 << order)
    ]
    for a in subsets:
        sub_a = GroupSubset(group, a)
        for b in subsets:
            run.checked += 1
            try:
                additive.kneser_witness(sub_a, GroupSubset(group, b))
            except InternalCheckError:
                run.fail(
                    {
                        "kind": "subset-pair",
                        "group": group.to_json(),
                        "a": elems_to_json(a),
                        "b": elems_to_json(b),
                        "claim": "Kneser stabilizer conditions",
                    }
                )
                return run.record()
    return run.record()


def _verify_kemperman(instance, bounds):
    """A uniquely-expressible sum forces |A+B| >= |A| + |B| - 1."""
    group = _group_bound(bounds)
    _require_finite(group)
    order = group.order()
    if order > 8:
        raise BudgetExceededError(f"4^{order} pairs exceed the exhaustive budget")
    run = _Run("kemperman", _norm_bounds("kemperman", group))
    elems = list(group.elements())
    subsets = [
        [elems[i] for i in range(order) if mask >> i & 1]
        for mask in range(1, 1 << order)
    ]
    for a in subsets:
        for b in subsets:
            counts = {}
            for x in a:
                for y in b:
                    s = group.add(x, y)
                    counts[s] = counts.get(s, 0) + 1
            if 1 not in counts.values():
                continue
            run.checked += 1
            if len(counts) < len(a) + len(b) - 1:
                run.fail(
                    {
                        "kind": "subset-pair",
                        "group": group.to_json(),
                        "a": elems_to_json(a),
                        "b": elems_to_json(b),
                        "claim": "unique-sum lower bound",
                    }
                )
                return run.record()
    return run.record()


def _verify_eliahou(instance, bounds):
    """A, B and A+B inside X avoiding 0 force |X| >= |A| + |B| + 1.

    The asserted bound is the claimed one; it is refuted already by
    A = B = {1} (then A+B = {2} and X = {1, 2} has 2 < 3 elements). The run
    therefore enumerates the whole scope, reports the first counterexample,
    counts all failures, and additionally tallies the weaker bound
    |X| >= |A| + |B|, which does follow from the unique-sum inequality
    applied to A u {0} and B u {0} and holds with zero exceptions.
    """
    group = _group_bound(bounds)
    _require_finite(group)
    order = group.order()
    if order > 8:
        raise BudgetExceededError(f"4^{order} pairs exceed the exhaustive budget")
    run = _Run("eliahou", _norm_bounds("eliahou", group))
    zero = group.zero()
    elems = [e for e in group.elements() if e != zero]
    m = len(elems)
    run.extras["claimed_bound_failures"] = 0
    run.extras["corrected_bound_failures"] = 0
    subsets = [
        [elems[i] for i in range(m) if mask >> i & 1] for mask in range(1, 1 << m)
    ]
    for a in subsets:
        for b in subsets:
            s = {group.add(x, y) for x in a for y in b}
            if zero in s:
                continue
            run.checked += 1
            x_min = set(a) | set(b) | s
            if len(x_min) < len(a) + len(b):
                run.extras["corrected_bound_failures"] += 1
            if len(x_min) < len(a) + len(b) + 1:
                run.extras["claimed_bound_failures"] += 1
                run.fail(
                    {
                        "kind": "subset-pair",
                        "group": group.to_json(),
                        "a": elems_to_json(a),
                        "b": elems_to_json(b),
                        "claim": "containment lower bound |X| >= |A|+|B|+1",
                    }
                )
    return run.record()


def _verify_critical(instance, bounds):
    """Small critical pairs are progressions with one common difference."""
    group = _group_bound(bounds)
    _require_finite(group)
    p = group.min_subgroup_size()
    max_total = int(bounds.get("max_total", p - 1))
    if group.kind != "cyclic":
        raise HypothesisViolation(
            "cyclic group scope", "the exhaustive critical-pair scope is cyclic"
        )
    run = _Run(
        "critical", _norm_bounds("critical", group, max_total=max_total)
    )
    n = group.order()
    full = (1 << n) - 1
    bit_lists = {}
    masks_by_size = {}
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        masks_by_size.setdefault(size, []).append(mask)
        bit_lists[mask] = _mask_elems(mask)
    for size_a in range(2, max_total):
        for size_b in range(2, max_total - size_a + 1):
            # |A| + |B| - 1 <= p(G) - 2 is the lemma's hypothesis.
            if size_a + size_b - 1 > p - 2:
                continue
            for ma in masks_by_size.get(size_a, ()):
                bits_a = bit_lists[ma]
                for mb in masks_by_size.get(size_b, ()):
                    ms = _cyc_sumset(bits_a, mb, n, full)
                    if ms.bit_count() != size_a + size_b - 1 or ms == full:
                        continue
                    run.checked += 1
                    a = GroupSubset(group, frozenset(bit_lists[ma]))
                    b = GroupSubset(group, frozenset(bit_lists[mb]))
                    common = set(additive.progression_differences(a)) & set(
                        additive.progression_differences(b)
                    )
                    if not common:
                        run.fail(
                            {
                                "kind": "subset-pair",
                                "group": group.to_json(),
                                "a": elems_to_json(a.elems),
                                "b": elems_to_json(b.elems),
                                "claim": "same-difference progressions",
                            }
                        )
                        return run.record()
    return run.record()


def _verify_lemma_progression(instance, bounds):
    """Non-progressions have translate intersection exactly {0}."""
    group = _group_bound(bounds)
    sizes = _int_tuple(bounds, "sizes", (3, 4, 5))
    if group.is_finite():
        if group.kind != "cyclic" or group.min_subgroup_size() != group.order():
            raise HypothesisViolation(
                "torsion-free or cyclic of prime order",
                f"{group!r} is neither",
            )
        if max(sizes) >= group.order():
            raise HypothesisViolation(
                "proper subset", "subset sizes must stay below the group order"
            )
    pool = group.elements()
    run = _Run(
        "lemma-progression",
        _norm_bounds("lemma-progression", group, sizes=sizes),
    )
    zero = group.zero()
    for size in sizes:
        for combo in _subsets(pool, size):
            sub = GroupSubset(group, frozenset(combo))
            if additive.is_progression(sub):
                continue
            run.checked += 1
            inter = additive.translate_intersection(group, sorted(combo))
            if inter != {zero}:
                run.fail(
                    {
                        "kind": "group-subset",
                        "group": group.to_json(),
                        "a": elems_to_json(combo),
                        "claim": "translate intersection equals {0}",
                        "observed": elems_to_json(inter),
                    }
                )
                return run.record()
    return run.record()


# ---------------------------------------------------------------------------
# Matroid matching verifiers
# ---------------------------------------------------------------------------


def _pair_payload(group, m, n, basis=None, claim=""):
    payload = {
        "kind": "matroid-pair",
        "group": group.to_json(),
        "m": matroid_to_json(m),
        "n": matroid_to_json(n),
        "expect_matched": True,
        "claim": claim,
    }
    if basis is not None:
        payload["basis"] = elems_to_json(basis)
    return payload


def _verify_only_if_1(instance, bounds):
    """A matroid whose ground set contains 0 is never matched to itself."""
    inst = _instance_bound(instance, bounds)
    if inst is not None and "m" in bounds:
        m = inst.matroid(bounds["m"])
        group = inst.group
        if group.zero() not in m.ground:
            raise HypothesisViolation("0 in E(M)", "ground set does not contain 0")
        run = _Run("only-if-1", _norm_bounds("only-if-1", group, m=bounds["m"]))
        run.checked = 1
        report = matching.match_matroid(m, m)
        if report.matched:
            payload = _pair_payload(group, m, m, claim="not matched to itself")
            payload["expect_matched"] = False
            run.fail(payload)
        return run.record()

    group = _group_bound(bounds)
    _require_finite(group)
    universe = _universe_bound(bounds, "universe", group, with_zero=True)
    sizes = _int_tuple(bounds, "sizes", (2, 3, 4))
    ranks = _int_tuple(bounds, "ranks", (1, 2, 3))
    run = _Run(
        "only-if-1",
        _norm_bounds("only-if-1", group, universe=universe, sizes=sizes, ranks=ranks),
    )
    zero = group.zero()
    for size in sizes:
        for combo in _subsets(universe, size):
            if zero not in combo:
                continue
            ground = GroundSet(group, combo)
            census = []
            for rank in ranks:
                if rank <= size:
                    census.extend(sparse_census(ground, rank))
            census.extend(enumerate_partition_matroids(ground))
            for m in census:
                run.checked += 1
                report = matching.match_matroid(m, m)
                if report.matched:
                    payload = _pair_payload(group, m, m, claim="not matched to itself")
                    payload["expect_matched"] = False
                    run.fail(payload)
                    return run.record()
    return run.record()


def _only_if_2_instance(group, a, x, run):
    order = group.element_order(a)
    if not (isinstance(order, int) and 1 < order < group.order()):
        raise HypothesisViolation(
            "1 < order(a) < |G|", f"order({a}) = {order} in {group!r}"
        )
    h = generated_subgroup(group, [a])
    if x in h:
        raise HypothesisViolation("x outside <a>", f"{x} lies in the subgroup")
    m = FreeMatroid(GroundSet(group, sorted(h)))
    n_elems = sorted(h - {group.zero()}) + [x]
    n = FreeMatroid(GroundSet(group, n_elems))
    run.checked += 1
    witness = matching.match_basis(m, sorted(h), n)
    if witness is not None:
        payload = _pair_payload(group, m, n, claim="free matroid pair unmatchable")
        payload["expect_matched"] = False
        run.fail(payload)


def _verify_only_if_2(instance, bounds):
    """Non-torsion-free, non-prime-cyclic groups fail the matroid matching property.

    Reproduces the free-matroid construction over the cyclic subgroup
    generated by ``a`` plus an outside element ``x``; the single bases must
    not be matched.
    """
    group = _group_bound(bounds)
    _require_finite(group)
    a = bounds.get("a")
    x = bounds.get("x")
    if a is not None and x is not None:
        a = tuple(a) if isinstance(a, list) else a
        x = tuple(x) if isinstance(x, list) else x
        group.check(a)
        group.check(x)
        run = _Run(
            "only-if-2", _norm_bounds("only-if-2", group, a=elem_to_json(a), x=elem_to_json(x))
        )
        _only_if_2_instance(group, a, x, run)
        return run.record()
    run = _Run("only-if-2", _norm_bounds("only-if-2", group, scope="all-pairs"))
    found = False
    for cand in group.elements():
        order = group.element_order(cand)
        if not 1 < order < group.order():
            continue
        h = generated_subgroup(group, [cand])
        for x_cand in group.elements():
            if x_cand in h:
                continue
            found = True
            _only_if_2_instance(group, cand, x_cand, run)
            if run.counterexample is not None:
                return run.record()
    if not found:
        raise HypothesisViolation(
            "group neither torsion-free nor cyclic of prime order",
            f"{group!r} admits no element of intermediate order",
        )
    return run.record()


def _match_cacheable(ground_m, n_matroid, cache, run, criterion_matroid):
    """Per-(source basis, N) match decision, shared across all M on one ground."""

    def src_ok(mask):
        hit = cache.get(mask)
        if hit is None:
            src = ground_m.elems_of(mask)
            witness = matching.match_basis(criterion_matroid, src, n_matroid)
            verdict = matching.rank_criterion(criterion_matroid, src, n_matroid)
            run.bump("rado_calls")
            if verdict.holds:
                run.bump("criterion_holds")
                if witness is None:
                    run.bump("criterion_violations")
            hit = witness is not None
            cache[mask] = hit
        return hit

    return src_ok


def _verify_sparse_sym(instance, bounds):
    """Sparse paving matroids avoiding 0 are matched to themselves.

    The claim fails: the smallest counterexample is the rank-2 matroid on
    {1, 2, 3, 4} with circuit-hyperplane {3, 4} (over any group embedding
    these as distinct sums-avoiding elements; the integers and Z/11Z both
    work). Its basis {1, 2} admits only the target {3, 4}, which is the
    circuit-hyperplane. The run enumerates the whole declared scope,
    reports the first counterexample, and counts every failing matroid.
    """
    group = _group_bound(bounds)
    universe = _universe_bound(bounds, "universe", group, with_zero=False)
    sizes = _int_tuple(bounds, "sizes", (4, 5))
    ranks = _int_tuple(bounds, "ranks", (2, 3))
    run = _Run(
        "sparse-sym",
        _norm_bounds("sparse-sym", group, universe=universe, sizes=sizes, ranks=ranks),
    )
    run.extras["failing_matroids"] = 0
    zero = group.zero()
    for size in sizes:
        for combo in _subsets(universe, size):
            if zero in combo:
                continue
            ground = GroundSet(group, combo)
            for rank in ranks:
                if rank > size:
                    continue
                for m in sparse_census(ground, rank):
                    run.checked += 1
                    cache = {}
                    src_ok = _match_cacheable(ground, m, cache, run, m)
                    bad = next(
                        (b for b in m.bases_masks if not src_ok(b)), None
                    )
                    if bad is not None:
                        run.extras["failing_matroids"] += 1
                        run.fail(
                            _pair_payload(
                                group,
                                m,
                                m,
                                basis=ground.elems_of(bad),
                                claim="sparse paving self-matching",
                            )
                        )
    return run.record()


def _asy_size_filter(cond, em, en, n, p):
    if cond == "asy-1":
        return em < min(en - 1, p)
    if cond == "asy-2":
        return em == en - 1 and en < p
    if cond == "asy-3":
        return em == en and en < p
    if cond == "asy-4":
        return em < en - n - 1
    if cond == "asy-uniform":
        return em <= en and en < p
    if cond == "asy-coloopless":
        return em == en == n + 1 and n + 1 < p
    raise UnknownTheoremError(cond)


def _asy_em_filter(cond, subset):
    if cond == "asy-2":
        return not additive.is_progression(subset)
    if cond == "asy-3":
        return additive.classify_progression(subset).kind == additive.NEITHER
    return True


_ASY_CLAIMS = {
    "asy-1": "small ground set condition",
    "asy-2": "non-progression, one-smaller ground set",
    "asy-3": "neither progression nor semi-progression, equal ground sets",
    "asy-4": "ground set smaller than |E(N)|-n-1",
    "asy-uniform": "uniform target",
    "asy-coloopless": "coloopless sparse paving target",
}


def _make_asy_verifier(cond):
    needs_finite = cond in ("asy-2", "asy-3")

    def _verify(instance, bounds):
        inst = _instance_bound(instance, bounds)
        if inst is not None and "m" in bounds and "n" in bounds:
            return _asy_instance(cond, inst, bounds)
        group = _group_bound(bounds)
        if needs_finite:
            _require_finite(group)
        p = group.min_subgroup_size()
        universe_m = _universe_bound(bounds, "universe_m", group, with_zero=True)
        universe_n = _universe_bound(bounds, "universe_n", group, with_zero=False)
        ranks = _int_tuple(bounds, "ranks", (1, 2, 3))
        max_size = int(bounds.get("max_size", DEFAULT_MAX_SIZE))
        run = _Run(
            cond,
            _norm_bounds(
                cond,
                group,
                universe_m=universe_m,
                universe_n=universe_n,
                ranks=ranks,
                max_size=max_size,
            ),
        )
        zero = group.zero()
        for n_rank in ranks:
            for em_size in range(n_rank, max_size + 1):
                en_sizes = [
                    s
                    for s in range(n_rank, max_size + 1)
                    if _asy_size_filter(cond, em_size, s, n_rank, p)
                ]
                if not en_sizes:
                    continue
                for combo_m in _subsets(universe_m, em_size):
                    ground_m = GroundSet(group, combo_m)
                    if not _asy_em_filter(
                        cond, GroupSubset(group, frozenset(combo_m))
                    ):
                        continue
                    if cond == "asy-coloopless":
                        m_census = corank1_census(ground_m)
                    else:
                        m_census = sparse_census(ground_m, n_rank)
                    uniform_m = UniformMatroid(ground_m, n_rank)
                    for en_size in en_sizes:
                        for combo_n in _subsets(universe_n, en_size):
                            if zero in combo_n:
                                continue
                            ground_n = GroundSet(group, combo_n)
                            if cond == "asy-uniform":
                                n_census = [UniformMatroid(ground_n, n_rank)]
                            else:
                                n_census = sparse_census(ground_n, n_rank)
                            if cond == "asy-coloopless":
                                n_census = [
                                    nn for nn in n_census if not nn.coloops()
                                ]
                            for nn in n_census:
                                cache = {}
                                src_ok = _match_cacheable(
                                    ground_m, nn, cache, run, uniform_m
                                )
                                for mm in m_census:
                                    run.checked += 1
                                    bad = next(
                                        (
                                            b
                                            for b in mm.bases_masks
                                            if not src_ok(b)
                                        ),
                                        None,
                                    )
                                    if bad is not None:
                                        run.fail(
                                            _pair_payload(
                                                group,
                                                mm,
                                                nn,
                                                basis=ground_m.elems_of(bad),
                                                claim=_ASY_CLAIMS[cond],
                                            )
                                        )
                                        return run.record()
        return run.record()

    _verify.__name__ = f"_verify_{cond.replace('-', '_')}"
    return _verify


def _asy_instance(cond, inst, bounds):
    group = inst.group
    m = inst.matroid(bounds["m"])
    n = inst.matroid(bounds["n"])
    if m.rank_value != n.rank_value or m.rank_value == 0:
        raise HypothesisViolation("equal positive ranks")
    n_rank = m.rank_value
    p = group.min_subgroup_size()
    if group.zero() in n.ground:
        raise HypothesisViolation("0 not in E(N)")
    if cond in ("asy-2", "asy-3") and not group.is_finite():
        raise HypothesisViolation("finite group")
    if not _asy_size_filter(cond, len(m.ground), len(n.ground), n_rank, p):
        raise HypothesisViolation(f"{cond} size condition")
    if not _asy_em_filter(cond, GroupSubset(group, frozenset(m.ground.elements))):
        raise HypothesisViolation(f"{cond} additive condition on E(M)")
    if cond == "asy-uniform":
        if n.rep != "uniform":
            raise HypothesisViolation("N uniform")
    elif cond == "asy-coloopless":
        if n.paving_class() != SPARSE_PAVING:
            raise HypothesisViolation("N sparse paving")
        if n.coloops():
            raise HypothesisViolation("N coloopless")
    else:
        if n.paving_class() != SPARSE_PAVING:
            raise HypothesisViolation("N sparse paving")
    run = _Run(cond, _norm_bounds(cond, group, m=bounds["m"], n=bounds["n"]))
    run.checked = 1
    report = matching.match_matroid(m, n)
    if not report.matched:
        run.fail(
            _pair_payload(
                group, m, n, basis=report.failing_basis, claim=_ASY_CLAIMS[cond]
            )
        )
    return run.record()


def _verify_asy_n_plus_1(instance, bounds):
    """Equal ground sets of size n+1 with the translate-size and non-semi hypotheses."""
    inst = _instance_bound(instance, bounds)
    if inst is not None and "m" in bounds and "n" in bounds:
        group = inst.group
        m = inst.matroid(bounds["m"])
        n = inst.matroid(bounds["n"])
        _check_n_plus_1_hypotheses(group, m, n)
        run = _Run(
            "asy-n+1", _norm_bounds("asy-n+1", group, m=bounds["m"], n=bounds["n"])
        )
        run.checked = 1
        report = matching.match_matroid(m, n)
        if not report.matched:
            run.fail(
                _pair_payload(
                    group, m, n, basis=report.failing_basis, claim="n+1 translate condition"
                )
            )
        return run.record()

    group = _group_bound(bounds)
    _require_finite(group)
    p = group.min_subgroup_size()
    universe_m = _universe_bound(bounds, "universe_m", group, with_zero=True)
    universe_n = _universe_bound(bounds, "universe_n", group, with_zero=False)
    ranks = _int_tuple(bounds, "ranks", (3,))
    run = _Run(
        "asy-n+1",
        _norm_bounds(
            "asy-n+1", group, universe_m=universe_m, universe_n=universe_n, ranks=ranks
        ),
    )
    zero = group.zero()
    for n_rank in ranks:
        size = n_rank + 1
        if size >= p:
            continue
        for combo_m in _subsets(universe_m, size):
            subset_m = GroupSubset(group, frozenset(combo_m))
            if additive.classify_progression(subset_m).kind != additive.NEITHER:
                continue
            ground_m = GroundSet(group, combo_m)
            m_census = corank1_census(ground_m)
            uniform_m = UniformMatroid(ground_m, n_rank)
            em = set(combo_m)
            for combo_n in _subsets(universe_n, size):
                if zero in combo_n:
                    continue
                en = set(combo_n)
                if any(
                    sum(1 for b in en if group.add_exact(a, b) in em) == n_rank
                    for a in em
                ):
                    continue
                ground_n = GroundSet(group, combo_n)
                for nn in corank1_census(ground_n):
                    cache = {}
                    src_ok = _match_cacheable(ground_m, nn, cache, run, uniform_m)
                    for mm in m_census:
                        run.checked += 1
                        bad = next(
                            (b for b in mm.bases_masks if not src_ok(b)), None
                        )
                        if bad is not None:
                            run.fail(
                                _pair_payload(
                                    group,
                                    mm,
                                    nn,
                                    basis=ground_m.elems_of(bad),
                                    claim="n+1 translate condition",
                                )
                            )
                            return run.record()
    return run.record()


def _check_n_plus_1_hypotheses(group, m, n):
    _require_finite(group)
    if m.rank_value != n.rank_value or m.rank_value == 0:
        raise HypothesisViolation("equal positive ranks")
    n_rank = m.rank_value
    if len(m.ground) != n_rank + 1 or len(n.ground) != n_rank + 1:
        raise HypothesisViolation("|E(M)| = |E(N)| = n+1")
    if not n_rank + 1 < group.min_subgroup_size():
        raise HypothesisViolation("n+1 < p(G)")
    if group.zero() in n.ground:
        raise HypothesisViolation("0 not in E(N)")
    em = set(m.ground.elements)
    en = set(n.ground.elements)
    for a in em:
        if sum(1 for b in en if group.add_exact(a, b) in em) == n_rank:
            raise HypothesisViolation(
                "|(-a + E(M)) cap E(N)| != n", f"violated at a = {a}"
            )
    subset_m = GroupSubset(group, frozenset(em))
    if additive.classify_progression(subset_m).kind != additive.NEITHER:
        raise HypothesisViolation("E(M) neither progression nor semi-progression")


def _verify_asy_order(instance, bounds):
    """Order-based condition: positive ground sets, max(E(M)) outside the sumset."""
    inst = _instance_bound(instance, bounds)
    if inst is not None and "m" in bounds and "n" in bounds:
        group = inst.group
        m = inst.matroid(bounds["m"])
        n = inst.matroid(bounds["n"])
        run = _Run(
            "asy-order", _norm_bounds("asy-order", group, m=bounds["m"], n=bounds["n"])
        )
        _check_asy_order_hypotheses(group, m, n)
        run.checked = 1
        report = matching.match_matroid(m, n)
        if not report.matched:
            run.fail(
                _pair_payload(
                    group, m, n, basis=report.failing_basis, claim="order-based condition"
                )
            )
        return run.record()

    group = _group_bound(bounds)
    if not isinstance(group, IntegerWindow):
        raise HypothesisViolation(
            "exhaustive scope needs an integer window",
            "finite groups are handled in instance mode",
        )
    universe = _universe_bound(bounds, "universe", group, with_zero=False)
    if any(e <= 0 for e in universe):
        raise HypothesisViolation("positive universe", "universe must be positive")
    ranks = _int_tuple(bounds, "ranks", (1, 2))
    run = _Run(
        "asy-order", _norm_bounds("asy-order", group, universe=universe, ranks=ranks)
    )
    for n_rank in ranks:
        size = n_rank + 1
        for combo_m in _subsets(universe, size):
            ground_m = GroundSet(group, combo_m)
            m_census = corank1_census(ground_m)
            uniform_m = UniformMatroid(ground_m, n_rank)
            max_m = max(combo_m)
            for combo_n in _subsets(universe, size):
                sums = {a + b for a in combo_m for b in combo_n}
                if max_m in sums:
                    continue
                ground_n = GroundSet(group, combo_n)
                for nn in paving_census(ground_n, n_rank):
                    cache = {}
                    src_ok = _match_cacheable(ground_m, nn, cache, run, uniform_m)
                    for mm in m_census:
                        run.checked += 1
                        bad = next(
                            (b for b in mm.bases_masks if not src_ok(b)), None
                        )
                        if bad is not None:
                            run.fail(
                                _pair_payload(
                                    group,
                                    mm,
                                    nn,
                                    basis=ground_m.elems_of(bad),
                                    claim="order-based condition",
                                )
                            )
                            return run.record()
    return run.record()


def _check_asy_order_hypotheses(group, m, n):
    if m.rank_value != n.rank_value or m.rank_value == 0:
        raise HypothesisViolation("equal positive ranks")
    n_rank = m.rank_value
    if len(m.ground) != n_rank + 1 or len(n.ground) != n_rank + 1:
        raise HypothesisViolation("|E(M)| = |E(N)| = n+1")
    if not n_rank + 1 < group.min_subgroup_size():
        raise HypothesisViolation("n+1 < p(G)")
    if n.paving_class() == NOT_PAVING:
        raise HypothesisViolation("N paving")
    ctx = build_ordered_context(m, n)
    if ctx is None:
        raise HypothesisViolation(
            "compatible total order", "no rectification found within the search window"
        )
    em, en = m.ground.elements, n.ground.elements
    if not (ctx.all_positive(em) and ctx.all_positive(en)):
        # Mixed-sign ground sets are an open case; reject rather than assert.
        raise HypothesisViolation("E(M) and E(N) positive")
    g = group
    sums = {g.add_exact(a, b) for a in em for b in en}
    if ctx.max_of(em) in sums:
        raise HypothesisViolation("max(E(M)) outside E(M)+E(N)")
    return ctx


# ---------------------------------------------------------------------------
# Transversal matroid verifiers
# ---------------------------------------------------------------------------


def _transversal_blocks(matroid):
    if not isinstance(matroid, PartitionMatroid) or not matroid.is_transversal:
        raise HypothesisViolation(
            "transversal matroid", "needs a partition matroid with all caps 1"
        )
    return [sorted(b) for b in matroid.blocks()]


def _check_transversal_1_hypotheses(group, m, n, ctx, *, sign):
    blocks_m = _transversal_blocks(m)
    blocks_n = _transversal_blocks(n)
    if len(blocks_m) != len(blocks_n):
        raise HypothesisViolation("equal block counts")
    if [len(b) for b in blocks_m] != [len(b) for b in blocks_n]:
        raise HypothesisViolation("|E_i| = |E'_i| for all i")
    em = m.ground.elements
    en = n.ground.elements
    if sign == "positive":
        if not (ctx.all_positive(em) and ctx.all_positive(en)):
            raise HypothesisViolation("E and E' positive")
    else:
        if not (ctx.all_negative(em) and ctx.all_negative(en)):
            raise HypothesisViolation("E and E' negative")
    for blocks in (blocks_m, blocks_n):
        for first, second in zip(blocks, blocks[1:]):
            if not ctx.strictly_below(first, second):
                raise HypothesisViolation("E_i strictly below E_j for i < j")
    sizes = [len(b) for b in blocks_m]
    if sign == "positive":
        if any(sizes[i] <= sizes[i + 1] for i in range(len(sizes) - 1)):
            raise HypothesisViolation("|E_i| > |E_j| for i < j")
        if ctx.value(ctx.max_of(em)) > ctx.value(ctx.max_of(en)):
            raise HypothesisViolation("max E below max E'")
    else:
        if any(sizes[i] >= sizes[i + 1] for i in range(len(sizes) - 1)):
            raise HypothesisViolation("|E_i| < |E_j| for i < j")
        if ctx.value(ctx.min_of(en)) > ctx.value(ctx.min_of(em)):
            raise HypothesisViolation("min E' below min E")


def _runs_of_sizes(sorted_pool, sizes):
    """Split a sorted pool prefix into consecutive blocks of the given sizes."""
    total = sum(sizes)
    for combo in itertools.combinations(sorted_pool, total):
        blocks = []
        at = 0
        for s in sizes:
            blocks.append(list(combo[at : at + s]))
            at += s
        yield blocks


def _strictly_decreasing_profiles(n_blocks, total_max):
    """Strictly decreasing size profiles s_1 > ... > s_n >= 1."""
    def grow(prefix, remaining_max):
        if len(prefix) == n_blocks:
            yield tuple(prefix)
            return
        upper = min(remaining_max, prefix[-1] - 1) if prefix else remaining_max
        for s in range(upper, 0, -1):
            rest = n_blocks - len(prefix) - 1
            # Feasibility: the remaining strictly smaller sizes must fit.
            if s - 1 < rest:
                continue
            yield from grow(prefix + [s], remaining_max - s)

    yield from grow([], total_max)


def _verify_transversal_1(instance, bounds):
    """Ordered transversal matroids with dominating block structure are matched."""
    inst = _instance_bound(instance, bounds)
    if inst is not None and "m" in bounds and "n" in bounds:
        group = inst.group
        m = inst.matroid(bounds["m"])
        n = inst.matroid(bounds["n"])
        sign = bounds.get("sign", "positive")
        run = _Run(
            "transversal-1",
            _norm_bounds("transversal-1", group, m=bounds["m"], n=bounds["n"], sign=sign),
        )
        ctx = build_ordered_context(m, n)
        if ctx is None:
            raise HypothesisViolation("compatible total order")
        _check_transversal_1_hypotheses(group, m, n, ctx, sign=sign)
        run.checked = 1
        report = matching.match_matroid(m, n)
        if not report.matched:
            run.fail(
                _pair_payload(
                    group, m, n, basis=report.failing_basis, claim="ordered transversal"
                )
            )
        return run.record()

    group = _group_bound(bounds)
    if not isinstance(group, IntegerWindow):
        raise HypothesisViolation("exhaustive scope needs an integer window")
    n_blocks = _int_tuple(bounds, "blocks", (2,))
    limit = int(bounds.get("limit", 6))
    signs = (bounds.get("sign"),) if bounds.get("sign") else ("positive", "negative")
    run = _Run(
        "transversal-1",
        _norm_bounds(
            "transversal-1", group, blocks=n_blocks, limit=limit, signs=list(signs)
        ),
    )
    for sign in signs:
        if sign == "positive":
            pool = [e for e in range(1, group.hi + 1)][:limit]
        else:
            pool = [e for e in range(group.lo, 0)][-limit:]
        for nb in n_blocks:
            for profile in _strictly_decreasing_profiles(nb, limit):
                sizes = list(profile) if sign == "positive" else list(profile)[::-1]
                for blocks_m in _runs_of_sizes(pool, sizes):
                    em = [e for b in blocks_m for e in b]
                    for blocks_n in _runs_of_sizes(pool, sizes):
                        en = [e for b in blocks_n for e in b]
                        if sign == "positive" and max(em) > max(en):
                            continue
                        if sign == "negative" and min(en) > min(em):
                            continue
                        m = PartitionMatroid(
                            GroundSet(group, em), blocks_m, [1] * nb
                        )
                        n = PartitionMatroid(
                            GroundSet(group, en), blocks_n, [1] * nb
                        )
                        run.checked += 1
                        report = matching.match_matroid(m, n)
                        if not report.matched:
                            run.fail(
                                _pair_payload(
                                    group,
                                    m,
                                    n,
                                    basis=report.failing_basis,
                                    claim=f"ordered transversal ({sign})",
                                )
                            )
                            return run.record()
    return run.record()


def _check_transversal_2_hypotheses(group, m, n, ctx):
    """Search for an index k witnessing the mixed-sign hypotheses; None if absent."""
    blocks_m = _transversal_blocks(m)
    blocks_n = _transversal_blocks(n)
    count = len(blocks_m)
    if len(blocks_n) != count:
        raise HypothesisViolation("equal block counts")
    if [len(b) for b in blocks_m] != [len(b) for b in blocks_n]:
        raise HypothesisViolation("|E_i| = |E'_i| for all i")
    for blocks in (blocks_m, blocks_n):
        for first, second in zip(blocks, blocks[1:]):
            if not ctx.strictly_below(first, second):
                return None
    em, en = m.ground.elements, n.ground.elements
    sizes = [len(b) for b in blocks_m]
    for k in range(1, count + 1):
        if not all(
            ctx.all_negative(blocks_m[i]) and ctx.all_negative(blocks_n[i])
            for i in range(k - 1)
        ):
            continue
        if not all(
            ctx.all_positive(blocks_m[i]) and ctx.all_positive(blocks_n[i])
            for i in range(k, count)
        ):
            continue
        if {group.neg(e) for e in blocks_n[k - 1]} != set(blocks_m[k - 1]):
            continue
        # Sizes fall off moving away from block k on either side.
        ok = True
        for i in range(count):
            for j in range(i + 1, count):
                if i > k - 1 and sizes[i] <= sizes[j]:
                    ok = False
                if j < k - 1 and sizes[j] <= sizes[i]:
                    ok = False
        if not ok:
            continue
        if k < count and ctx.value(ctx.max_of(em)) > ctx.value(ctx.max_of(en)):
            continue
        if k > 1 and ctx.value(ctx.min_of(en)) > ctx.value(ctx.min_of(em)):
            continue
        return k
    return None


def _verify_transversal_2(instance, bounds):
    """Mixed-sign transversal matroids with a negated bridge block are matched."""
    inst = _instance_bound(instance, bounds)
    if inst is not None and "m" in bounds and "n" in bounds:
        group = inst.group
        m = inst.matroid(bounds["m"])
        n = inst.matroid(bounds["n"])
        run = _Run(
            "transversal-2",
            _norm_bounds("transversal-2", group, m=bounds["m"], n=bounds["n"]),
        )
        ctx = build_ordered_context(m, n)
        if ctx is None:
            raise HypothesisViolation("compatible total order")
        k = _check_transversal_2_hypotheses(group, m, n, ctx)
        if k is None:
            raise HypothesisViolation("no index k satisfies the sign/size conditions")
        run.extras["k"] = k
        run.checked = 1
        report = matching.match_matroid(m, n)
        if not report.matched:
            run.fail(
                _pair_payload(
                    group, m, n, basis=report.failing_basis, claim="mixed-sign transversal"
                )
            )
        return run.record()

    group = _group_bound(bounds)
    if not isinstance(group, IntegerWindow):
        raise HypothesisViolation("exhaustive scope needs an integer window")
    limit = int(bounds.get("limit", 4))
    n_blocks = _int_tuple(bounds, "blocks", (2,))
    run = _Run(
        "transversal-2",
        _norm_bounds("transversal-2", group, blocks=n_blocks, limit=limit),
    )
    negatives = [e for e in range(max(group.lo, -limit), 0)]
    positives = [e for e in range(1, min(group.hi, limit) + 1)]
    for nb in n_blocks:
        for sizes in itertools.product(range(1, 3), repeat=nb):
            for blocks_m in _candidate_blocks(negatives, positives, sizes):
                for blocks_n in _candidate_blocks(negatives, positives, sizes):
                    m, n, k = _try_transversal_2_pair(
                        group, blocks_m, blocks_n, nb
                    )
                    if m is None:
                        continue
                    run.checked += 1
                    run.bump(f"k={k}")
                    report = matching.match_matroid(m, n)
                    if not report.matched:
                        run.fail(
                            _pair_payload(
                                group,
                                m,
                                n,
                                basis=report.failing_basis,
                                claim="mixed-sign transversal",
                            )
                        )
                        return run.record()
    return run.record()


def _candidate_blocks(negatives, positives, sizes):
    pool = sorted(negatives) + sorted(positives)
    yield from _runs_of_sizes(pool, list(sizes))


def _try_transversal_2_pair(group, blocks_m, blocks_n, nb):
    try:
        em = [e for b in blocks_m for e in b]
        en = [e for b in blocks_n for e in b]
        m = PartitionMatroid(GroundSet(group, em), blocks_m, [1] * nb)
        n = PartitionMatroid(GroundSet(group, en), blocks_n, [1] * nb)
    except ValueError:
        return None, None, None
    ctx = build_ordered_context(m, n)
    k = _check_transversal_2_hypotheses(group, m, n, ctx)
    if k is None:
        return None, None, None
    return m, n, k


# ---------------------------------------------------------------------------
# Rado and rank-criterion verifiers
# ---------------------------------------------------------------------------


def _random_matroid(rng, group, size, rank):
    ground = GroundSet(group, range(1, size + 1))
    style = rng.randrange(3)
    if style == 0:
        return UniformMatroid(ground, rank)
    if style == 1:
        blocks, pool = [], list(ground.elements)
        while pool:
            take = rng.randrange(1, len(pool) + 1)
            blocks.append(pool[:take])
            pool = pool[take:]
        caps = [rng.randrange(1, len(b) + 1) for b in blocks]
        return PartitionMatroid(ground, blocks, caps)
    chosen = []
    for cand in ground.masks_of_size(rank):
        if rng.random() < 0.4 and all(
            (cand & c).bit_count() <= rank - 2 for c in chosen
        ):
            chosen.append(cand)
    try:
        return ChSparsePavingMatroid(ground, rank, chosen, _from_masks=True)
    except ValueError:
        return UniformMatroid(ground, rank)


def _verify_rado(instance, bounds):
    """Transversal search agrees with brute force; violation certificates re-verify."""
    seed = int(bounds.get("seed", 0))
    count = int(bounds.get("count", 500))
    max_rank = int(bounds.get("max_rank", 4))
    max_ground = int(bounds.get("max_ground", 8))
    group = bounds.get("group")
    group = group_from_json(group) if isinstance(group, dict) else (
        group or IntegerWindow(0, 2 * max_ground)
    )
    rng = random.Random(seed)
    run = _Run(
        "rado",
        _norm_bounds(
            "rado",
            group,
            seed=seed,
            count=count,
            max_rank=max_rank,
            max_ground=max_ground,
        ),
    )
    while run.checked < count:
        size = rng.randrange(2, max_ground + 1)
        n_matroid = _random_matroid(rng, group, size, rng.randrange(1, min(max_rank, size) + 1))
        rank = n_matroid.rank_value
        if rank > max_rank:
            continue
        elems = list(n_matroid.ground.elements)
        family = [
            frozenset(e for e in elems if rng.random() < 0.55) for _ in range(rank)
        ]
        verdict = matching.rado_transversal(family, n_matroid)
        brute = matching.rado_transversal_brute(family, n_matroid)
        run.checked += 1
        if verdict.has_transversal != brute.has_transversal:
            run.fail(
                {
                    "kind": "rado-instance",
                    "group": group.to_json(),
                    "matroid": matroid_to_json(n_matroid),
                    "family": [elems_to_json(f) for f in family],
                    "claim": "search agrees with brute force",
                }
            )
            return run.record()
        if verdict.has_transversal:
            run.bump("transversals")
            if not n_matroid.is_independent(verdict.transversal):
                run.fail({"kind": "rado-instance", "claim": "independent transversal"})
                return run.record()
        else:
            run.bump("violations")
            union = set().union(*(family[i] for i in verdict.violation))
            if n_matroid.rank(union) >= len(verdict.violation):
                run.fail(
                    {
                        "kind": "rado-instance",
                        "group": group.to_json(),
                        "matroid": matroid_to_json(n_matroid),
                        "family": [elems_to_json(f) for f in family],
                        "claim": "violation certificate re-verifies",
                    }
                )
                return run.record()
    return run.record()


def _verify_rank_criteria(instance, bounds):
    """Wherever the rank criterion holds, a matched basis exists."""
    group = _group_bound(bounds) if bounds.get("group") else IntegerWindow(0, 12)
    universe = _universe_bound(bounds, "universe", group, with_zero=False)[:4]
    ranks = _int_tuple(bounds, "ranks", (2,))
    run = _Run(
        "rank-criteria",
        _norm_bounds("rank-criteria", group, universe=universe, ranks=ranks),
    )
    for n_rank in ranks:
        for em_size in range(n_rank, len(universe) + 1):
            for combo_m in _subsets(universe, em_size):
                ground_m = GroundSet(group, combo_m)
                uniform_m = UniformMatroid(ground_m, n_rank)
                for en_size in range(n_rank, len(universe) + 1):
                    for combo_n in _subsets(universe, en_size):
                        ground_n = GroundSet(group, combo_n)
                        for nn in sparse_census(ground_n, n_rank):
                            for src_mask in uniform_m.bases_masks:
                                src = ground_m.elems_of(src_mask)
                                verdict = matching.rank_criterion(uniform_m, src, nn)
                                run.checked += 1
                                if not verdict.holds:
                                    run.bump("criterion_fails")
                                    continue
                                run.bump("criterion_holds")
                                if matching.match_basis(uniform_m, src, nn) is None:
                                    run.fail(
                                        _pair_payload(
                                            group,
                                            uniform_m,
                                            nn,
                                            basis=src,
                                            claim="criterion implies witness",
                                        )
                                    )
                                    return run.record()
    return run.record()


# ---------------------------------------------------------------------------
# Fixed counterexample reproductions
# ---------------------------------------------------------------------------


def _counterexample_matroids(example_id, n, group):
    ground = GroundSet(group, range(1, 2 * n + 1))
    blocks = [[i] for i in range(1, n)] + [list(range(n, 2 * n + 1))]
    transversal = PartitionMatroid(ground, blocks, [1] * n)
    if example_id == "sym-counterexample":
        return transversal, transversal
    return UniformMatroid(ground, n), transversal


def reproduce_example(example_id, n, group=None):
    """Re-run a fixed counterexample; passed=True means it is confirmed.

    ``sym-counterexample``: a transversal matroid on [2n] that is not matched
    to itself although 0 is outside the ground set. ``asy-counterexample``:
    the uniform matroid on [2n] that is not matched to that transversal
    matroid. The basis [n] fails in both. The group defaults to an integer
    window; a cyclic group is accepted when its order exceeds 4n, which keeps
    all sums wrap-free.
    """
    if example_id not in ("sym-counterexample", "asy-counterexample"):
        raise UnknownTheoremError(example_id)
    if n < 2:
        raise HypothesisViolation("n >= 2")
    if n > 5:
        raise BudgetExceededError(f"counterexample reproduction refuses n = {n} > 5")
    if group is None:
        group = IntegerWindow(0, 4 * n)
    if group.is_finite():
        if group.order() <= 4 * n:
            raise HypothesisViolation(
                "group order > 4n", f"|G| = {group.order()} wraps sums for n = {n}"
            )
    elif group.hi < 2 * n or group.lo > 0:
        raise HypothesisViolation("window contains [1, 2n]")
    run = _Run(
        example_id, _norm_bounds(example_id, group, n=n)
    )
    m, target = _counterexample_matroids(example_id, n, group)
    basis = tuple(range(1, n + 1))
    witness = matching.match_basis(m, basis, target)
    report = matching.match_matroid(m, target)
    run.checked = 1
    confirmed = (
        witness is None
        and not report.matched
        and report.failing_basis == frozenset(basis)
    )
    if not confirmed:
        payload = _pair_payload(group, m, target, basis=basis, claim="unmatchable basis [n]")
        payload["expect_matched"] = False
        if witness is not None:
            payload["witness"] = {
                "source": [elem_to_json(e) for e in witness.source],
                "target": [elem_to_json(e) for e in witness.target],
            }
        run.fail(payload)
    return run.record()


def _verify_example(example_id):
    def _verify(instance, bounds):
        group = _group_bound(bounds, required=False)
        n = int(bounds.get("n", 2))
        return reproduce_example(example_id, n, group)

    return _verify


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


VERIFIERS = {
    "sym-group": _verify_sym_group,
    "only-if-1": _verify_only_if_1,
    "only-if-2": _verify_only_if_2,
    "sparse-sym": _verify_sparse_sym,
    "asy-1": _make_asy_verifier("asy-1"),
    "asy-2": _make_asy_verifier("asy-2"),
    "asy-3": _make_asy_verifier("asy-3"),
    "asy-4": _make_asy_verifier("asy-4"),
    "asy-uniform": _make_asy_verifier("asy-uniform"),
    "asy-coloopless": _make_asy_verifier("asy-coloopless"),
    "asy-order": _verify_asy_order,
    "asy-n+1": _verify_asy_n_plus_1,
    "transversal-1": _verify_transversal_1,
    "transversal-2": _verify_transversal_2,
    "kneser": _verify_kneser,
    "kemperman": _verify_kemperman,
    "eliahou": _verify_eliahou,
    "critical": _verify_critical,
    "lemma-progression": _verify_lemma_progression,
    "rado": _verify_rado,
    "rank-criteria": _verify_rank_criteria,
    "sym-counterexample": _verify_example("sym-counterexample"),
    "asy-counterexample": _verify_example("asy-counterexample"),
}


def verify(theorem_id, *, instance=None, bounds=None) -> VerdictRecord:
    """Run one registered verifier.

    ``bounds`` select exhaustive scopes (group, universes, ranks, sizes,
    seeds) or name instance-file entries for single-instance checks. A
    ``budget`` bound caps the number of instances the run may check.
    """
    fn = VERIFIERS.get(theorem_id)
    if fn is None:
        raise UnknownTheoremError(
            f"unknown theorem {theorem_id!r}; known: {', '.join(sorted(VERIFIERS))}"
        )
    bounds = dict(bounds or {})
    budget = bounds.pop("budget", None)
    token = _INSTANCE_BUDGET.set(int(budget) if budget is not None else None)
    try:
        return fn(instance, bounds)
    finally:
        _INSTANCE_BUDGET.reset(token)


def recheck_counterexample(payload) -> bool:
    """Re-verify a counterexample payload standalone.

    Returns True when the payload still witnesses the recorded failure (for
    matroid pairs: the observed matching outcome still differs from the
    expectation stored in the payload).
    """
    if payload.get("kind") != "matroid-pair":
        raise ValueError(f"cannot recheck payload kind {payload.get('kind')!r}")
    inst = parse_instance_obj(
        {
            "group": payload["group"],
            "matroids": {"m": payload["m"], "n": payload["n"]},
        }
    )
    report = matching.match_matroid(inst.matroid("m"), inst.matroid("n"))
    return report.matched != payload["expect_matched"]
