"""Abelian group arithmetic: cyclic groups, small products, and bounded integer windows.

Elements are plain values: ``int`` for cyclic groups and integer windows,
``tuple[int, ...]`` for product groups. Canonical form is unique, so ``==`` on
elements is group equality. All groups and elements are immutable; every
operation is a pure function.

The infinite group of integers is modelled as a bounded window ``[lo, hi]``.
Arithmetic whose true result leaves the window raises
:class:`~matchroid.errors.WindowOverflowError` rather than wrapping. The
``*_exact`` variants compute in the modelled group itself (plain integer
arithmetic for windows) and never raise; they are meant for membership tests
against window-contained sets, where an escaping sum is simply not a member.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import SearchInconclusiveError, WindowOverflowError

INFINITE = math.inf

#: Group element: int for cyclic/window groups, tuple of ints for products.
Elem = int | tuple


class Group:
    """Common interface of the three group kinds."""

    kind = "abstract"

    # -- arithmetic ---------------------------------------------------------

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    # Exact variants: identical to the checked ones except on integer
    # windows, where they use unbounded integer arithmetic.
    def add_exact(self, a, b):
        return self.add(a, b)

    def sub_exact(self, a, b):
        return self.sub(a, b)

    def sum_in(self, a, b, members):
        """Whether a + b lies in ``members`` (a set of valid elements)."""
        return self.add_exact(a, b) in members

    # -- structure ----------------------------------------------------------

    def contains(self, a) -> bool:
        raise NotImplementedError

    def check(self, a):
        """Validate an element strictly (no canonicalisation) and return it."""
        if not self.contains(a):
            raise ValueError(f"{a!r} is not a canonical element of {self}")
        return a

    def is_finite(self) -> bool:
        raise NotImplementedError

    def order(self):
        """Number of elements, or INFINITE for the integer window."""
        raise NotImplementedError

    def elements(self):
        """All elements in canonical sorted order (window: the representable slice)."""
        raise NotImplementedError

    def element_order(self, a):
        """Least k >= 1 with k*a = 0, or INFINITE."""
        raise NotImplementedError

    def min_subgroup_size(self):
        """Smallest cardinality of a nonzero subgroup; INFINITE if torsion-free.

        For a finite group this is the smallest prime dividing the order.
        """
        raise NotImplementedError

    def subgroups(self):
        """All subgroups, ordered by (size, sorted element list). Finite groups only."""
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    # -- identity -----------------------------------------------------------

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Group) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class CyclicGroup(Group):
    """The integers modulo n, for n >= 2. Elements are ints in [0, n)."""

    kind = "cyclic"

    def __init__(self, n):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"cyclic group order must be an integer >= 2, got {n!r}")
        self.n = n

    def zero(self):
        return 0

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n

    def is_finite(self):
        return True

    def order(self):
        return self.n

    def elements(self):
        return tuple(range(self.n))

    def element_order(self, a):
        return self.n // math.gcd(self.n, a)

    def min_subgroup_size(self):
        return _smallest_prime_factor(self.n)

    def subgroups(self):
        return _enumerate_subgroups(self)

    def to_json(self):
        return {"kind": "cyclic", "n": self.n}

    def _key(self):
        return ("cyclic", self.n)

    def __repr__(self):
        return f"CyclicGroup({self.n})"


class ProductGroup(Group):
    """A direct product of cyclic groups. Elements are tuples, one coordinate per factor.

    Desk-scale limits: at most 3 factors, total order at most 64.
    """

    kind = "product"

    MAX_FACTORS = 3
    MAX_ORDER = 64

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors or any(not isinstance(f, int) or f < 2 for f in factors):
            raise ValueError(f"product factors must be integers >= 2, got {factors!r}")
        if len(factors) > self.MAX_FACTORS:
            raise ValueError(f"at most {self.MAX_FACTORS} factors supported, got {len(factors)}")
        if math.prod(factors) > self.MAX_ORDER:
            raise ValueError(f"total order {math.prod(factors)} exceeds {self.MAX_ORDER}")
        self.factors = factors

    def zero(self):
        return (0,) * len(self.factors)

    def add(self, a, b):
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(isinstance(x, int) and 0 <= x < f for x, f in zip(a, self.factors))
        )

    def is_finite(self):
        return True

    def order(self):
        return math.prod(self.factors)

    def elements(self):
        return tuple(itertools.product(*(range(f) for f in self.factors)))

    def element_order(self, a):
        return math.lcm(*(f // math.gcd(f, x) for x, f in zip(a, self.factors)))

    def min_subgroup_size(self):
        return _smallest_prime_factor(self.order())

    def subgroups(self):
        return _enumerate_subgroups(self)

    def to_json(self):
        return {"kind": "product", "factors": list(self.factors)}

    def _key(self):
        return ("product", self.factors)

    def __repr__(self):
        return f"ProductGroup({self.factors})"


class IntegerWindow(Group):
    """A bounded slice [lo, hi] of the integers, with lo <= 0 <= hi.

    Models the torsion-free group of integers on finitely many elements.
    Checked arithmetic raises WindowOverflowError when the true result leaves
    the window; there is never silent wraparound.
    """

    kind = "zwindow"

    def __init__(self, lo, hi):
        if not (isinstance(lo, int) and isinstance(hi, int)):
            raise ValueError("window bounds must be integers")
        if not lo <= 0 <= hi:
            raise ValueError(f"window [{lo}, {hi}] must contain 0")
        self.lo = lo
        self.hi = hi

    def _fit(self, v):
        if not self.lo <= v <= self.hi:
            raise WindowOverflowError(v, self.lo, self.hi)
        return v

    def zero(self):
        return 0

    def add(self, a, b):
        return self._fit(a + b)

    def neg(self, a):
        return self._fit(-a)

    def sub(self, a, b):
        return self._fit(a - b)

    def add_exact(self, a, b):
        return a + b

    def sub_exact(self, a, b):
        return a - b

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and self.lo <= a <= self.hi

    def is_finite(self):
        return False

    def order(self):
        return INFINITE

    def elements(self):
        return tuple(range(self.lo, self.hi + 1))

    def element_order(self, a):
        return 1 if a == 0 else INFINITE

    def min_subgroup_size(self):
        return INFINITE

    def subgroups(self):
        raise ValueError("subgroup enumeration is unsupported for integer windows")

    def to_json(self):
        return {"kind": "zwindow", "lo": self.lo, "hi": self.hi}

    def _key(self):
        return ("zwindow", self.lo, self.hi)

    def __repr__(self):
        return f"IntegerWindow({self.lo}, {self.hi})"


def group_from_json(obj):
    """Build a group from its JSON object form."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"group JSON must be an object with a 'kind', got {obj!r}")
    kind = obj["kind"]
    if kind == "cyclic":
        return CyclicGroup(obj["n"])
    if kind == "product":
        return ProductGroup(obj["factors"])
    if kind == "zwindow":
        return IntegerWindow(obj["lo"], obj["hi"])
    raise ValueError(f"unknown group kind {kind!r}")


def _smallest_prime_factor(n):
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            return p
    return n


def generated_subgroup(group, generators):
    """Closure of a generator set under addition (finite groups)."""
    elems = {group.zero()}
    frontier = list(elems)
    gens = list(generators)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = group.add(s, g)
                if t not in elems:
                    elems.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(elems)


def is_subgroup(group, elems) -> bool:
    """Exhaustive closure check: contains 0, closed under + and negation."""
    s = set(elems)
    if group.zero() not in s:
        return False
    return all(group.neg(a) in s for a in s) and all(
        group.add(a, b) in s for a in s for b in s
    )


def _enumerate_subgroups(group):
    """All subgroups of a finite group, by breadth-first closure growth."""
    trivial = frozenset({group.zero()})
    found = {trivial}
    queue = [trivial]
    universe = group.elements()
    while queue:
        h = queue.pop()
        for g in universe:
            if g in h:
                continue
            k = generated_subgroup(group, set(h) | {g})
            if k not in found:
                found.add(k)
                queue.append(k)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# Rectification: Freiman isomorphisms of order 2 onto sets of integers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Rectification:
    """An injective map from a subset of a group onto integers preserving 2-sums.

    Invariants: 0 is in the domain and maps to 0, and for all a, b, c, d in the
    domain, a+b = c+d in the group exactly when map(a)+map(b) = map(c)+map(d)
    in the integers. The map induces a total order on its domain (a <= b iff
    map(a) <= map(b)) that is compatible with addition wherever sums stay in
    the domain.
    """

    group: Group
    mapping: dict = field(repr=False)

    @property
    def domain(self):
        return frozenset(self.mapping)

    def value(self, a):
        return self.mapping[a]

    def sorted_domain(self):
        return tuple(sorted(self.mapping, key=self.mapping.get))

    def is_freiman2(self) -> bool:
        """Brute-force check of the order-2 sum-preservation invariant."""
        if self.mapping.get(self.group.zero()) != 0:
            return False
        if len(set(self.mapping.values())) != len(self.mapping):
            return False
        dom = list(self.mapping)
        g, m = self.group, self.mapping
        for a, b in itertools.combinations_with_replacement(dom, 2):
            for c, d in itertools.combinations_with_replacement(dom, 2):
                same_group = g.add_exact(a, b) == g.add_exact(c, d)
                same_int = m[a] + m[b] == m[c] + m[d]
                if same_group != same_int:
                    return False
        return True

    def order_compatible(self) -> bool:
        """Whenever a <= b and a+c, b+c stay in the domain, a+c <= b+c."""
        dom = list(self.mapping)
        g, m = self.group, self.mapping
        for a, b, c in itertools.product(dom, repeat=3):
            if m[a] > m[b]:
                continue
            ac, bc = g.add_exact(a, c), g.add_exact(b, c)
            if ac in m and bc in m and m[ac] > m[bc]:
                return False
        return True


def rectify(group, elems, *, image_exponent=None, node_budget=200_000):
    """Find a Freiman-2 rectification of ``elems`` together with 0.

    Integer windows are already sets of integers: the identity map is
    returned. For finite groups a complete backtracking search assigns
    integer images inside ``[-2**c, 2**c]`` with ``c = 2*len(elems)`` by
    default. Returns the rectification, or ``None`` once the bounded search
    has exhausted the window (absence proven relative to the window), or
    raises SearchInconclusiveError when the node budget runs out first.
    """
    elems = set(elems)
    for e in elems:
        group.check(e)
    if isinstance(group, IntegerWindow):
        mapping = {e: e for e in elems | {0}}
        return Rectification(group, mapping)

    domain = [group.zero()] + sorted(elems - {group.zero()})
    c = image_exponent if image_exponent is not None else 2 * max(len(elems), 1)
    limit = 2 ** c

    mapping = {domain[0]: 0}
    # Difference structure: the Freiman-2 condition is exactly that
    # p - q  |->  map(p) - map(q) is a well-defined injective function.
    diff_to_int = {group.zero(): 0}
    int_to_diff = {0: group.zero()}
    nodes = [0]

    def candidates(e):
        forced = None
        for u in mapping:
            d = group.sub(e, u)
            if d in diff_to_int:
                v = mapping[u] + diff_to_int[d]
                if forced is not None and forced != v:
                    return []
                forced = v
        if forced is not None:
            return [forced] if -limit <= forced <= limit else []
        if len(mapping) == 1:
            # First free value: negating a rectification yields another one,
            # so searching positives only loses nothing.
            return list(range(1, limit + 1))
        vals = []
        for a in range(1, limit + 1):
            vals.extend((a, -a))
        return vals

    def place(e, v):
        added = []
        for u in mapping:
            d, i = group.sub(e, u), v - mapping[u]
            for dd, ii in ((d, i), (group.neg(d), -i)):
                known = diff_to_int.get(dd)
                if known is not None:
                    if known != ii:
                        break
                    continue
                if ii in int_to_diff:
                    break
                diff_to_int[dd] = ii
                int_to_diff[ii] = dd
                added.append(dd)
            else:
                continue
            for dd in added:
                del int_to_diff[diff_to_int.pop(dd)]
            return None
        return added

    def unplace(added):
        for dd in added:
            del int_to_diff[diff_to_int.pop(dd)]

    def search(k):
        if k == len(domain):
            return True
        e = domain[k]
        for v in candidates(e):
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise SearchInconclusiveError(
                    f"rectification search exceeded {node_budget} nodes"
                )
            added = place(e, v)
            if added is None:
                continue
            mapping[e] = v
            if search(k + 1):
                return True
            del mapping[e]
            unplace(added)
        return False

    if not search(1):
        return None
    rect = Rectification(group, dict(mapping))
    if not rect.is_freiman2():  # pragma: no cover - guards the search itself
        raise AssertionError("rectification search returned an invalid map")
    return rect
