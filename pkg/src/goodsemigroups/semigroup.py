"""Good semigroups of N^d represented by their finite small-elements data.

A good semigroup S is determined by its conductor c and the finite set
S n [0, c]: a point belongs to S iff its componentwise cap at c does.
The validator re-derives the defining axioms on an enlarged box, so a
small-elements set for which the capping rule is unsound gets rejected
instead of silently misbehaving.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from math import gcd

from .lattice import (
    Point,
    IndexSet,
    add,
    iter_box,
    join,
    leq,
    meet,
    ones,
    sub,
    zeros,
)


def _as_point(p) -> Point:
    return tuple(int(x) for x in p)


class GoodSemigroup:
    """Immutable small-elements representation of a good semigroup."""

    __slots__ = ("dim", "conductor", "small_elements", "_cache")

    def __init__(self, dim: int, conductor, small_elements):
        conductor = _as_point(conductor)
        small = frozenset(_as_point(p) for p in small_elements)
        if dim < 1 or len(conductor) != dim:
            raise ValueError("conductor dimension mismatch")
        for p in small:
            if len(p) != dim:
                raise ValueError(f"small element {p} has wrong dimension")
            if not (leq(zeros(dim), p) and leq(p, conductor)):
                raise ValueError(f"small element {p} outside [0, conductor]")
        if zeros(dim) not in small:
            raise ValueError("0 must be a small element")
        if conductor not in small:
            raise ValueError("the conductor must be a small element")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "small_elements", small)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("GoodSemigroup is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GoodSemigroup)
            and self.dim == other.dim
            and self.conductor == other.conductor
            and self.small_elements == other.small_elements
        )

    def __hash__(self):
        return hash((self.dim, self.conductor, self.small_elements))

    def __repr__(self):
        return f"GoodSemigroup(dim={self.dim}, conductor={self.conductor}, |small|={len(self.small_elements)})"

    @property
    def gamma(self) -> Point:
        return sub(self.conductor, ones(self.dim))

    def contains(self, p) -> bool:
        p = tuple(p)
        if len(p) != self.dim:
            raise ValueError(f"point {p} has wrong dimension")
        if any(x < 0 for x in p):
            return False
        capped = tuple(min(x, c) for x, c in zip(p, self.conductor))
        return capped in self.small_elements

    def elements_within(self, box: Point) -> tuple[Point, ...]:
        """All points of S n [0, box], cached per box."""
        box = _as_point(box)
        key = ("elts", box)
        if key not in self._cache:
            self._cache[key] = tuple(p for p in iter_box(box) if self.contains(p))
        return self._cache[key]

    def multiplicity(self) -> Point:
        """The minimal element of S with every coordinate positive."""
        key = "mult"
        if key not in self._cache:
            box = join(self.conductor, ones(self.dim))
            positives = [p for p in self.elements_within(box) if all(x > 0 for x in p)]
            m = positives[0]
            for p in positives[1:]:
                m = meet(m, p)
            if not self.contains(m):
                raise ValueError("no unique minimal positive element; input is not a good semigroup")
            self._cache[key] = m
        return self._cache[key]

    def is_local(self) -> bool:
        """True iff 0 is the only element with a zero coordinate."""
        key = "local"
        if key not in self._cache:
            box = join(self.conductor, ones(self.dim))
            self._cache[key] = not any(
                p != zeros(self.dim) and 0 in p for p in self.elements_within(box)
            )
        return self._cache[key]


def full_monoid(dim: int) -> GoodSemigroup:
    """All of N^d (conductor 0)."""
    return GoodSemigroup(dim, zeros(dim), [zeros(dim)])


def multiplicity(S: GoodSemigroup) -> Point:
    return S.multiplicity()


def is_local(S: GoodSemigroup) -> bool:
    return S.is_local()


def contains(S: GoodSemigroup, a) -> bool:
    return S.contains(a)


# --- delta sets against semigroup membership ------------------------------

def delta_nonempty(carrier, x: Point, F: IndexSet | None = None) -> bool:
    """Whether the (strict) delta set of x in direction F meets the carrier.

    F=None means the union over all single directions.  The search box is
    chosen so that a witness exists within it iff one exists at all.
    """
    d = carrier.dim
    if F is None:
        return any(delta_nonempty(carrier, x, frozenset({i})) for i in range(d))
    F = frozenset(F)
    if any(x[i] < 0 for i in F):
        return False
    bound = tuple(max(c, xi + 1) for c, xi in zip(carrier.conductor, x))
    ranges = []
    for j in range(d):
        if j in F:
            ranges.append(range(x[j], x[j] + 1))
        else:
            ranges.append(range(max(x[j] + 1, 0), bound[j] + 1))
    return any(carrier.contains(p) for p in product(*ranges))


def is_absolute(S: GoodSemigroup, a) -> bool:
    """True iff the union delta set of a in S is empty (a is maximal)."""
    a = _as_point(a)
    if not S.contains(a):
        raise ValueError(f"{a} is not an element of the semigroup")
    return not delta_nonempty(S, a)


def absolute_elements(S: GoodSemigroup, box) -> frozenset[Point]:
    box = _as_point(box)
    return frozenset(p for p in S.elements_within(box) if not delta_nonempty(S, p))


# --- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    witnesses: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    box: Point
    violations: tuple[Violation, ...] = ()

    def lines(self) -> list[str]:
        if self.ok:
            return [f"PASS: good semigroup axioms hold on box {self.box}"]
        out = [f"FAIL: {len(self.violations)} violation(s) on box {self.box}"]
        out += [f"  [{v.code}] {v.message}" for v in self.violations]
        return out


def _box_margin() -> int:
    try:
        return max(0, int(os.environ.get("GOODSG_BOX_MARGIN", "1")))
    except ValueError:
        return 1


def validate_membership(dim: int, conductor: Point, member, box: Point) -> list[Violation]:
    """Check the good-semigroup axioms for an arbitrary membership predicate.

    The meet axiom and the coordinate-lifting axiom are checked for every
    pair inside [0, box]; lifting witnesses are searched in [0, box+1],
    which cannot miss one (witnesses cap into that box).
    """
    violations: list[Violation] = []
    elems = [p for p in iter_box(box) if member(p)]
    eset = set(elems)
    if zeros(dim) not in eset:
        violations.append(Violation("G0", (), "0 is not a member"))
    # (G1) closure under meet
    for a in elems:
        for b in elems:
            if a < b:
                m = meet(a, b)
                if m not in eset:
                    violations.append(
                        Violation("G1", (a, b), f"meet {m} of {a} and {b} is missing")
                    )
    # (G2) coordinate-sharing lifting
    box2 = add(box, ones(dim))
    elems2 = [p for p in iter_box(box2) if member(p)]
    witness_memo: dict[tuple, bool] = {}

    def has_witness(i: int, ai: int, pattern: tuple) -> bool:
        key = (i, ai, pattern)
        if key not in witness_memo:
            found = False
            for e in elems2:
                if e[i] <= ai:
                    continue
                ok = True
                for j, (mj, strict) in enumerate(pattern):
                    if j == i:
                        continue
                    if strict:
                        if e[j] != mj:
                            ok = False
                            break
                    elif e[j] < mj:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            witness_memo[key] = found
        return witness_memo[key]

    for a in elems:
        for b in elems:
            if a == b or a > b:
                continue
            for i in range(dim):
                if a[i] != b[i]:
                    continue
                pattern = tuple(
                    (min(a[j], b[j]), a[j] != b[j]) for j in range(dim)
                )
                if not has_witness(i, a[i], pattern):
                    violations.append(
                        Violation(
                            "G2",
                            (a, b, i),
                            f"no lifting of {a}, {b} sharing coordinate {i}",
                        )
                    )
    # additive closure (capped membership makes every sum checkable)
    for a in elems:
        for b in elems:
            if a <= b:
                s = add(a, b)
                if not member_capped_sum(member, s, box):
                    violations.append(
                        Violation("ADD", (a, b), f"sum {s} of {a} and {b} is missing")
                    )
    return violations


def member_capped_sum(member, s: Point, box: Point) -> bool:
    capped = tuple(min(x, t) for x, t in zip(s, box))
    return member(capped)


def validate(S: GoodSemigroup, margin: int | None = None) -> ValidationReport:
    """Exhaustive axiom check; violations are data, not exceptions."""
    if margin is None:
        margin = _box_margin()
    try:
        e = S.multiplicity()
    except (ValueError, IndexError):
        e = ones(S.dim)
    box = tuple(c + ei + margin for c, ei in zip(S.conductor, e))
    violations = validate_membership(S.dim, S.conductor, S.contains, box)
    return ValidationReport(not violations, box, tuple(violations))


# --- constructions ---------------------------------------------------------

class NumericalSemigroup:
    """d = 1 good semigroup given by a coprime generating set."""

    __slots__ = ("generators", "frobenius", "conductor", "small_elements", "_cache")

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"generators {gens} are not coprime")
        bound = gens[0] * gens[-1] + 1
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            member[n] = any(n >= g0 and member[n - g0] for g0 in gens)
        frob = max((n for n in range(bound + 1) if not member[n]), default=-1)
        minimal = []
        for x in gens:
            others = [y for y in gens if y != x]
            if not others:
                minimal.append(x)
                continue
            reach = [False] * (x + 1)
            reach[0] = True
            for n in range(1, x + 1):
                reach[n] = any(n >= y and reach[n - y] for y in others)
            if not reach[x]:
                minimal.append(x)
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "frobenius", frob)
        object.__setattr__(self, "conductor", frob + 1)
        object.__setattr__(
            self, "small_elements", tuple(n for n in range(frob + 2) if member[n])
        )
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("NumericalSemigroup is immutable")

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup<{','.join(map(str, self.generators))}>"

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or n in self.small_elements

    def apery(self, w: int) -> tuple[int, ...]:
        """The w smallest elements of S in distinct residue classes mod w."""
        if w <= 0 or not self.contains(w):
            raise ValueError(f"{w} is not a nonzero element of the semigroup")
        found: dict[int, int] = {}
        n = 0
        while len(found) < w:
            if self.contains(n) and not self.contains(n - w):
                found[n % w] = n
            n += 1
        return tuple(sorted(found.values()))

    def as_good(self) -> GoodSemigroup:
        c = self.conductor
        return GoodSemigroup(1, (c,), [(n,) for n in self.small_elements if n <= c])


def from_numerical(generators) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


def numerical_from_good(S: GoodSemigroup) -> NumericalSemigroup:
    """Recover the generator representation of a d = 1 good semigroup."""
    if S.dim != 1:
        raise ValueError("only d = 1 semigroups have a numerical representation")
    c = S.conductor[0]
    elems = [p[0] for p in S.elements_within((2 * c + 2,))]
    nonzero = [n for n in elems if n > 0]
    if not nonzero:
        return NumericalSemigroup([1])
    gens = [
        n
        for n in nonzero
        if not any(0 < m < n and S.contains((n - m,)) for m in nonzero)
    ]
    N = NumericalSemigroup(gens)
    if N.as_good() != S:
        raise ValueError("the element set is not a numerical semigroup")
    return N


def direct_product(S1: GoodSemigroup, S2: GoodSemigroup) -> GoodSemigroup:
    """The good semigroup S1 x S2 with the capped cartesian product data."""
    dim = S1.dim + S2.dim
    conductor = S1.conductor + S2.conductor
    small = frozenset(a + b for a in S1.small_elements for b in S2.small_elements)
    return GoodSemigroup(dim, conductor, small)


def projection(S: GoodSemigroup, axes) -> GoodSemigroup:
    """Image of S under projection onto the given coordinates."""
    axes = sorted(set(int(i) for i in axes))
    if not axes or len(axes) >= S.dim or any(i < 0 or i >= S.dim for i in axes):
        raise ValueError("axes must be a nonempty proper subset of the coordinates")
    pc = tuple(S.conductor[i] for i in axes)
    proj_small = frozenset(tuple(p[i] for i in axes) for p in S.small_elements)

    def member(q):
        capped = tuple(min(x, c) for x, c in zip(q, pc))
        return capped in proj_small

    c2 = _walk_conductor(member, pc)
    small2 = frozenset(p for p in proj_small if leq(p, c2)) | {c2}
    return GoodSemigroup(len(axes), c2, small2)


def _walk_conductor(member, start: Point) -> Point:
    """Lower the conductor candidate coordinatewise as far as membership allows."""
    d = len(start)
    c = list(start)
    changed = True
    while changed:
        changed = False
        for i in range(d):
            while c[i] > 0:
                cand = tuple(c[j] - (1 if j == i else 0) for j in range(d))
                if all(member(q) for q in iter_box(start, lo=cand)):
                    c[i] -= 1
                    changed = True
                else:
                    break
    return tuple(c)


# --- pseudo-Frobenius elements and symmetry --------------------------------

def pseudo_frobenius(S: GoodSemigroup, box) -> frozenset[Point]:
    """Points outside S (within the box) whose sum with every nonzero
    element of S lands in S.

    Quantifying over the nonzero small elements suffices: any other
    nonzero element caps to a nonzero small one, and the extra amount
    beyond the conductor cannot leave S again.  If some conductor
    coordinate is zero the set is empty, because adding a suitable
    multiple of a unit vector never changes membership.
    """
    box = _as_point(box)
    if any(c == 0 for c in S.conductor):
        return frozenset()
    smalls = [p for p in S.small_elements if p != zeros(S.dim)]
    out = set()
    for a in iter_box(box):
        if S.contains(a):
            continue
        if all(S.contains(add(a, b)) for b in smalls):
            out.add(a)
    return frozenset(out)


def is_symmetric(S: GoodSemigroup, pad: int = 1) -> bool:
    """Membership of a is equivalent to the emptiness of the delta set at
    gamma - a, over the test box [-pad, c+pad]^d."""
    g = S.gamma
    lo = (-pad,) * S.dim
    hi = tuple(c + pad for c in S.conductor)
    for a in iter_box(hi, lo=lo):
        inside = all(x >= 0 for x in a) and S.contains(a)
        if inside != (not delta_nonempty(S, sub(g, a))):
            return False
    return True


def symmetric_stabilized(S: GoodSemigroup) -> bool:
    """Self-test: the verdict agrees on the default and the enlarged box."""
    return is_symmetric(S, pad=1) == is_symmetric(S, pad=2)


def is_almost_symmetric(S: GoodSemigroup) -> bool:
    """Pseudo-Frobenius set equals the delta set at gamma together with the
    symmetric gaps, compared as capped sets on the box c+1."""
    box = add(S.conductor, ones(S.dim))
    pf = pseudo_frobenius(S, box)
    g = S.gamma
    rhs = set()
    for i in range(S.dim):
        for b in iter_box(box):
            if b[i] == g[i] and all(b[j] > g[j] for j in range(S.dim) if j != i):
                rhs.add(b)
    for a in iter_box(box):
        if not S.contains(a) and not delta_nonempty(S, sub(g, a)):
            rhs.add(a)
    return pf == frozenset(rhs)
