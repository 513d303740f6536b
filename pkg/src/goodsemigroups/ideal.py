"""Good ideals and the capped complement A = S \\ E.

The complement of a good ideal is infinite as soon as d > 1, but its
intersection with the box [0, c_E + 1] determines it: a point with some
coordinate at the box bound marks an infinite ray.  The box is one past
the ideal conductor so strict inequalities at the boundary stay visible
to the delta operators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    Point,
    add,
    expand_classes,
    collapse_classes,
    iter_box,
    leq,
    ones,
    sub,
    zeros,
)
from .semigroup import (
    GoodSemigroup,
    ValidationReport,
    Violation,
    _as_point,
    validate_membership,
)


class GoodIdeal:
    """A good ideal E of a parent good semigroup, capped at its conductor."""

    __slots__ = ("parent", "dim", "conductor", "small_elements", "_cache")

    def __init__(self, parent: GoodSemigroup, conductor, small_elements):
        conductor = _as_point(conductor)
        small = frozenset(_as_point(p) for p in small_elements)
        if len(conductor) != parent.dim:
            raise ValueError("ideal conductor dimension mismatch")
        if conductor not in small:
            raise ValueError("the ideal conductor must be listed")
        for p in small:
            if not (leq(zeros(parent.dim), p) and leq(p, conductor)):
                raise ValueError(f"ideal element {p} outside [0, conductor]")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "dim", parent.dim)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "small_elements", small)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("GoodIdeal is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GoodIdeal)
            and self.parent == other.parent
            and self.conductor == other.conductor
            and self.small_elements == other.small_elements
        )

    def __hash__(self):
        return hash((self.parent, self.conductor, self.small_elements))

    def __repr__(self):
        return f"GoodIdeal(conductor={self.conductor}, |small|={len(self.small_elements)})"

    @property
    def gamma(self) -> Point:
        return sub(self.conductor, ones(self.dim))

    def contains(self, p) -> bool:
        p = tuple(p)
        if any(x < 0 for x in p):
            return False
        capped = tuple(min(x, c) for x, c in zip(p, self.conductor))
        return capped in self.small_elements

    def elements_within(self, box: Point) -> tuple[Point, ...]:
        box = _as_point(box)
        key = ("elts", box)
        if key not in self._cache:
            self._cache[key] = tuple(p for p in iter_box(box) if self.contains(p))
        return self._cache[key]


def principal_ideal(S: GoodSemigroup, w) -> GoodIdeal:
    """The shifted ideal w + S."""
    w = _as_point(w)
    if not S.contains(w):
        raise ValueError(f"{w} is not an element of the semigroup")
    c_E = add(S.conductor, w)

    def member(p):
        q = sub(p, w)
        return all(x >= 0 for x in q) and S.contains(q)

    small = frozenset(p for p in iter_box(c_E) if member(p))
    return GoodIdeal(S, c_E, small)


def product_ideal(E1: GoodIdeal, E2: GoodIdeal, parent: GoodSemigroup | None = None) -> GoodIdeal:
    """E1 x E2 inside the direct product of the parents."""
    from .semigroup import direct_product

    if parent is None:
        parent = direct_product(E1.parent, E2.parent)
    conductor = E1.conductor + E2.conductor
    small = frozenset(a + b for a in E1.small_elements for b in E2.small_elements)
    return GoodIdeal(parent, conductor, small)


def validate_ideal(E: GoodIdeal, margin: int = 1) -> ValidationReport:
    """Axioms for E itself, plus E subset of S and E + S subset of E."""
    S = E.parent
    box = tuple(c + margin + 1 for c in E.conductor)
    violations = list(validate_membership(E.dim, E.conductor, E.contains, box))
    violations = [v for v in violations if v.code != "G0"]  # ideals need not contain 0
    for p in E.elements_within(box):
        if not S.contains(p):
            violations.append(Violation("SUB", (p,), f"{p} is in the ideal but not in S"))
    for p in E.elements_within(E.conductor):
        for s in S.small_elements:
            if not E.contains(add(p, s)):
                violations.append(
                    Violation("IDEAL", (p, s), f"{p} + {s} left the ideal")
                )
    return ValidationReport(not violations, box, tuple(violations))


def projected_ideal(E: GoodIdeal, axes, parent: GoodSemigroup) -> GoodIdeal:
    """Image of E under coordinate projection, as an ideal of the projected parent."""
    from .semigroup import _walk_conductor

    axes = sorted(set(int(i) for i in axes))
    pc = tuple(E.conductor[i] for i in axes)
    proj_small = frozenset(tuple(p[i] for i in axes) for p in E.small_elements)

    def member(q):
        capped = tuple(min(x, c) for x, c in zip(q, pc))
        return capped in proj_small

    c2 = _walk_conductor(member, pc)
    small2 = frozenset(p for p in proj_small if leq(p, c2)) | {c2}
    return GoodIdeal(parent, c2, small2)


@dataclass(frozen=True)
class CappedComplement:
    """The set A = S \\ E, capped at the box c_E + 1.

    Ray marks are implicit: a point whose i-th coordinate equals box[i]
    stands for the ray of points with i-th coordinate >= box[i].
    """

    box: Point
    points: frozenset[Point]
    semigroup: GoodSemigroup | None = None
    ideal: GoodIdeal | None = None

    @property
    def cap_start(self) -> Point:
        return sub(self.box, ones(len(self.box)))

    def ray_marks(self) -> frozenset[tuple[Point, frozenset[int]]]:
        out = []
        for p in self.points:
            capped = frozenset(i for i, (x, t) in enumerate(zip(p, self.box)) if x == t)
            if capped:
                out.append((p, capped))
        return frozenset(out)

    def expand(self, canvas: Point) -> frozenset[Point]:
        return expand_classes(self.points, self.box, canvas)

    def collapsed(self) -> frozenset[tuple]:
        return collapse_classes(self.points, self.cap_start)

    def cap_point(self, p) -> Point:
        """The class representative of an arbitrary concrete point."""
        return tuple(min(x, t) for x, t in zip(p, self.box))

    def contains_concrete(self, p) -> bool:
        if any(x < 0 for x in p):
            return False
        return self.cap_point(p) in self.points


def complement(S: GoodSemigroup, E: GoodIdeal) -> CappedComplement:
    """All classes of S \\ E within the box c_E + 1."""
    if E.parent != S:
        raise ValueError("the ideal does not belong to this semigroup")
    box = add(E.conductor, ones(S.dim))
    points = frozenset(
        p for p in S.elements_within(box) if not E.contains(p)
    )
    return CappedComplement(box, points, S, E)


def apery_set(S: GoodSemigroup, w) -> CappedComplement:
    """The Apery set S \\ (w + S) as a capped complement."""
    w = _as_point(w)
    if w == zeros(S.dim):
        raise ValueError("the Apery set with respect to 0 is empty")
    return complement(S, principal_ideal(S, w))
