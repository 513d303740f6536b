"""Lattice points of N^d (or Z^d), their partial orders, and delta sets.

Points are plain integer tuples; all values here are immutable.  The top
half of the module works on concrete points and explicitly enumerated
finite point sets.  The bottom half contains the capped-box variants:
inside a box ``T`` a point whose i-th coordinate equals ``T[i]`` stands
for the whole ray of points with i-th coordinate >= ``T[i]``, and the
comparison rules below evaluate relations between such ray classes so
that they agree with the relation between the underlying infinite sets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

Point = tuple[int, ...]
IndexSet = frozenset[int]


class DimensionMismatch(ValueError):
    pass


def check_same_dim(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"points {a} and {b} have different dimensions")


def meet(a: Point, b: Point) -> Point:
    """Componentwise minimum (the infimum of the pair)."""
    check_same_dim(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def add(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Point) -> Point:
    return tuple(k * x for x in a)


def leq(a: Point, b: Point) -> bool:
    """Product order: a <= b componentwise."""
    check_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Point, b: Point) -> bool:
    """a <= b and a != b (written a < b)."""
    return a != b and leq(a, b)


def dominates(a: Point, b: Point) -> bool:
    """True iff b dominates a, i.e. a_i < b_i in every coordinate (a << b)."""
    check_same_dim(a, b)
    return all(x < y for x, y in zip(a, b))


def leqleq(a: Point, b: Point) -> bool:
    """a <=<= b: equality or strict domination."""
    return a == b or dominates(a, b)


def unit(dim: int, i: int) -> Point:
    return tuple(1 if j == i else 0 for j in range(dim))


def ones(dim: int) -> Point:
    return (1,) * dim


def zeros(dim: int) -> Point:
    return (0,) * dim


def hat(F: IndexSet, dim: int) -> IndexSet:
    """Complement of an index set inside {0, .., dim-1}."""
    return frozenset(range(dim)) - F


@lru_cache(maxsize=None)
def proper_subsets(dim: int) -> tuple[IndexSet, ...]:
    """All nonempty proper subsets of {0, .., dim-1}, smallest first."""
    idx = range(dim)
    out = []
    for r in range(1, dim):
        out.extend(frozenset(c) for c in combinations(idx, r))
    return tuple(out)


def iter_box(box: Point, lo: Point | None = None):
    """All integer points of [lo, box] (lo defaults to the origin)."""
    if lo is None:
        lo = zeros(len(box))
    return product(*(range(l, h + 1) for l, h in zip(lo, box)))


def delta(set_ref, F: IndexSet, a: Point, variant: str = "strict") -> frozenset[Point]:
    """Delta sets of ``a`` relative to an explicit finite point set.

    strict: points equal to ``a`` on F and strictly larger off F.
    tilde:  points equal on F and >= off F, excluding ``a`` itself.
    union:  the union of the strict sets over all singleton directions
            (F must be empty for this variant).
    """
    d = len(a)
    F = frozenset(F)
    if variant == "union":
        if F:
            raise ValueError("union variant takes no direction set")
        out = set()
        for i in range(d):
            out |= delta(set_ref, frozenset({i}), a, "strict")
        return frozenset(out)
    if variant not in ("strict", "tilde"):
        raise ValueError(f"unknown delta variant {variant!r}")
    if not F.issubset(range(d)) or len(F) >= d:
        raise ValueError("direction set must be a proper subset of the coordinates")
    out = set()
    for b in set_ref:
        check_same_dim(a, b)
        if variant == "tilde" and b == a:
            continue
        ok = True
        for j, (x, y) in enumerate(zip(a, b)):
            if j in F:
                if y != x:
                    ok = False
                    break
            elif variant == "strict":
                if y <= x:
                    ok = False
                    break
            else:
                if y < x:
                    ok = False
                    break
        if ok:
            out.add(b)
    return frozenset(out)


def consecutive_in(A, a: Point, b: Point) -> bool:
    """True iff no third element of A lies strictly between a and b."""
    if not leq(a, b):
        raise ValueError(f"{a} must be <= {b}")
    for c in A:
        if c != a and c != b and leq(a, c) and leq(c, b):
            return False
    return True


# --- capped-box variants -------------------------------------------------
#
# A "class" is a point of [0, T].  A coordinate equal to T[i] represents
# every value >= T[i]; relations below hold for a pair of classes exactly
# when they hold between (all) the concrete points the classes stand for.

def box_gt(b: int, a: int, t: int) -> bool:
    # strictly-greater between class coordinates; two capped coordinates
    # compare as greater because the higher ray always catches up
    return b > a or (a == t and b == t)


def class_dominates(a: Point, b: Point, box: Point) -> bool:
    """Ray-aware domination: b dominates a inside the capped box."""
    return all(box_gt(y, x, t) for x, y, t in zip(a, b, box)) and not (
        a == b and all(x < t for x, t in zip(a, box))
    )


def class_in_delta(b: Point, a: Point, F: IndexSet, box: Point, tilde: bool = False) -> bool:
    """Class-wise membership of b in the (tilde-)delta set of a in direction F.

    ``a`` may have coordinates outside the box (negative anchors are fine);
    ``b`` must be a class of the box.
    """
    if tilde and b == a:
        # the class's own higher members count unless every capped
        # coordinate is pinned by F
        return any(a[j] == box[j] for j in range(len(a)) if j not in F)
    for j, (x, y, t) in enumerate(zip(a, b, box)):
        if j in F:
            if y != x:
                return False
        elif tilde:
            if y < x:
                return False
        else:
            if not box_gt(y, x, t):
                return False
    return True


def classes_in_delta(classes, a: Point, F: IndexSet, box: Point, tilde: bool = False) -> frozenset[Point]:
    return frozenset(b for b in classes if class_in_delta(b, a, F, box, tilde))


def class_union_delta(classes, a: Point, box: Point) -> frozenset[Point]:
    """Union over single directions of the strict class delta sets."""
    d = len(a)
    out = set()
    for i in range(d):
        F = frozenset({i})
        out.update(b for b in classes if class_in_delta(b, a, F, box))
    return frozenset(out)


def class_consecutive(classes, a: Point, b: Point) -> bool:
    """No class strictly between a and b (both expected inside the box)."""
    for c in classes:
        if c != a and c != b and leq(a, c) and leq(c, b):
            return False
    return True


def minimal_classes(classes) -> frozenset[Point]:
    cl = list(classes)
    return frozenset(a for a in cl if not any(lt(b, a) for b in cl))


def expand_classes(classes, box: Point, canvas: Point) -> frozenset[Point]:
    """Concrete points of [0, canvas] represented by the given classes."""
    out = set()
    for p in classes:
        ranges = []
        for x, t, c in zip(p, box, canvas):
            ranges.append(range(t, c + 1) if x == t else range(x, x + 1))
        out.update(product(*ranges))
    return frozenset(out)


def collapse_classes(classes, cap_start: Point) -> frozenset[tuple]:
    """Canonical display form: coordinates >= cap_start collapse to 'inf'."""
    out = set()
    for p in classes:
        out.add(tuple("inf" if x >= t else x for x, t in zip(p, cap_start)))
    return frozenset(out)
