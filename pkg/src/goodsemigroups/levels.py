"""The canonical level partition of a complement, and the level function.

The partition repeatedly extracts the maximal elements with respect to
equality-or-domination, discards from that antichain the points that are
complete infimums of other points of the antichain, and numbers the
extracted layers in reverse.  Everything operates on capped classes, so
infinite rays are handled as single objects; correctness of the capped
arithmetic is guarded by the box-stability checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import CappedComplement, apery_set
from .lattice import (
    Point,
    IndexSet,
    class_dominates,
    class_in_delta,
    delta as plain_delta,
    lt,
    proper_subsets,
)
from .semigroup import GoodSemigroup, _as_point


@dataclass(frozen=True)
class InfimumWitness:
    """Directions and representatives realizing a complete infimum."""

    directions: tuple[IndexSet, ...]
    witnesses: tuple[Point, ...]


def _family_search(dirs: list[IndexSet], full: IndexSet, max_size: int):
    """A subfamily with pairwise unions equal to the full index set and empty
    intersection, or None.  Families never need more members than there
    are coordinates, so the recursion depth is bounded by the dimension."""
    dirs = sorted(dirs, key=sorted)
    n = len(dirs)

    def rec(start: int, picked: list[IndexSet], inter: IndexSet):
        if len(picked) >= 2 and not inter:
            return list(picked)
        if len(picked) == max_size:
            return None
        for k in range(start, n):
            F = dirs[k]
            if all(F | G == full for G in picked):
                got = rec(k + 1, picked + [F], inter & F if picked else F)
                if got is not None:
                    return got
        return None

    return rec(0, [], full)


def complete_infimum(A, a: Point) -> InfimumWitness | None:
    """Witness that ``a`` is a complete infimum in the plain point set A."""
    a = _as_point(a)
    d = len(a)
    full = frozenset(range(d))
    dirs = []
    for F in proper_subsets(d):
        if plain_delta(A, F, a, "strict"):
            dirs.append(F)
    family = _family_search(dirs, full, d)
    if family is None:
        return None
    witnesses = []
    for F in family:
        witnesses.append(min(sorted(plain_delta(A, F, a, "strict"))))
    return InfimumWitness(tuple(family), tuple(witnesses))


def _class_directions(classes, a: Point, box: Point) -> list[IndexSet]:
    d = len(a)
    out = []
    for F in proper_subsets(d):
        if any(class_in_delta(b, a, F, box) for b in classes):
            out.append(F)
    return out


def _is_complete_infimum_class(classes, a: Point, box: Point) -> bool:
    d = len(a)
    dirs = _class_directions(classes, a, box)
    return _family_search(dirs, frozenset(range(d)), d) is not None


@dataclass(frozen=True)
class LevelPartition:
    """Ordered levels A_1 .. A_N of a capped complement."""

    levels: tuple[frozenset[Point], ...]
    box: Point
    cap_start: Point
    complement: CappedComplement | None = None

    @property
    def count(self) -> int:
        return len(self.levels)

    def level_of(self, p) -> int | None:
        """1-based level index of a class, or None if it is not in the set."""
        p = tuple(p)
        for i, level in enumerate(self.levels, start=1):
            if p in level:
                return i
        return None

    def listing(self) -> str:
        """One line per level; ray coordinates print as ``inf``."""
        from .lattice import collapse_classes

        lines = []
        for i, level in enumerate(self.levels, start=1):
            entries = collapse_classes(level, self.cap_start)
            keyed = sorted(
                entries,
                key=lambda e: tuple(10 ** 9 if x == "inf" else x for x in e),
            )
            shown = " ".join("(" + ",".join(str(x) for x in e) + ")" for e in keyed)
            lines.append(f"Level {i}: {shown}")
        return "\n".join(lines)


def partition_points(points, box: Point, cap_start: Point | None = None) -> LevelPartition:
    """The canonical partition of an arbitrary admissible capped point set."""
    box = _as_point(box)
    if cap_start is None:
        cap_start = tuple(t - 1 for t in box)
    remaining = set(points)
    extracted: list[frozenset[Point]] = []
    while remaining:
        B = frozenset(
            a for a in remaining
            if not any(class_dominates(a, b, box) for b in remaining)
        )
        C = frozenset(a for a in B if _is_complete_infimum_class(B, a, box))
        D = B - C
        if not D:
            raise ValueError("level extraction stalled; the input is not a valid complement")
        extracted.append(D)
        remaining -= D
    return LevelPartition(tuple(reversed(extracted)), box, tuple(cap_start))


def partition(A: CappedComplement) -> LevelPartition:
    p = partition_points(A.points, A.box, A.cap_start if A.ideal else None)
    return LevelPartition(p.levels, p.box, p.cap_start, A)


def apery_levels(S: GoodSemigroup, w) -> LevelPartition:
    """Levels of the Apery set; their number equals the coordinate sum of w."""
    w = _as_point(w)
    part = partition(apery_set(S, w))
    if part.count != sum(w):
        raise AssertionError(
            f"Apery set of {w} has {part.count} levels, expected {sum(w)}"
        )
    return part


def domination_partition(A: CappedComplement) -> LevelPartition:
    """Layers of maximal elements with respect to domination only."""
    remaining = set(A.points)
    extracted: list[frozenset[Point]] = []
    while remaining:
        B = frozenset(
            a for a in remaining
            if not any(class_dominates(a, b, A.box) for b in remaining)
        )
        extracted.append(B)
        remaining -= B
    return LevelPartition(tuple(reversed(extracted)), A.box, A.cap_start, A)


def level_function(S: GoodSemigroup, part: LevelPartition, a) -> int:
    """Level index for points of the complement; for the other elements of
    S, one more than the deepest level lying strictly below."""
    a = _as_point(a)
    if not S.contains(tuple(min(x, t) for x, t in zip(a, part.box))):
        raise ValueError(f"{a} is not an element of the semigroup")
    cls = tuple(min(x, t) for x, t in zip(a, part.box))
    i = part.level_of(cls)
    if i is not None:
        return i
    best = 0
    for j, level in enumerate(part.levels, start=1):
        if any(lt(theta, cls) for theta in level):
            best = j
    return 1 + best


def levels_equal(p: LevelPartition, q: LevelPartition) -> bool:
    return p.levels == q.levels


def level_mismatches(p: LevelPartition, q: LevelPartition) -> list[tuple[int, frozenset, frozenset]]:
    out = []
    n = max(p.count, q.count)
    for i in range(n):
        a = p.levels[i] if i < p.count else frozenset()
        b = q.levels[i] if i < q.count else frozenset()
        if a != b:
            out.append((i + 1, a - b, b - a))
    return out
