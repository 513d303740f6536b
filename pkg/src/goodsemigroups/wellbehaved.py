"""Well-behaved complements and the structure of their levels.

A complement is well-behaved when every point of the semigroup that is a
complete infimum of points in directions whose relaxed delta sets stay
inside the complement must belong to the ideal.  For two coordinates
this is the familiar statement that a point whose whole delta set lies
inside the complement cannot itself lie in the complement, and it is
equivalent both to meets of same-level pairs falling into the ideal and
to every level being dominated by the next one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import CappedComplement, projected_ideal
from .lattice import (
    Point,
    IndexSet,
    class_in_delta,
    classes_in_delta,
    leq,
    lt,
    meet,
    proper_subsets,
)
from .levels import LevelPartition, _family_search, partition
from .semigroup import GoodSemigroup, _as_point, delta_nonempty, projection


def _witnessable_directions(S_classes, A_points, a: Point, box: Point) -> list[IndexSet]:
    """Directions with a strict witness whose relaxed delta set stays in A."""
    d = len(a)
    out = []
    for F in proper_subsets(d):
        strict_hit = False
        tilde_ok = True
        for b in S_classes:
            if class_in_delta(b, a, F, box, tilde=True):
                if b not in A_points:
                    tilde_ok = False
                    break
                if class_in_delta(b, a, F, box):
                    strict_hit = True
        if strict_hit and tilde_ok:
            out.append(F)
    return out


def is_well_behaved(S: GoodSemigroup, E, A: CappedComplement) -> bool:
    """Every all-inside-A complete infimum point lies in the ideal."""
    box = A.box
    d = S.dim
    S_classes = S.elements_within(box)
    full = frozenset(range(d))
    for a in S_classes:
        if a not in A.points:
            continue  # the requirement holds vacuously at ideal points
        dirs = _witnessable_directions(S_classes, A.points, a, box)
        if _family_search(dirs, full, d) is not None:
            return False
    return True


def d2_equivalences(S: GoodSemigroup, E, A: CappedComplement) -> tuple[bool, bool, bool]:
    """The three equivalent readings in the plane, evaluated independently.

    (1) well-behaved; (2) the meet of two same-level points stays in the
    complement only when it is one of them; (3) every point of a level
    below the top is dominated by a point of the next level.
    """
    if S.dim != 2:
        raise ValueError("the three-way equivalence is a statement about d = 2")
    part = partition(A)
    first = is_well_behaved(S, E, A)

    second = True
    for level in part.levels:
        pts = sorted(level)
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                m = meet(a, b)
                if (m in A.points) != (m == a or m == b):
                    second = False
    third = True
    from .lattice import class_dominates

    for i in range(part.count - 1):
        for a in part.levels[i]:
            if not any(class_dominates(a, b, A.box) for b in part.levels[i + 1]):
                third = False
    if not (first == second == third):
        raise RuntimeError(
            f"equivalent well-behaved readings disagree: {(first, second, third)}"
        )
    return first, second, third


def single_line_level(S: GoodSemigroup, part: LevelPartition, w, F: IndexSet) -> int:
    """The unique level containing the delta set of w in direction F."""
    w = _as_point(w)
    F = frozenset(F)
    box = part.box
    line = classes_in_delta(S.elements_within(box), w, F, box)
    if not line:
        raise ValueError(f"the delta set of {w} in direction {sorted(F)} is empty")
    E = part.complement.ideal if part.complement else None
    levels = set()
    for b in line:
        if E is not None and E.contains(b):
            raise ValueError(f"the delta set of {w} meets the ideal at {b}")
        levels.add(part.level_of(b))
    if len(levels) != 1:
        raise ValueError(
            f"the delta set of {w} spreads over levels {sorted(levels)}; "
            "the complement is not well-behaved"
        )
    return levels.pop()


@dataclass(frozen=True)
class BoundReport:
    ok: bool
    lines_checked: tuple[tuple[int, int, int, bool], ...]  # (coordinate, index, apery value, ok)
    violations: tuple[str, ...]

    def text(self) -> list[str]:
        out = [("PASS" if self.ok else "FAIL") + ": column/row levels and coordinate bounds"]
        out += [f"  {v}" for v in self.violations]
        return out


def _apery_of_projection(S: GoodSemigroup, part: LevelPartition, axis: int) -> list[int]:
    E = part.complement.ideal
    minimal = [p for p in E.small_elements if not any(lt(q, p) for q in E.small_elements)]
    if len(minimal) != 1:
        raise ValueError("the ideal is not principal; no Apery shift available")
    wa = minimal[0][axis]
    S1 = projection(S, [axis])
    out = []
    n = 0
    while len(out) < wa:
        if S1.contains((n,)) and (n < wa or not S1.contains((n - wa,))):
            out.append(n)
        n += 1
    return out


def projection_level_bound(S: GoodSemigroup, part: LevelPartition) -> BoundReport:
    """Columns over the factor Apery elements sit inside the matching level,
    and that level never reaches past the Apery element's coordinate."""
    if S.dim != 2:
        raise ValueError("coordinate bounds are a d = 2 statement")
    box = part.box
    checked = []
    violations = []
    for axis in (0, 1):
        ap = _apery_of_projection(S, part, axis)
        for i, ua in enumerate(ap, start=1):
            anchor = tuple(ua if j == axis else -1 for j in range(2))
            line = classes_in_delta(
                S.elements_within(box), anchor, frozenset({axis}), box
            )
            ok = bool(line) and all(part.level_of(b) == i for b in line)
            if not ok:
                violations.append(
                    f"line over {anchor} (coordinate {axis}) not inside level {i}"
                )
            for p in part.levels[i - 1]:
                if p[axis] > ua:
                    ok = False
                    violations.append(
                        f"{p} in level {i} exceeds the Apery bound {ua} on coordinate {axis}"
                    )
            checked.append((axis, i, ua, ok))
    return BoundReport(not violations, tuple(checked), tuple(violations))


@dataclass(frozen=True)
class FiberReport:
    ok: bool
    preconditions: tuple[str, ...]
    results: tuple[tuple[Point, int, bool], ...]

    def text(self) -> list[str]:
        out = [("PASS" if self.ok else "FAIL") + ": projection fibers stay in their level"]
        out += [f"  precondition: {p}" for p in self.preconditions]
        out += [
            f"  fiber of {a} (factor level {i}): {'ok' if good else 'MISMATCH'}"
            for a, i, good in self.results
        ]
        return out


def gamma_line_levels(S: GoodSemigroup, part: LevelPartition, axes1) -> FiberReport:
    """For a projection split of the coordinates, the full fiber in S over a
    point of factor level i lies inside level i of the complement."""
    axes1 = sorted(set(int(i) for i in axes1))
    E = part.complement.ideal
    A = part.complement
    box = part.box
    pre = []
    if not S.is_local():
        pre.append("semigroup is not local")
    if not is_well_behaved(S, E, A):
        pre.append("complement is not well-behaved")
    S1 = projection(S, axes1)
    E1 = projected_ideal(E, axes1, S1)
    from .ideal import complement as _complement

    comp1 = _complement(S1, E1)
    part1 = partition(comp1)
    results = []
    ok = not pre
    for a1 in sorted(comp1.points):
        i = part1.level_of(a1)
        good = True
        for alpha in S.elements_within(box):
            proj = tuple(alpha[j] for j in axes1)
            capped = tuple(min(x, t) for x, t in zip(proj, comp1.box))
            if capped != a1:
                continue
            if E.contains(alpha) or part.level_of(alpha) != i:
                good = False
        results.append((a1, i, good))
        if not good and not pre:
            ok = False
    return FiberReport(ok, tuple(pre), tuple(results))


@dataclass(frozen=True)
class LevelStructure:
    """Staircase data of one level: its absolutes, the ray corners, and a
    clause tag for every element."""

    index: int
    absolutes: tuple[Point, ...]
    theta_low: Point | None   # corner of the vertical ray, when present
    theta_high: Point | None  # corner of the horizontal ray, when present
    bounded: tuple[bool, bool]
    tags: tuple[tuple[Point, str], ...]

    def corners(self) -> tuple[Point, ...]:
        out = []
        if self.theta_low is not None:
            out.append(self.theta_low)
        out.extend(self.absolutes)
        if self.theta_high is not None:
            out.append(self.theta_high)
        return tuple(out)

    def text(self) -> list[str]:
        out = [f"level {self.index}: absolutes {list(self.absolutes)}"]
        if self.theta_low is not None:
            out.append(f"  vertical-ray corner {self.theta_low}")
        if self.theta_high is not None:
            out.append(f"  horizontal-ray corner {self.theta_high}")
        out += [f"  {p}: clause {t}" for p, t in sorted(self.tags)]
        return out


def classify_elements(
    level,
    corners: tuple[Point, ...],
    box: Point,
    bounded: tuple[bool, bool],
) -> tuple[tuple[Point, str], ...]:
    """Assign each element the first clause of the staircase description it
    satisfies.  The corner list must descend left to right."""
    has_low = not bounded[1]
    has_high = not bounded[0]
    tags = []
    for a in sorted(level):
        tag = None
        if has_low and a[0] == corners[0][0] and a[1] > corners[0][1]:
            tag = "i"
        elif has_high and a[1] == corners[-1][1] and a[0] > corners[-1][0]:
            tag = "i"
        elif a in corners:
            tag = "ii"
        else:
            for m in range(len(corners) - 1):
                mt = meet(corners[m], corners[m + 1])
                if lt(mt, a) and leq(a, corners[m]):
                    tag = "ii"
                    break
                if lt(mt, a) and leq(a, corners[m + 1]):
                    tag = "iii"
                    break
            if tag is None and bounded[0] and corners:
                last = corners[-1]
                if a[0] == last[0] and a[1] < last[1]:
                    tag = "iv"
            if tag is None and bounded[1] and corners:
                first = corners[0]
                if a[1] == first[1] and a[0] < first[0]:
                    tag = "v"
        if tag is None:
            raise ValueError(f"{a} fits no clause of the level structure")
        tags.append((a, tag))
    return tuple(tags)


def classify_level(S: GoodSemigroup, part: LevelPartition, i: int) -> LevelStructure:
    """Structure of level i of a well-behaved plane complement."""
    if S.dim != 2:
        raise ValueError("level classification is a d = 2 statement")
    level = part.levels[i - 1]
    box = part.box
    cap = part.cap_start
    vcols = sorted({p[0] for p in level if p[1] == box[1]})
    hrows = sorted({p[1] for p in level if p[0] == box[0]})
    if len(vcols) > 1 or len(hrows) > 1:
        raise ValueError("a level cannot carry two parallel rays")
    finite = [p for p in level if p[0] < box[0] and p[1] < box[1]]
    absolutes = tuple(sorted(p for p in finite if not delta_nonempty(S, p)))
    for a, b in zip(absolutes, absolutes[1:]):
        if not (a[0] < b[0] and a[1] > b[1]):
            raise ValueError("absolutes do not descend; input is not well-behaved")
    theta_low = (vcols[0], cap[1]) if vcols else None
    theta_high = (cap[0], hrows[0]) if hrows else None
    bounded = (not hrows, not vcols)
    corners = ()
    if theta_low is not None:
        corners += (theta_low,)
    corners += absolutes
    if theta_high is not None:
        corners += (theta_high,)
    tags = classify_elements(level, corners, box, bounded)
    return LevelStructure(i, absolutes, theta_low, theta_high, bounded, tags)
