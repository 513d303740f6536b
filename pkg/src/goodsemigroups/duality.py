"""Dual level sets, symmetric complements, and the two duality checks.

The dual of a level collects the delta sets of the reflected points
gamma_E - w and removes everything already produced by earlier levels.
For a symmetric complement the duals reproduce the levels in reverse
order; for almost symmetric semigroups the same reversal is expected of
the auxiliary sets Z and W.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import GoodIdeal, apery_set
from .lattice import (
    Point,
    add,
    class_in_delta,
    iter_box,
    ones,
    sub,
    zeros,
)
from .levels import LevelPartition, partition, partition_points
from .semigroup import GoodSemigroup, _as_point, delta_nonempty, full_monoid, pseudo_frobenius


@dataclass(frozen=True)
class DualPartition:
    duals: tuple[frozenset[Point], ...]
    anchor: Point
    box: Point


def _delta_classes(carrier_classes, x: Point, box: Point) -> frozenset[Point]:
    """Union over single directions of the class delta sets at anchor x."""
    d = len(x)
    out = set()
    for i in range(d):
        F = frozenset({i})
        out.update(b for b in carrier_classes if class_in_delta(b, x, F, box))
    return frozenset(out)


def dual_levels(part: LevelPartition, anchor, ambient: GoodSemigroup | None = None) -> DualPartition:
    """The dual sets of a partition with respect to the given anchor.

    ``ambient`` supplies the carrier the delta sets are evaluated in; by
    default the semigroup the partition came from, falling back to all of
    N^d for standalone point sets.
    """
    anchor = _as_point(anchor)
    box = part.box
    if ambient is None and part.complement is not None:
        ambient = part.complement.semigroup
    if ambient is None:
        ambient = full_monoid(len(box))
    carrier_classes = ambient.elements_within(box)
    seen: set[Point] = set()
    duals = []
    for level in part.levels:
        current = set()
        for w in level:
            current |= _delta_classes(carrier_classes, sub(anchor, w), box)
        duals.append(frozenset(current - seen))
        seen |= current
    return DualPartition(tuple(duals), anchor, box)


def is_symmetric_complement(S: GoodSemigroup, E: GoodIdeal, part: LevelPartition) -> bool:
    """The three reflection properties of the complement, checked over the
    box widened by one negative step in every coordinate."""
    if part.count == 0 or part.levels[0] != frozenset({zeros(S.dim)}):
        return False
    g = E.gamma
    lo = (-1,) * S.dim
    A = part.complement
    for a in iter_box(part.box, lo=lo):
        nonneg = all(x >= 0 for x in a)
        in_E = nonneg and E.contains(a)
        in_S = nonneg and S.contains(a)
        x = sub(g, a)
        if in_E != (not delta_nonempty(S, x)):
            return False
        in_A = in_S and not in_E
        dual = _delta_classes(S.elements_within(part.box), x, part.box)
        dual_in_A = bool(dual) and all(b in A.points for b in dual)
        if in_A != dual_in_A:
            return False
    return True


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    pairs: tuple[tuple[int, int, bool], ...]
    mismatches: tuple[tuple[int, frozenset, frozenset], ...]

    def lines(self) -> list[str]:
        out = []
        for i, j, good in self.pairs:
            out.append(f"level {i} <-> level {j}: {'PASS' if good else 'FAIL'}")
        for i, extra, missing in self.mismatches:
            if extra:
                out.append(f"  dual {i} extra: {sorted(extra)}")
            if missing:
                out.append(f"  dual {i} missing: {sorted(missing)}")
        return out


def check_duality(S: GoodSemigroup, part: LevelPartition, anchor=None) -> DualityReport:
    """Verify that the dual of level i equals level N-i+1."""
    if anchor is None:
        if part.complement is None or part.complement.ideal is None:
            raise ValueError("an anchor is required for standalone partitions")
        anchor = part.complement.ideal.gamma
    dp = dual_levels(part, anchor, ambient=S)
    pairs = []
    mismatches = []
    n = part.count
    ok = True
    for i in range(1, n + 1):
        want = part.levels[n - i]
        got = dp.duals[i - 1]
        good = want == got
        pairs.append((i, n - i + 1, good))
        if not good:
            ok = False
            mismatches.append((i, got - want, want - got))
    return DualityReport(ok, tuple(pairs), tuple(mismatches))


# --- Z and W sets for the almost symmetric check ---------------------------

def build_Z_W(S: GoodSemigroup) -> tuple[frozenset[Point], frozenset[Point]]:
    """Z = PF(S) + {0} capped at c+1; W per its three-part definition,
    capped at c+e+1."""
    d = S.dim
    e = S.multiplicity()
    g = S.gamma
    box_z = add(S.conductor, ones(d))
    Z = set(pseudo_frobenius(S, box_z))
    Z.add(zeros(d))

    box_w = add(add(S.conductor, e), ones(d))
    W = {zeros(d)}
    ge = add(g, e)
    for i in range(d):
        for b in iter_box(box_w):
            if b[i] == ge[i] and all(b[j] > ge[j] for j in range(d) if j != i):
                W.add(b)
    part = partition(apery_set(S, e))
    n = part.count
    pf = pseudo_frobenius(S, box_z)
    for i in range(2, n):
        for a in part.levels[i - 1]:
            shifted = sub(a, e)
            if all(x >= 0 for x in shifted) and shifted not in pf:
                W.add(a)
    return frozenset(Z), frozenset(W)


@dataclass(frozen=True)
class AlmostSymmetricReport:
    ok: bool
    z_report: DualityReport
    w_report: DualityReport

    def lines(self) -> list[str]:
        return (
            ["Z duality:"]
            + ["  " + s for s in self.z_report.lines()]
            + ["W duality:"]
            + ["  " + s for s in self.w_report.lines()]
        )


def _check_set_duality(points, box, anchor, ambient) -> DualityReport:
    part = partition_points(points, box)
    dp = dual_levels(part, anchor, ambient=ambient)
    pairs = []
    mismatches = []
    ok = True
    n = part.count
    for i in range(1, n + 1):
        want = part.levels[n - i]
        got = dp.duals[i - 1]
        good = want == got
        pairs.append((i, n - i + 1, good))
        if not good:
            ok = False
            mismatches.append((i, got - want, want - got))
    return DualityReport(ok, tuple(pairs), tuple(mismatches))


def check_almost_symmetric_duality(
    S: GoodSemigroup,
    anchor_z=None,
    anchor_w=None,
    ambient_z: GoodSemigroup | None = None,
    ambient_w: GoodSemigroup | None = None,
) -> AlmostSymmetricReport:
    """Reversal checks for the partitions of Z and W.

    The ambient monoids the dual delta sets live in are parameters; the
    defaults evaluate them freely in N^d with anchors gamma and
    gamma + e, which reproduces the classical d = 1 dualities.
    """
    from .semigroup import is_almost_symmetric

    if not is_almost_symmetric(S):
        raise ValueError("the semigroup is not almost symmetric")
    d = S.dim
    e = S.multiplicity()
    g = S.gamma
    Z, W = build_Z_W(S)
    box_z = add(S.conductor, ones(d))
    box_w = add(add(S.conductor, e), ones(d))
    zr = _check_set_duality(
        Z, box_z, anchor_z if anchor_z is not None else g,
        ambient_z if ambient_z is not None else full_monoid(d),
    )
    wr = _check_set_duality(
        W, box_w, anchor_w if anchor_w is not None else add(g, e),
        ambient_w if ambient_w is not None else full_monoid(d),
    )
    return AlmostSymmetricReport(zr.ok and wr.ok, zr, wr)
