"""Plane-branch numerical machinery, the two-branch blowup shift, and
value-semigroup reconstruction.

A plane branch is recognized by its Apery set being the full product of
bounded generator multiples; its blowup is obtained by sliding the i-th
Apery element down by (i-1) times the multiplicity.  For a local plane
semigroup in two coordinates whose blowup splits into a product, every
Apery level of the original is the matching blowup level translated by
that multiple of the multiplicity, which also lets the semigroup be
rebuilt from the two blown-up branches alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import apery_set
from .lattice import Point, add, class_in_delta, expand_classes, iter_box, scale, sub
from .levels import LevelPartition, apery_levels, domination_partition, partition
from .products import apery_nonlocal_d2
from .semigroup import (
    GoodSemigroup,
    NumericalSemigroup,
    _as_point,
    delta_nonempty,
    is_symmetric,
    numerical_from_good,
    projection,
    validate,
)
from .wellbehaved import is_well_behaved


def _member_set(gens, bound: int) -> list[bool]:
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(n >= g and member[n - g] for g in gens)
    return member


def tau_values(gens) -> tuple[int, ...]:
    """For each generator past the first, the least h with (h+1) times the
    generator inside the span of the earlier ones.  The search stops at
    the product of the first and current generators, which the finiteness
    of Apery sets keeps far out of reach."""
    gens = sorted(set(int(g) for g in gens))
    out = []
    for i in range(1, len(gens)):
        prefix = gens[:i]
        g = gens[i]
        bound = gens[0] * g + g
        member = _member_set(prefix, bound)
        tau = None
        for h in range(1, gens[0] * g + 1):
            if (h + 1) * g <= bound and member[(h + 1) * g]:
                tau = h
                break
        if tau is None:
            raise ValueError(f"no multiple of {g} lands in the prefix span within the search bound")
        out.append(tau)
    return tuple(out)


def is_plane_branch(gens) -> bool:
    """Whether the Apery set is the full grid of bounded generator sums and
    successive generators clear the required gaps."""
    N = NumericalSemigroup(gens)
    gens = list(N.generators)
    if gens == [1]:
        return True
    e = gens[0]
    tau = tau_values(gens)
    grid = {0}
    for g, t in zip(gens[1:], tau):
        grid = {a + l * g for a in grid for l in range(t + 1)}
    if frozenset(grid) != frozenset(N.apery(e)):
        return False
    for i in range(1, len(gens) - 1):
        if (tau[i - 1] + 1) * gens[i] >= gens[i + 1]:
            return False
    return True


@dataclass(frozen=True)
class PlaneBranchProfile:
    """A plane-branch numerical semigroup with its tau gaps and Apery set."""

    generators: tuple[int, ...]
    tau: tuple[int, ...]
    apery: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup(self.generators)


def plane_branch_profile(gens) -> PlaneBranchProfile:
    N = NumericalSemigroup(gens)
    if not is_plane_branch(N.generators):
        raise ValueError(f"{N.generators} is not a plane-branch semigroup")
    e = N.generators[0]
    ap = N.apery(e)
    tau = tau_values(N.generators) if len(N.generators) > 1 else ()
    for i in range(1, len(ap)):
        if not (ap[i] > i * e and ap[i] - ap[i - 1] > e):
            raise ValueError("Apery gaps are too small for a plane branch")
    return PlaneBranchProfile(N.generators, tau, ap)


def blowup_numerical(profile: PlaneBranchProfile) -> NumericalSemigroup:
    """The semigroup generated by sliding the i-th Apery element down by
    (i-1) multiplicities; the slid set is verified to be its Apery set."""
    e = profile.multiplicity
    shifted = [w - i * e for i, w in enumerate(profile.apery)]
    if sorted(shifted) != shifted or len(set(x % e for x in shifted)) != e:
        raise ValueError("the shifted set is not an Apery set; input is not a plane branch")
    bound = max(shifted) + 2 * e + 1
    member = [False] * (bound + 1)
    for w in shifted:
        for k in range(w, bound + 1, e):
            member[k] = True
    elems = [n for n in range(bound + 1) if member[n]]
    gens = [
        n
        for n in elems
        if n > 0 and not any(0 < m < n and member[n - m] for m in elems if m <= n)
    ]
    blown = NumericalSemigroup(gens)
    if blown.apery(e) != tuple(shifted):
        raise ValueError("the shifted set failed the Apery verification")
    return blown


def omega_jk(S1p: NumericalSemigroup, S2p: NumericalSemigroup, e: Point, j: int, k: int) -> Point:
    """The (j,k) grid point of the blown-up branches' Apery sets.

    Equivalently the unblown Apery elements slid down by the usual
    multiples of the factor multiplicities.
    """
    e1, e2 = e
    if not (1 <= j <= e1 and 1 <= k <= e2):
        raise ValueError(f"indices ({j},{k}) outside the Apery grid {e}")
    u = S1p.apery(e1)
    v = S2p.apery(e2)
    return (u[j - 1], v[k - 1])


@dataclass(frozen=True)
class TwoBranchBlowupResult:
    S: GoodSemigroup
    e: Point
    branch1: NumericalSemigroup
    branch2: NumericalSemigroup
    product: GoodSemigroup
    levels: LevelPartition


def blowup_split(S: GoodSemigroup) -> TwoBranchBlowupResult:
    """Blow up both numerical projections and form their product, with the
    closed-form levels of its Apery set at the multiplicity."""
    from .semigroup import direct_product

    e = S.multiplicity()
    p1 = plane_branch_profile(numerical_from_good(projection(S, [0])).generators)
    p2 = plane_branch_profile(numerical_from_good(projection(S, [1])).generators)
    b1 = blowup_numerical(p1)
    b2 = blowup_numerical(p2)
    prod = direct_product(b1.as_good(), b2.as_good())
    part = apery_nonlocal_d2(b1, b2, e)
    return TwoBranchBlowupResult(S, e, b1, b2, prod, part)


def shift_level(classes, from_box: Point, shift: Point, to_box: Point) -> frozenset[Point]:
    """Translate a capped level: expand, slide, and re-cap in the target box."""
    canvas = sub(to_box, shift)
    if any(c < b for c, b in zip(canvas, from_box)):
        raise ValueError("target box too small to carry the shifted level")
    pts = expand_classes(classes, from_box, canvas)
    return frozenset(add(p, shift) for p in pts)


@dataclass(frozen=True)
class ShiftReport:
    ok: bool
    mode: str
    preconditions: tuple[str, ...]
    per_level: tuple[tuple[int, bool, frozenset, frozenset], ...]
    blowup: TwoBranchBlowupResult | None = None

    def lines(self) -> list[str]:
        out = [("PASS" if self.ok else "FAIL") + f": Apery shift ({self.mode} mode)"]
        out += [f"  precondition failed: {p}" for p in self.preconditions]
        for i, good, extra, missing in self.per_level:
            if good:
                out.append(f"  level {i}: shift holds")
            else:
                out.append(f"  level {i}: extra {sorted(extra)} missing {sorted(missing)}")
        return out


def _shift_preconditions(S: GoodSemigroup) -> list[str]:
    pre = []
    if S.dim != 2:
        pre.append("semigroup is not two-dimensional")
        return pre
    if not S.is_local():
        pre.append("semigroup is not local")
    try:
        for axis in (0, 1):
            if not is_plane_branch(numerical_from_good(projection(S, [axis])).generators):
                pre.append(f"projection {axis} is not a plane branch")
    except ValueError as exc:
        pre.append(str(exc))
    if not is_symmetric(S):
        pre.append("semigroup is not symmetric")
    return pre


def verify_apery_shift(S: GoodSemigroup, local_blowup: GoodSemigroup | None = None) -> ShiftReport:
    """Check that every Apery level of S is the corresponding level of the
    blowup translated by multiples of the multiplicity.

    When the union delta set at the multiplicity is nonempty the blowup
    splits and is built here from the branches; otherwise the blowup is
    local and must be supplied by the caller, whose Apery levels are then
    compared in the same way.
    """
    pre = _shift_preconditions(S)
    e = S.multiplicity()
    split = delta_nonempty(S, e)
    mode = "split" if split else "local"
    blow = None
    if split:
        try:
            blow = blowup_split(S)
            primed = blow.levels
        except ValueError as exc:
            pre.append(str(exc))
            primed = None
    else:
        if local_blowup is None:
            pre.append("the blowup is local; supply it explicitly")
            primed = None
        else:
            primed = apery_levels(local_blowup, e)
    part = apery_levels(S, e)
    if pre or primed is None:
        return ShiftReport(False, mode, tuple(pre), (), blow)
    A = part.complement
    wb = is_well_behaved(A.semigroup, A.ideal, A)
    if not wb:
        pre.append("Apery set is not well-behaved")
        return ShiftReport(False, mode, tuple(pre), (), blow)
    per = []
    ok = True
    n = part.count
    if primed.count != n:
        pre.append(f"level counts differ: {n} vs {primed.count}")
        return ShiftReport(False, mode, tuple(pre), (), blow)
    for i in range(1, n + 1):
        try:
            shifted = shift_level(
                primed.levels[i - 1], primed.box, scale(i - 1, e), part.box
            )
        except ValueError as exc:
            pre.append(f"level {i}: {exc}")
            ok = False
            continue
        want = part.levels[i - 1]
        good = shifted == want
        per.append((i, good, shifted - want, want - shifted))
        ok = ok and good
    return ShiftReport(ok, mode, tuple(pre), tuple(per), blow)


@dataclass(frozen=True)
class AbsoluteLevelsReport:
    ok: bool
    preconditions: tuple[str, ...]
    per_level: tuple[tuple[int, frozenset, frozenset], ...]  # (level, found, predicted)
    step_ok: bool
    gamma_identity: bool

    def lines(self) -> list[str]:
        out = [("PASS" if self.ok else "FAIL") + ": absolutes follow the Apery grid"]
        out += [f"  precondition failed: {p}" for p in self.preconditions]
        for i, found, predicted in self.per_level:
            mark = "ok" if found == predicted else f"found {sorted(found)} predicted {sorted(predicted)}"
            out.append(f"  level {i}: {mark}")
        out.append(f"  stepping of absolutes: {'ok' if self.step_ok else 'FAIL'}")
        out.append(f"  gamma corner identity: {'ok' if self.gamma_identity else 'FAIL'}")
        return out


def check_absolute_levels(S: GoodSemigroup) -> AbsoluteLevelsReport:
    """The absolutes of level i are exactly the (j,k) grid points with
    j + k - 1 = i slid up by (i-1) multiplicities, and each absolute sees
    an absolute of the next level inside the delta set of its translate."""
    pre = _shift_preconditions(S)
    e = S.multiplicity()
    if not delta_nonempty(S, e):
        pre.append("the blowup is not split (empty delta set at the multiplicity)")
    part = apery_levels(S, e)
    A = part.complement
    if not is_well_behaved(A.semigroup, A.ideal, A):
        pre.append("Apery set is not well-behaved")
    e1, e2 = e
    b1 = None
    try:
        b1 = blowup_numerical(plane_branch_profile(numerical_from_good(projection(S, [0])).generators))
        b2 = blowup_numerical(plane_branch_profile(numerical_from_good(projection(S, [1])).generators))
    except ValueError as exc:
        pre.append(str(exc))
    per = []
    ok = not pre
    step_ok = True
    gamma_ok = True
    if b1 is not None:
        n = part.count
        per_level_abs = []
        for i in range(1, n + 1):
            level = part.levels[i - 1]
            finite = [p for p in level if all(x < t for x, t in zip(p, part.box))]
            found = frozenset(p for p in finite if not delta_nonempty(S, p))
            predicted = frozenset(
                add(omega_jk(b1, b2, e, j, i + 1 - j), scale(i - 1, e))
                for j in range(max(1, i + 1 - e2), min(e1, i) + 1)
            )
            per.append((i, found, predicted))
            per_level_abs.append(found)
            if found != predicted:
                ok = False
        # the stepping claim is checked where level i can hold absolutes at
        # all, i.e. while the (j,k) grid with j+k-1 = i is nonempty
        for i in range(2, min(n, e1 + e2 - 1) + 1):
            for a in per_level_abs[i - 2]:
                hits = [
                    b
                    for b in S.elements_within(part.box)
                    if any(
                        class_in_delta(b, add(a, e), frozenset({ax}), part.box)
                        for ax in (0, 1)
                    )
                ]
                if not any(h in per_level_abs[i - 1] for h in hits):
                    step_ok = False
        gamma_ok = S.gamma == add(omega_jk(b1, b2, e, e1, e2), scale(e1 + e2 - 2, e))
        ok = ok and step_ok and gamma_ok
    else:
        ok = False
    return AbsoluteLevelsReport(ok, tuple(pre), tuple(per), step_ok, gamma_ok)


def reconstruct_from_blowup(
    p1: PlaneBranchProfile, p2: PlaneBranchProfile, split: bool = True
) -> GoodSemigroup:
    """Rebuild the plane semigroup whose blowup is the product of the two
    blown-up branches, by sliding the closed-form blowup levels back up
    and closing under multiplicity translates."""
    if not split:
        raise ValueError("only the split-blowup case can be reconstructed")
    e = (p1.multiplicity, p2.multiplicity)
    n = e[0] + e[1]
    b1 = blowup_numerical(p1)
    b2 = blowup_numerical(p2)
    primed = apery_nonlocal_d2(b1, b2, e)
    top = (p1.apery[-1] - (e[0] - 1) * e[0], p2.apery[-1] - (e[1] - 1) * e[1])
    gamma = add(top, scale(n - 2, e))
    c = add(gamma, (1, 1))
    box = add(add(c, e), (1, 1))
    apery_classes: set[Point] = set()
    for i in range(1, n + 1):
        apery_classes |= shift_level(primed.levels[i - 1], primed.box, scale(i - 1, e), box)

    def member(p: Point) -> bool:
        q = p
        while all(x >= 0 for x in q):
            if tuple(min(x, t) for x, t in zip(q, box)) in apery_classes:
                return True
            q = sub(q, e)
        return False

    small = frozenset(p for p in iter_box(c) if member(p))
    S = GoodSemigroup(2, c, small)
    report = validate(S)
    problems = [] if report.ok else [v.message for v in report.violations]
    if not S.is_local():
        problems.append("reconstruction is not local")
    if not is_symmetric(S):
        problems.append("reconstruction is not symmetric")
    shift = verify_apery_shift(S)
    if not shift.ok:
        problems.append("reconstruction fails the Apery shift round trip")
    if problems:
        raise ValueError("; ".join(problems))
    return S


@dataclass(frozen=True)
class PartitionComparison:
    ok: bool
    mismatches: tuple[tuple[int, frozenset, frozenset], ...]

    def lines(self) -> list[str]:
        if self.ok:
            return ["PASS: canonical and domination partitions agree levelwise"]
        return ["FAIL: partitions differ"] + [
            f"  level {i}: only-canonical {sorted(a)} only-domination {sorted(b)}"
            for i, a, b in self.mismatches
        ]


def compare_partitions_planecurve(S: GoodSemigroup) -> PartitionComparison:
    """Levelwise comparison of the canonical partition with the pure
    domination layering on the Apery set at the multiplicity."""
    e = S.multiplicity()
    A = apery_set(S, e)
    p = partition(A)
    q = domination_partition(A)
    mismatches = []
    n = max(p.count, q.count)
    for i in range(n):
        a = p.levels[i] if i < p.count else frozenset()
        b = q.levels[i] if i < q.count else frozenset()
        if a != b:
            mismatches.append((i + 1, a - b, b - a))
    return PartitionComparison(not mismatches, tuple(mismatches))
