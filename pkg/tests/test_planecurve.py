from __future__ import annotations

import pytest

from conftest import brute_members
from goodsemigroups import (
    apery_levels,
    apery_set,
    blowup_numerical,
    check_absolute_levels,
    compare_partitions_planecurve,
    from_numerical,
    is_plane_branch,
    is_symmetric,
    numerical_from_good,
    omega_jk,
    plane_branch_profile,
    projection,
    reconstruct_from_blowup,
    tau_values,
    validate,
    verify_apery_shift,
)
from goodsemigroups.lattice import add, expand_classes, scale, sub
from goodsemigroups.planecurve import blowup_split, shift_level


def brute_tau(gens):
    """Oracle: scan multiples of each generator against an independent sieve
    of the span of the earlier generators."""
    gens = sorted(gens)
    out = []
    for i in range(1, len(gens)):
        g = gens[i]
        bound = gens[0] * g + g
        member = brute_members(gens[:i], bound)
        h = 1
        while not member[(h + 1) * g]:
            h += 1
        out.append(h)
    return tuple(out)


@pytest.mark.parametrize(
    "gens, want",
    [([4, 7], (3,)), ([3, 5], (2,)), ([2, 3], (1,)), ([3, 5, 7], (2, 1)), ([4, 6, 13], (1, 1))],
)
def test_tau_values(gens, want):
    assert brute_tau(gens) == want
    assert tau_values(gens) == want


def test_is_plane_branch():
    assert is_plane_branch([2, 3])
    assert is_plane_branch([3, 5])
    assert is_plane_branch([4, 7])
    assert not is_plane_branch([3, 5, 7])
    # oracle for the three-generator case: Apery grid {0,6,13,19} matches
    # and the gap condition 2*6 < 13 holds
    n = from_numerical([4, 6, 13])
    assert set(n.apery(4)) == {0, 6, 13, 19}
    assert is_plane_branch([4, 6, 13])


def brute_blowup_elements(apery, e, bound):
    """Oracle: close the slid Apery set under adding the multiplicity."""
    shifted = [w - i * e for i, w in enumerate(apery)]
    out = set()
    for w in shifted:
        k = w
        while k <= bound:
            out.add(k)
            k += e
    return out


@pytest.mark.parametrize(
    "gens, blown_gens",
    [([2, 3], (1,)), ([3, 5], (2, 3)), ([4, 7], (3, 4))],
)
def test_blowup_numerical(gens, blown_gens):
    profile = plane_branch_profile(gens)
    blown = blowup_numerical(profile)
    assert blown.generators == blown_gens
    # oracle comparison on a long stretch of elements
    bound = 3 * blown.conductor + 10
    want = brute_blowup_elements(profile.apery, profile.multiplicity, bound)
    got = {n for n in range(bound + 1) if blown.contains(n)}
    assert got == want
    # the slid set is the blowup's Apery set
    e = profile.multiplicity
    assert blown.apery(e) == tuple(w - i * e for i, w in enumerate(profile.apery))


def test_blowup_rejects_non_plane_branch():
    with pytest.raises(ValueError):
        plane_branch_profile([3, 5, 7])


def test_profile_gap_consequences():
    for gens in ([2, 3], [3, 5], [4, 7], [4, 6, 13]):
        p = plane_branch_profile(gens)
        e = p.multiplicity
        for i, w in enumerate(p.apery):
            assert w > i * e or i == 0
            if i:
                assert p.apery[i] - p.apery[i - 1] > e


def test_omega_grid_values():
    b1 = blowup_numerical(plane_branch_profile([2, 3]))
    b2 = blowup_numerical(plane_branch_profile([3, 5]))
    e = (2, 3)
    assert omega_jk(b1, b2, e, 1, 1) == (0, 0)
    assert omega_jk(b1, b2, e, 2, 1) == (1, 0)
    assert omega_jk(b1, b2, e, 1, 2) == (0, 2)
    assert omega_jk(b1, b2, e, 2, 3) == (1, 4)
    with pytest.raises(ValueError):
        omega_jk(b1, b2, e, 3, 1)
    # identity with the unblown Apery sets slid down
    u = plane_branch_profile([2, 3]).apery
    v = plane_branch_profile([3, 5]).apery
    for j in (1, 2):
        for k in (1, 2, 3):
            assert omega_jk(b1, b2, e, j, k) == (
                u[j - 1] - (j - 1) * 2,
                v[k - 1] - (k - 1) * 3,
            )
    bt = blowup_numerical(plane_branch_profile([2, 3]))
    assert omega_jk(bt, bt, (2, 2), 2, 2) == (1, 1)


def test_reconstruction_round_trip(cusps):
    p = plane_branch_profile([2, 3])
    S = reconstruct_from_blowup(p, p)
    assert S == cusps  # golden file recorded from this very construction
    assert S.gamma == (5, 5)
    assert S.conductor == (6, 6)
    assert validate(S).ok
    assert S.is_local() and is_symmetric(S)
    from goodsemigroups.semigroup import delta_nonempty

    assert delta_nonempty(S, (2, 2))
    assert projection(S, [0]) == from_numerical([2, 3]).as_good()
    assert projection(S, [1]) == from_numerical([2, 3]).as_good()
    part = apery_levels(S, (2, 2))
    assert part.levels[2] >= {(5, 5)}
    with pytest.raises(ValueError):
        reconstruct_from_blowup(p, p, split=False)


def test_reconstruction_of_the_mixed_pair():
    # branches of the plane fixture: the reconstruction machinery also runs on
    # them, producing a split-blowup sibling of that curve
    S = reconstruct_from_blowup(plane_branch_profile([2, 3]), plane_branch_profile([3, 5]))
    assert validate(S).ok
    assert verify_apery_shift(S).ok
    assert projection(S, [0]) == from_numerical([2, 3]).as_good()
    assert projection(S, [1]) == from_numerical([3, 5]).as_good()


def test_apery_shift_split_mode(cusps):
    report = verify_apery_shift(cusps)
    assert report.ok and report.mode == "split"
    assert not report.preconditions
    blow = report.blowup
    assert blow is not None
    assert blow.branch1.generators == (1,)
    assert blow.product.conductor == (0, 0)
    # the level-2 shift spelled out
    primed = blow.levels
    assert primed.levels[1] == {(0, 1), (1, 0)}
    part = apery_levels(cusps, (2, 2))
    assert part.levels[1] == {(2, 3), (3, 2)}
    assert shift_level(primed.levels[1], primed.box, (2, 2), part.box) == part.levels[1]
    # the top level: rays shifted three steps
    want4 = expand_classes(part.levels[3], part.box, (12, 12))
    got4 = {
        add(p, (6, 6))
        for p in expand_classes(primed.levels[3], primed.box, (6, 6))
    }
    assert want4 == frozenset(got4)


def test_apery_shift_local_mode(fig4, fig4_blowup_fixture):
    report = verify_apery_shift(fig4, local_blowup=fig4_blowup_fixture)
    assert report.ok and report.mode == "local"
    # without the caller-supplied blowup the check reports the gap
    bare = verify_apery_shift(fig4)
    assert not bare.ok
    assert any("supply" in p for p in bare.preconditions)


def test_local_blowup_fixture_is_derived_from_the_shift(fig4, fig4_blowup_fixture):
    # the fixture records A_i - (i-1)e closed under multiplicity translates
    part = apery_levels(fig4, (2, 3))
    e = (2, 3)
    down = set()
    for i, level in enumerate(part.levels):
        canvas = sub(part.box, scale(i, e))
        for p in expand_classes(level, part.box, add(canvas, scale(i, e))):
            q = sub(p, scale(i, e))
            if all(x >= 0 for x in q):
                down.add(q)
    Sp = fig4_blowup_fixture
    for q in down:
        assert Sp.contains(q), q
    assert validate(Sp).ok and Sp.is_local()
    assert Sp.multiplicity() == (1, 2)


def test_absolute_levels_on_reconstruction(cusps):
    report = check_absolute_levels(cusps)
    assert report.ok, report.lines()
    per = dict((i, (found, predicted)) for i, found, predicted in report.per_level)
    assert per[1][0] == {(0, 0)}
    assert per[2][0] == {(2, 3), (3, 2)}
    assert report.gamma_identity


def test_absolute_levels_on_the_mixed_reconstruction():
    S = reconstruct_from_blowup(plane_branch_profile([2, 3]), plane_branch_profile([3, 5]))
    report = check_absolute_levels(S)
    assert report.ok, report.lines()


def test_absolute_levels_reports_local_blowup(fig4):
    report = check_absolute_levels(fig4)
    assert not report.ok
    assert any("not split" in p for p in report.preconditions)


def test_absolutes_live_in_the_apery_set(cusps):
    # symmetric + split blowup: every absolute element sits in the Apery set
    A = apery_set(cusps, (2, 2))
    box = cusps.conductor
    from goodsemigroups import absolute_elements

    for a in absolute_elements(cusps, box):
        assert A.contains_concrete(a), a


def test_partitions_agree_on_plane_fixtures(fig4, cusps):
    assert compare_partitions_planecurve(fig4).ok
    assert compare_partitions_planecurve(cusps).ok


def test_partitions_comparison_recorded_on_product(fig3):
    report = compare_partitions_planecurve(fig3)
    assert isinstance(report.ok, bool)


def test_branch_apery_symmetry_identity():
    # the largest Apery element splits over complementary indices
    for gens in ([2, 3], [3, 5], [4, 7], [4, 6, 13]):
        p = plane_branch_profile(gens)
        u = p.apery
        e1 = p.multiplicity
        for j in range(1, e1 + 1):
            assert u[e1 - 1] == u[j - 1] + u[e1 - j], (gens, j)


def test_vertical_ray_coordinates_of_the_reconstruction(cusps):
    # the column coordinate of the vertical ray in level i is dual to the
    # branch Apery set with respect to gamma_1 + e_1
    S = cusps
    part = apery_levels(S, (2, 2))
    e = (2, 2)
    u = plane_branch_profile([2, 3]).apery
    g = S.gamma
    for i in range(e[1] + 1, part.count + 1):
        j = i - e[1]
        cols = {p[0] for p in part.levels[i - 1] if p[1] == part.box[1]}
        assert cols == {g[0] + e[0] - u[e[0] - j]}, i


def test_shares_coordinate_with_a_corner(cusps):
    # every level element lines up with a staircase corner, the dangling
    # clauses never occur on plane-curve fixtures, and the meets of
    # adjacent corners are absolute elements of the ideal
    from goodsemigroups import classify_level
    from goodsemigroups.lattice import meet
    from goodsemigroups.semigroup import delta_nonempty

    E = principal_ideal_cached(cusps)
    part = apery_levels(cusps, (2, 2))
    for i in range(1, part.count + 1):
        ls = classify_level(cusps, part, i)
        corners = ls.corners()
        for p, tag in ls.tags:
            assert tag not in ("iv", "v")
            assert any(p[0] == t[0] or p[1] == t[1] for t in corners), p
        for a, b in zip(corners, corners[1:]):
            m = meet(a, b)
            assert E.contains(m), m
            # no ideal element shares a coordinate while exceeding the other
            cl = E.elements_within(part.box)
            from goodsemigroups.lattice import class_in_delta

            for ax in (0, 1):
                assert not any(
                    class_in_delta(q, m, frozenset({ax}), part.box) for q in cl
                ), (m, ax)


def principal_ideal_cached(S):
    from goodsemigroups import principal_ideal

    return principal_ideal(S, S.multiplicity())


def test_blowup_split_structure(cusps):
    result = blowup_split(cusps)
    assert result.e == (2, 2)
    assert result.branch1.generators == (1,)
    assert result.branch2.generators == (1,)
    assert result.levels.count == 4


def test_projection_plane_branches(fig4):
    for axis, gens in ((0, (2, 3)), (1, (3, 5))):
        n = numerical_from_good(projection(fig4, [axis]))
        assert is_plane_branch(n.generators)
        assert n.generators == gens


@pytest.mark.parametrize(
    "g1, g2, conductor",
    [([3, 5], [3, 5], (17, 17)), ([4, 7], [2, 3], (26, 10)),
     ([3, 5], [2, 3], (14, 8)), ([4, 7], [3, 5], (30, 20))],
)
def test_reconstruction_family(g1, g2, conductor):
    S = reconstruct_from_blowup(plane_branch_profile(g1), plane_branch_profile(g2))
    assert S.conductor == conductor
    assert verify_apery_shift(S).ok
    assert check_absolute_levels(S).ok
    assert compare_partitions_planecurve(S).ok
    assert numerical_from_good(projection(S, [0])).generators == tuple(g1)
    assert numerical_from_good(projection(S, [1])).generators == tuple(g2)
    # with a split blowup, every absolute element lies in the Apery set
    A = apery_set(S, S.multiplicity())
    from goodsemigroups import absolute_elements

    for a in absolute_elements(S, S.conductor):
        assert A.contains_concrete(a), a


def test_same_branches_different_curves(fig4):
    # the plane fixture and the reconstruction share their branches but
    # differ: the fixture's blowup is local, the reconstruction's splits
    S = reconstruct_from_blowup(plane_branch_profile([2, 3]), plane_branch_profile([3, 5]))
    assert projection(S, [0]) == projection(fig4, [0])
    assert projection(S, [1]) == projection(fig4, [1])
    assert S != fig4
    from goodsemigroups.semigroup import delta_nonempty

    assert delta_nonempty(S, S.multiplicity())
    assert not delta_nonempty(fig4, fig4.multiplicity())


@pytest.mark.parametrize("g1, g2", [([3, 5], [3, 5]), ([4, 7], [3, 5])])
def test_vertical_ray_duality_in_reconstructions(g1, g2):
    # the column of the vertical ray in level i reflects the first branch's
    # Apery set across gamma_1 + e_1
    S = reconstruct_from_blowup(plane_branch_profile(g1), plane_branch_profile(g2))
    part = apery_levels(S, S.multiplicity())
    e = S.multiplicity()
    u = plane_branch_profile(g1).apery
    g = S.gamma
    for i in range(e[1] + 1, part.count + 1):
        j = i - e[1]
        cols = {p[0] for p in part.levels[i - 1] if p[1] == part.box[1]}
        assert cols == {g[0] + e[0] - u[e[0] - j]}, i
