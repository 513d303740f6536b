from __future__ import annotations

import pytest

from goodsemigroups import (
    apery_levels,
    apery_set,
    classify_level,
    d2_equivalences,
    direct_product,
    from_numerical,
    gamma_line_levels,
    is_well_behaved,
    partition,
    principal_ideal,
    projection_level_bound,
    single_line_level,
)
from goodsemigroups.lattice import class_dominates, class_in_delta, iter_box
from goodsemigroups.wellbehaved import classify_elements


def apery_data(S, w):
    return principal_ideal(S, w), apery_set(S, w)


def brute_wellbehaved_d2(S, E, A):
    """Independent plane oracle: whenever the whole union delta set of a
    point stays inside the complement, the point itself must not."""
    box = A.box
    cl = S.elements_within(box)
    for a in cl:
        hits = [
            b
            for b in cl
            for i in (0, 1)
            if class_in_delta(b, a, frozenset({i}), box)
        ]
        if hits and all(not E.contains(b) for b in hits):
            if not E.contains(a):
                return False
    return True


def test_plane_curve_apery_is_well_behaved(fig4, cusps):
    for S, w in ((fig4, (2, 3)), (cusps, (2, 2))):
        E, A = apery_data(S, w)
        assert brute_wellbehaved_d2(S, E, A)
        assert is_well_behaved(S, E, A)


def test_products_are_not_well_behaved(fig3):
    E, A = apery_data(fig3, (4, 3))
    assert not brute_wellbehaved_d2(fig3, E, A)
    assert not is_well_behaved(fig3, E, A)
    # the origin itself is a witness: its whole delta set stays inside A
    small = direct_product(
        from_numerical([2, 3]).as_good(), from_numerical([2, 3]).as_good()
    )
    E2, A2 = apery_data(small, (2, 2))
    assert not is_well_behaved(small, E2, A2)


def test_n3_apery_is_not_well_behaved(n3):
    E, A = apery_data(n3, (2, 2, 3))
    assert not is_well_behaved(n3, E, A)


def test_three_way_equivalence(fig3, fig4, cusps):
    for S, w, want in (
        (fig4, (2, 3), True),
        (cusps, (2, 2), True),
        (fig3, (4, 3), False),
    ):
        E, A = apery_data(S, w)
        assert d2_equivalences(S, E, A) == (want, want, want)


def test_three_way_equivalence_d1_degenerates():
    # in one coordinate every reading is vacuously or directly true
    S = from_numerical([3, 5, 7]).as_good()
    E, A = apery_data(S, (3,))
    assert is_well_behaved(S, E, A)
    part = partition(A)
    for i in range(part.count - 1):
        (a,) = part.levels[i]
        assert any(class_dominates(a, b, A.box) for b in part.levels[i + 1])


def test_single_line_level(fig4):
    part = apery_levels(fig4, (2, 3))
    assert single_line_level(fig4, part, (3, -1), frozenset({0})) == 2
    assert single_line_level(fig4, part, (6, 9), frozenset({1})) == 3
    # the top level is the line over the ideal's inner corner
    g_e = principal_ideal(fig4, (2, 3)).gamma
    assert single_line_level(fig4, part, g_e, frozenset({0})) == part.count
    with pytest.raises(ValueError):
        single_line_level(fig4, part, (2, -1), frozenset({0}))  # meets the ideal
    with pytest.raises(ValueError):
        single_line_level(fig4, part, (1, -1), frozenset({0}))  # empty line


def test_single_level_lines_everywhere(fig4, cusps):
    # any direction line contained in the complement sits inside one level
    for S, w in ((fig4, (2, 3)), (cusps, (2, 2))):
        E = principal_ideal(S, w)
        part = apery_levels(S, w)
        box = part.box
        cl = S.elements_within(box)
        for a in iter_box(box):
            hits = [
                b
                for b in cl
                for i in (0, 1)
                if class_in_delta(b, a, frozenset({i}), box)
            ]
            if hits and all(not E.contains(b) for b in hits):
                assert len({part.level_of(b) for b in hits}) == 1, a


def test_projection_level_bound(fig4, cusps):
    for S, w in ((fig4, (2, 3)), (cusps, (2, 2))):
        part = apery_levels(S, w)
        report = projection_level_bound(S, part)
        assert report.ok, report.text()


def test_projection_level_bound_values(fig4):
    part = apery_levels(fig4, (2, 3))
    report = projection_level_bound(fig4, part)
    # Apery of the first projection is {0,3}; of the second {0,5,10}
    assert [(ax, i, u) for ax, i, u, _ in report.lines_checked] == [
        (0, 1, 0), (0, 2, 3), (1, 1, 0), (1, 2, 5), (1, 3, 10),
    ]


def test_gamma_line_levels(fig4, cusps):
    for S in (fig4, cusps):
        part = apery_levels(S, S.multiplicity())
        for axes in ([0], [1]):
            report = gamma_line_levels(S, part, axes)
            assert report.ok, report.text()
            assert not report.preconditions


def test_gamma_line_levels_reports_bad_preconditions(n3):
    part = apery_levels(n3, (2, 2, 3))
    report = gamma_line_levels(n3, part, [0])
    assert "complement is not well-behaved" in report.preconditions
    assert not report.ok


def test_domination_implies_well_behaved(fig4, n3, cusps):
    # one-way: if every level is dominated by the next, the complement is
    # well-behaved (checked as material implication on every fixture)
    from goodsemigroups import load_fixture

    for name, w in (
        ("fig4_planecurve", (2, 3)),
        ("transversal_cusps", (2, 2)),
        ("fig3_product", (4, 3)),
        ("n3_symmetric", (2, 2, 3)),
    ):
        S = load_fixture(name)
        E, A = apery_data(S, w)
        part = partition(A)
        dominated = all(
            any(class_dominates(a, b, A.box) for b in part.levels[i + 1])
            for i in range(part.count - 1)
            for a in part.levels[i]
        )
        if dominated:
            assert is_well_behaved(S, E, A), name


def test_classify_level_fig4(fig4):
    part = apery_levels(fig4, (2, 3))
    one = classify_level(fig4, part, 1)
    assert one.absolutes == ((0, 0),)
    assert dict(one.tags)[(0, 0)] == "ii"
    two = classify_level(fig4, part, 2)
    assert two.absolutes == ((3, 5),)
    three = classify_level(fig4, part, 3)
    assert three.absolutes == ((6, 10),)
    assert three.theta_high is not None and three.theta_low is None
    tags = dict(three.tags)
    # everything on the horizontal ray past the corner is clause i
    q1 = part.cap_start[0]
    for p, t in tags.items():
        if p[1] == 9 and p[0] > q1:
            assert t == "i"
    top = classify_level(fig4, part, part.count)
    assert top.absolutes == ()
    assert top.theta_low is not None and top.theta_high is not None


def test_classify_level_schematic():
    # transcription of the staircase picture: four corner elements, a
    # vertical ray above the first, bounded to the right
    corners = ((2, 16), (6, 13), (12, 8), (17, 5))
    level = {
        (2, 14), (2, 15), (2, 17), (2, 18), (2, 19), (2, 20),
        (3, 13), (5, 13), (6, 10), (6, 11), (7, 8), (9, 8),
        (12, 6), (12, 7), (14, 5), (16, 5), (17, 3),
    } | set(corners)
    box = (20, 20)
    tags = dict(classify_elements(level, corners, box, (True, False)))
    assert tags[(3, 13)] == "iii"
    assert tags[(2, 17)] == "i"
    assert tags[(2, 14)] == "ii"
    assert tags[(6, 10)] == "ii"
    assert tags[(9, 8)] == "iii"
    assert tags[(17, 3)] == "iv"


def test_classification_covers_and_is_box_stable(fig4, cusps):
    from test_ideal import recompute_with_margin
    from goodsemigroups.levels import partition_points

    for S, w in ((fig4, (2, 3)), (cusps, (2, 2))):
        E = principal_ideal(S, w)
        part = apery_levels(S, w)
        wide = recompute_with_margin(S, E, 1)
        wide_part = partition_points(wide.points, wide.box)
        for i in range(1, part.count + 1):
            ls = classify_level(S, part, i)
            assert len(ls.tags) == len(part.levels[i - 1])
            # every element shares a coordinate with a corner
            for p, _ in ls.tags:
                assert any(p[0] == c[0] or p[1] == c[1] for c in ls.corners())
            # recomputing one box out changes no finite element's tag
            wide_ls = classify_level(
                S,
                type(part)(wide_part.levels, wide_part.box, part.cap_start, part.complement),
                i,
            )
            finite = {
                p: t for p, t in ls.tags if all(x < b for x, b in zip(p, part.box))
            }
            wide_finite = dict(wide_ls.tags)
            for p, t in finite.items():
                assert wide_finite[p] == t


def test_classification_report_text(fig4):
    part = apery_levels(fig4, (2, 3))
    lines = classify_level(fig4, part, 3).text()
    assert lines[0].startswith("level 3: absolutes [(6, 10)]")
    assert any("clause i" in l for l in lines)
