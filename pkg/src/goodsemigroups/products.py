"""Level arithmetic for direct products of good semigroups.

For a product semigroup with a product ideal, the level of a complement
point is one less than the sum of the factor level-function values; for
two numerical factors the levels of an Apery set also have a closed
form, built here directly from the factor Apery sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import CappedComplement, GoodIdeal, complement, principal_ideal, product_ideal
from .lattice import Point
from .levels import LevelPartition, level_function, partition
from .semigroup import GoodSemigroup, NumericalSemigroup, _as_point, direct_product


@dataclass(frozen=True)
class ProductContext:
    s1: GoodSemigroup
    e1: GoodIdeal
    s2: GoodSemigroup
    e2: GoodIdeal
    product: GoodSemigroup
    ideal: GoodIdeal
    comp: CappedComplement
    part1: LevelPartition
    part2: LevelPartition

    def split(self, a: Point) -> tuple[Point, Point]:
        d1 = self.s1.dim
        return a[:d1], a[d1:]


def build_product_context(
    s1: GoodSemigroup, e1: GoodIdeal, s2: GoodSemigroup, e2: GoodIdeal
) -> ProductContext:
    S = direct_product(s1, s2)
    E = product_ideal(e1, e2, parent=S)
    comp = complement(S, E)
    p1 = partition(complement(s1, e1))
    p2 = partition(complement(s2, e2))
    return ProductContext(s1, e1, s2, e2, S, E, comp, p1, p2)


def product_level(ctx: ProductContext, a) -> int:
    """Level of a complement point as the sum of factor levels minus one."""
    a = _as_point(a)
    cls = ctx.comp.cap_point(a)
    if cls not in ctx.comp.points:
        raise ValueError(f"{a} is not in the complement of the product ideal")
    a1, a2 = ctx.split(cls)
    l1 = level_function(ctx.s1, ctx.part1, a1)
    l2 = level_function(ctx.s2, ctx.part2, a2)
    return l1 + l2 - 1


def apery_nonlocal_d2(S1: NumericalSemigroup, S2: NumericalSemigroup, w) -> LevelPartition:
    """Closed-form levels of the Apery set of S1 x S2 at w = (w1, w2).

    Level 1 is the origin; level n collects, over the index pairs summing
    to n, the points on the column of the i-th Apery element of S1 between
    consecutive Apery elements of S2 and symmetrically on the rows, always
    intersected with the product semigroup.  The entry one past the last
    Apery element is the box bound, which encodes the infinite rays.
    """
    w = _as_point(w)
    w1, w2 = w
    if w1 <= 0 or w2 <= 0:
        raise ValueError("both components of w must be nonzero")
    u = list(S1.apery(w1))
    v = list(S2.apery(w2))
    t1 = S1.conductor + w1 + 1
    t2 = S2.conductor + w2 + 1
    box = (t1, t2)
    levels: list[set[Point]] = [set() for _ in range(w1 + w2)]
    levels[0].add((0, 0))
    for i in range(1, w1 + 1):
        for j in range(1, w2 + 1):
            n = i + j
            ui = u[i - 1]
            vj = v[j - 1]
            hi_b = v[j] if j < w2 else t2
            for b in range(vj + 1, hi_b + 1):
                if S2.contains(b):
                    levels[n - 1].add((ui, b))
            hi_a = u[i] if i < w1 else t1
            for a in range(ui + 1, hi_a + 1):
                if S1.contains(a):
                    levels[n - 1].add((a, vj))
    S = direct_product(S1.as_good(), S2.as_good())
    E = principal_ideal(S, w)
    comp = complement(S, E)
    return LevelPartition(
        tuple(frozenset(l) for l in levels), box, tuple(t - 1 for t in box), comp
    )
