"""A tour of Apery level partitions, from numerical semigroups to products.

Run:  python demos/apery_levels_tour.py
"""

from goodsemigroups import (
    apery_levels,
    apery_nonlocal_d2,
    from_numerical,
    load_fixture,
)
from goodsemigroups.plotting import render_ascii

# For a numerical semigroup the Apery set is finite and each element is its
# own level, listed in increasing order.
n47 = from_numerical([4, 7])
print("Apery set of <4,7> at 4:", n47.apery(4))
part = apery_levels(n47.as_good(), (4,))
print(part.listing())
print()

# For the product <4,7> x <3,5> the Apery set at (4,3) is infinite, but its
# seven levels are finite unions of points and rays.  "inf" marks a ray.
fig3 = load_fixture("fig3_product")
part = apery_levels(fig3, (4, 3))
print("levels of the product fixture at (4,3):")
print(part.listing())
print()

# The same levels come out of the closed form built from the two factor
# Apery sets alone - no partition machinery involved.
closed = apery_nonlocal_d2(n47, from_numerical([3, 5]), (4, 3))
print("closed form agrees with the generic partition:", closed.levels == part.levels)
print()

# A local plane-curve fixture, drawn as ASCII art: digits are levels,
# '#' marks the shifted ideal.
fig4 = load_fixture("fig4_planecurve")
part = apery_levels(fig4, (2, 3))
print("plane fixture, levels at the multiplicity (2,3):")
print(render_ascii(part))
