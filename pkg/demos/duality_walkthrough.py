"""Symmetry seen through level duality.

For a symmetric good semigroup the dual of Apery level i (delta sets of the
reflected points, minus what earlier levels produced) is exactly level
N - i + 1.  Run:  python demos/duality_walkthrough.py
"""

from goodsemigroups import (
    apery_levels,
    build_Z_W,
    check_almost_symmetric_duality,
    check_duality,
    from_numerical,
    is_almost_symmetric,
    is_symmetric,
    load_fixture,
)

# The three-coordinate fixture is symmetric; its seven levels pair up as
# (1,7), (2,6), (3,5) with level 4 self-dual.
n3 = load_fixture("n3_symmetric")
print("symmetric:", is_symmetric(n3))
part = apery_levels(n3, (2, 2, 3))
report = check_duality(n3, part)
for line in report.lines():
    print(" ", line)
print()

# A non-symmetric numerical semigroup fails the pairing...
s357 = from_numerical([3, 5, 7]).as_good()
print("<3,5,7> symmetric:", is_symmetric(s357))
print("duality on <3,5,7>:", check_duality(s357, apery_levels(s357, (3,))).ok)

# ...but it is almost symmetric, and the reversal survives on the auxiliary
# sets Z (pseudo-Frobenius elements plus the origin) and W.
print("<3,5,7> almost symmetric:", is_almost_symmetric(s357))
Z, W = build_Z_W(s357)
print("Z =", sorted(Z), "  W =", sorted(W))
zw = check_almost_symmetric_duality(s357)
for line in zw.lines():
    print(" ", line)
