"""Braid words: writhe, full twists, closures and the two equality checks."""

from __future__ import annotations

from legsat.braid import (
    BraidWord,
    braid_group_equal,
    closure_components,
    full_twist,
    positive_monoid_class,
    writhe,
)

trefoil = BraidWord.from_ints(2, (1, 1, 1))
print("sigma_1^3 on 2 strands")
print("  writhe:", writhe(trefoil), " closure components:", closure_components(trefoil))

delta = full_twist(3, 1)
print("\nfull twist on 3 strands:", delta.ints(), " writhe:", writhe(delta))

w = BraidWord.from_ints(3, (1, 2, 1, 1))
cls = sorted(positive_monoid_class(w))
print(f"\npositive words equal to {w.ints()} in the monoid ({len(cls)}):")
for c in cls:
    print("  ", c)

a = BraidWord.from_ints(3, (1, 2, -1))
b = BraidWord.from_ints(3, (-2, 1, 2))
print(f"\n{a.ints()} vs {b.ints()} in the group:", braid_group_equal(a, b).value)
c = BraidWord.from_ints(3, (1, 1, -2, -2))
print(f"{c.ints()} vs the empty word:", braid_group_equal(c, BraidWord.from_ints(3, ())).value)
