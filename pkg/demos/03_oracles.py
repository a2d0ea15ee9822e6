"""Brute-force class censuses next to the closed-form counts they confirm."""

from __future__ import annotations

from legsat.atlas import WhiteheadTable
from legsat.braid import BraidWord
from legsat.rewrite import positive_leg_classes, stabilized_classes, two_braid_classes, whitehead_classes

print("Whitehead patterns, m < 0: classes found by search vs closed form")
for m in range(-1, -7, -1):
    t = WhiteheadTable(m)
    print(f"  m={m:>2}: {len(whitehead_classes(m)):>2} vs {t.count(*t.peaks()[0]):>2}")

print("\nafter stabilizing m=-4 (positive, negative):")
for pos, neg in ((1, 0), (0, 1), (1, 1)):
    print(f"  (+{pos}, -{neg}): {len(stabilized_classes(-4, pos, neg))} classes")

print("\n2-braid patterns: one class per rotation number")
for m in (-1, -3, -5, -7):
    tags = sorted(c.tag for c in two_braid_classes(m))
    print(f"  m={m:>2}: {len(tags)} classes, Z-counts {tags}")

print("\npositive braids have a single maximal class:")
for ints, closed in (((1, 2, 1), False), ((1, 1, 1), True), ((1, 2, 1, 2, 1, 2), True)):
    n = max(ints) + 1
    k = positive_leg_classes(BraidWord.from_ints(n, ints), closed)
    print(f"  {ints} {'closed' if closed else 'open'}: {k}")
