"""Block words in the solid torus and their relative invariants."""

from __future__ import annotations

from legsat.legtangle import (
    LegWord,
    block_stats,
    factor_zeta_sigma,
    prefix_zeta_sigma,
    simplify,
    underlying_braid,
    whitehead_pattern_invariants,
    word_invariants,
)

par = (1, 1, 1)
print("single blocks on three parallel strands (reltb, relrot):")
for tok in ("X0", "X1", "S", "Z"):
    from legsat.legtangle import Block

    print(f"  {tok:>3}: {block_stats(Block.parse(tok), par).invariants()}")

w = LegWord.parse(2, ["X0", "X0", "X0"])
print("\nX0 X0 X0 on two strands:", word_invariants(w), " braid:", underlying_braid(w).ints())

g = LegWord.parse(3, ["Xg:0,2,1", "Zg:0,2,1"])
s = simplify(g)
print("\ngeneralized blocks", [b.token() for b in g.blocks])
print("  expand to", [b.token() for b in s.blocks])
print("  invariants before/after:", word_invariants(g), word_invariants(s))

p = prefix_zeta_sigma(w, 1, 2)
print("\nprefixing one Z and two S:", [b.token() for b in p.blocks], word_invariants(p))
z, sg, rest = factor_zeta_sigma(p)
print(f"  factored back: z={z} s={sg} rest={[b.token() for b in rest.blocks]}")

print("\nWhitehead pattern, maximal classes (reltb, relrot):")
for m in (4, 3, -3, -4):
    box = None if m >= 0 else ["S", "Z"] * (-m // 2) + ["S"] * (-m % 2)
    print(f"  m={m:>2}: {whitehead_pattern_invariants(m, box)}")
