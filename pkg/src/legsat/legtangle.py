"""Legendrian block words in the front projection.

Strand heights are numbered from 0 at the bottom. ``X(i)`` crosses the
strands at heights ``i`` and ``i+1``. ``S`` carries the bottom strand up over
all others through a loop with two cusps, and ``Z`` carries the top strand
down. Generalized blocks move whole groups of strands:

* ``Xg(i,k,l)``: the ``l`` strands above height ``i+k`` pass down through the
  ``k`` strands at heights ``i..i+k-1`` (``k*l`` crossings, no cusps);
* ``Sg(i,k,l)``: the ``k`` strands at heights ``i..i+k-1`` loop up over the
  next ``l`` strands;
* ``Zg(i,k,l)``: the ``k`` strands above the ``l`` strands at ``i..i+l-1``
  loop down beneath them.

Crossing sign is the letter sign (``+1`` for X, ``-1`` for a loop crossing)
times the product of the two strand directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .braid import BraidWord
from .errors import ClosedWord, OrientationMismatch

Number = int | Fraction


def _half(x: int) -> Number:
    return x // 2 if x % 2 == 0 else Fraction(x, 2)


# ---- statistics ------------------------------------------------------------


@dataclass(frozen=True)
class DiagramStats:
    """Cusp and crossing census of a front, plus strand wrap counts."""

    u: int = 0
    d: int = 0
    c: int = 0
    xp: int = 0
    xm: int = 0
    wp: int = 0
    wm: int = 0

    def __post_init__(self) -> None:
        for name in ("u", "d", "c", "xp", "xm", "wp", "wm"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.c != self.u + self.d:
            raise ValueError(f"c={self.c} but u+d={self.u + self.d}")

    def __add__(self, other: DiagramStats) -> DiagramStats:
        return DiagramStats(
            self.u + other.u,
            self.d + other.d,
            self.c + other.c,
            self.xp + other.xp,
            self.xm + other.xm,
            self.wp + other.wp,
            self.wm + other.wm,
        )

    @property
    def writhe(self) -> int:
        return self.xp - self.xm

    @property
    def reltb(self) -> Number:
        return _half(2 * self.writhe - self.c)

    @property
    def relrot(self) -> Number:
        return _half(self.d - self.u)

    @property
    def winding(self) -> int:
        return self.wp - self.wm

    def invariants(self) -> tuple[Number, Number]:
        return self.reltb, self.relrot

    def stabilize(self, sign: int, times: int = 1) -> DiagramStats:
        """St+ adds two down cusps, St- two up cusps (tb drops, rot moves by sign)."""
        if sign > 0:
            return replace(self, d=self.d + 2 * times, c=self.c + 2 * times)
        return replace(self, u=self.u + 2 * times, c=self.c + 2 * times)

    def mirrored(self) -> DiagramStats:
        """Swap up and down cusps (reverses the rotation number)."""
        return replace(self, u=self.d, d=self.u)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in ("u", "d", "c", "xp", "xm", "wp", "wm")}

    @classmethod
    def from_json(cls, obj: dict) -> DiagramStats:
        return cls(**{k: int(v) for k, v in obj.items()})


# ---- blocks ----------------------------------------------------------------

_TOKEN = re.compile(r"^(?:X(\d+)|S|Z|(Xg|Sg|Zg):(\d+),(\d+),(\d+))$")


@dataclass(frozen=True)
class Block:
    """One basic block. ``S`` and ``Z`` take their span from the word's strand count."""

    kind: str  # X, S, Z, Xg, Sg, Zg
    i: int = 0
    k: int = 1
    l: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("X", "S", "Z", "Xg", "Sg", "Zg"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.i < 0 or self.k < 1 or self.l < 0:
            raise ValueError(f"bad block parameters {self}")

    @classmethod
    def parse(cls, token: str) -> Block:
        mt = _TOKEN.match(token.strip())
        if not mt:
            raise ValueError(f"bad block token {token!r}")
        if mt.group(1) is not None:
            return cls("X", int(mt.group(1)))
        if mt.group(2):
            return cls(mt.group(2), int(mt.group(3)), int(mt.group(4)), int(mt.group(5)))
        return cls(token.strip())

    def token(self) -> str:
        if self.kind == "X":
            return f"X{self.i}"
        if self.kind in ("S", "Z"):
            return self.kind
        return f"{self.kind}:{self.i},{self.k},{self.l}"

    def general(self, n: int) -> tuple[str, int, int, int]:
        """(family, i, k, l) with family in X/S/Z and basic blocks unfolded."""
        if self.kind == "X":
            g = ("X", self.i, 1, 1)
        elif self.kind in ("S", "Z"):
            g = (self.kind, 0, 1, n - 1)
        else:
            g = (self.kind[0], self.i, self.k, self.l)
        fam, i, k, l = g
        if i + k + l > n or (fam == "X" and l < 1):
            raise OrientationMismatch(f"block {self.token()} does not fit on {n} strands")
        return g

    def is_basic(self) -> bool:
        return self.kind in ("X", "S", "Z")


X = lambda i: Block("X", i)  # noqa: E731
S = Block("S")
Z = Block("Z")


def block_permutation(b: Block, n: int) -> tuple[int, ...]:
    """perm[height before] = height after."""
    fam, i, k, l = b.general(n)
    perm = list(range(n))
    if fam in ("X", "S"):
        # lower group of k ends on top of the l group
        for j in range(k):
            perm[i + j] = i + l + j
        for j in range(l):
            perm[i + k + j] = i + j
    else:
        # upper group of k ends beneath the l group
        for j in range(l):
            perm[i + j] = i + k + j
        for j in range(k):
            perm[i + l + j] = i + j
    return tuple(perm)


def propagate(b: Block, orient: Sequence[int]) -> tuple[int, ...]:
    perm = block_permutation(b, len(orient))
    out = [0] * len(orient)
    for p, o in enumerate(orient):
        out[perm[p]] = o
    return tuple(out)


def _check_orient(orient: Sequence[int]) -> None:
    if not orient or any(o not in (1, -1) for o in orient):
        raise OrientationMismatch(f"orientation must be a nonempty list of +/-1, got {list(orient)}")


def block_stats(b: Block, orient: Sequence[int]) -> DiagramStats:
    _check_orient(orient)
    n = len(orient)
    fam, i, k, l = b.general(n)
    u = d = xp = xm = 0
    if fam == "X":
        movers, others, loop_sign = range(i, i + k), range(i + k, i + k + l), 1
    elif fam == "S":
        movers, others, loop_sign = range(i, i + k), range(i + k, i + k + l), -1
    else:
        movers, others, loop_sign = range(i + l, i + l + k), range(i, i + l), -1
    for a in movers:
        if fam == "S":
            u, d = (u + 2, d) if orient[a] > 0 else (u, d + 2)
        elif fam == "Z":
            u, d = (u, d + 2) if orient[a] > 0 else (u + 2, d)
        for o in others:
            if loop_sign * orient[a] * orient[o] > 0:
                xp += 1
            else:
                xm += 1
    return DiagramStats(u=u, d=d, c=u + d, xp=xp, xm=xm)


# ---- words -----------------------------------------------------------------


@dataclass(frozen=True)
class LegWord:
    n: int
    blocks: tuple[Block, ...] = ()
    orient: tuple[int, ...] = ()
    closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        orient = tuple(self.orient) if self.orient else (1,) * self.n
        object.__setattr__(self, "orient", orient)
        if self.n < 1:
            raise ValueError("a word needs at least one strand")
        _check_orient(orient)
        if len(orient) != self.n:
            raise OrientationMismatch(f"{len(orient)} orientations for {self.n} strands")
        end = orient
        for b in self.blocks:
            end = propagate(b, end)
        if self.closed and end != orient:
            raise OrientationMismatch("closing the word joins strands of opposite direction")

    @classmethod
    def parse(cls, n: int, tokens: Iterable[str], orient: Sequence[int] | None = None, closed: bool = False) -> LegWord:
        return cls(n, tuple(Block.parse(t) for t in tokens), tuple(orient or ()), closed)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "orient": list(self.orient),
            "closed": self.closed,
            "blocks": [b.token() for b in self.blocks],
        }

    @classmethod
    def from_json(cls, obj: dict) -> LegWord:
        return cls.parse(
            int(obj["n"]), obj.get("blocks", []), obj.get("orient"), bool(obj.get("closed", False))
        )

    def orientations(self) -> list[tuple[int, ...]]:
        """Orientation vector before each block, then the final one."""
        out = [self.orient]
        for b in self.blocks:
            out.append(propagate(b, out[-1]))
        return out

    def end_orient(self) -> tuple[int, ...]:
        return self.orientations()[-1]

    def __mul__(self, other: LegWord) -> LegWord:
        if self.closed or other.closed:
            raise ClosedWord("only open words concatenate")
        if self.n != other.n or self.end_orient() != other.orient:
            raise OrientationMismatch("boundary orientations do not match")
        return LegWord(self.n, self.blocks + other.blocks, self.orient)

    def rotated(self, steps: int = 1) -> LegWord:
        """Cyclic rotation of a closed word (moves leading blocks to the end)."""
        if not self.closed:
            raise ValueError("rotation is defined for closed words")
        if not self.blocks:
            return self
        steps %= len(self.blocks)
        orient = self.orientations()[steps]
        return LegWord(self.n, self.blocks[steps:] + self.blocks[:steps], orient, True)


def word_stats(w: LegWord) -> DiagramStats:
    total = DiagramStats(
        wp=sum(1 for o in w.orient if o > 0), wm=sum(1 for o in w.orient if o < 0)
    )
    for b, o in zip(w.blocks, w.orientations()):
        total = total + block_stats(b, o)
    return total


def word_invariants(w: LegWord) -> tuple[Number, Number]:
    return word_stats(w).invariants()


# ---- expansion to basic blocks ---------------------------------------------


def _expand(b: Block, n: int) -> list[Block]:
    fam, i, k, l = b.general(n)
    if b.is_basic():
        return [b]
    out: list[Block] = []
    if fam == "X":
        for j in range(l):
            out.extend(X(p) for p in range(i + k + j - 1, i + j - 1, -1))
    elif fam == "S":
        for j in range(k - 1, -1, -1):
            p = i + j  # this strand rises to p + l
            out.extend(X(q) for q in range(p - 1, -1, -1))
            out.append(S)
            out.extend(X(q) for q in range(n - 2, p + l - 1, -1))
    else:
        for j in range(k):
            p = i + j  # strand at p + l descends to p
            out.extend(X(q) for q in range(p + l, n - 1))
            out.append(Z)
            out.extend(X(q) for q in range(p))
    return out


def simplify(w: LegWord) -> LegWord:
    """Rewrite generalized blocks over X(i), S, Z.

    The expansion keeps the cusp census, the writhe and the permutation;
    it adds cancelling crossing pairs, so xp and xm individually can grow.
    """
    blocks: list[Block] = []
    for b in w.blocks:
        blocks.extend(_expand(b, w.n))
    return LegWord(w.n, tuple(blocks), w.orient, w.closed)


def underlying_braid(w: LegWord) -> BraidWord:
    """Smooth braid: X(i) -> sigma_{i+1}; S and Z -> sigma_{n-1}^-1 ... sigma_1^-1."""
    loop = [-j for j in range(w.n - 1, 0, -1)]
    out: list[int] = []
    for b in simplify(w).blocks:
        out.extend([b.i + 1] if b.kind == "X" else loop)
    return BraidWord.from_ints(w.n, out)


# ---- reimbedding prefixes --------------------------------------------------


def _pull_back(b: Block, orient: Sequence[int]) -> tuple[int, ...]:
    perm = block_permutation(b, len(orient))
    return tuple(orient[perm[p]] for p in range(len(orient)))


def prefix_zeta_sigma(w: LegWord, z: int, s: int) -> LegWord:
    """Prepend ``Z^z S^s``; the new left orientation is pulled back through the prefix."""
    if w.closed:
        raise ClosedWord("prefixes apply to open words")
    if z < 0 or s < 0:
        raise ValueError("z and s must be natural numbers")
    prefix = (Z,) * z + (S,) * s
    orient = w.orient
    for b in reversed(prefix):
        orient = _pull_back(b, orient)
    return LegWord(w.n, prefix + w.blocks, orient)


def factor_zeta_sigma(w: LegWord) -> tuple[int, int, LegWord]:
    if w.closed:
        raise ClosedWord("factorization applies to open words")
    bl = w.blocks
    z = 0
    while z < len(bl) and bl[z] == Z:
        z += 1
    s = 0
    while z + s < len(bl) and bl[z + s] == S:
        s += 1
    orient = w.orientations()[z + s]
    return z, s, LegWord(w.n, bl[z + s :], orient)


# ---- oriented letters and Whitehead patterns --------------------------------

ORIENTED_LETTERS = ("Z+", "Z-", "S+", "S-")


def oriented_letters_word(letters: Sequence[str]) -> LegWord:
    """Open 2-strand anti-parallel word for letters like ``Z+``, ``S-``.

    The sign of a letter is the direction of the bottom strand where it
    sits; consecutive signs must alternate.
    """
    if not letters:
        return LegWord(2, (), (1, -1))
    blocks = []
    for a, b in zip(letters, letters[1:]):
        if a[1] == b[1]:
            raise OrientationMismatch(f"signs must alternate: {a} then {b}")
    for a in letters:
        if a not in ORIENTED_LETTERS:
            raise ValueError(f"unknown oriented letter {a!r}")
        blocks.append(S if a[0] == "S" else Z)
    first = 1 if letters[0][1] == "+" else -1
    return LegWord(2, tuple(blocks), (first, -first))


# Clasp censuses for a box whose bottom strand enters with direction +1.
# They are the unique censuses with two cusps and two crossings that make
# the assembled maximal representatives hit the four pinned invariant pairs.
WHITEHEAD_CLASP = {
    0: DiagramStats(u=1, d=1, c=2, xp=2, xm=0),
    1: DiagramStats(u=0, d=2, c=2, xp=0, xm=2),
}


def clasp_stats(m: int, bottom: int = 1) -> DiagramStats:
    st = WHITEHEAD_CLASP[m % 2]
    return st if bottom > 0 else st.mirrored()


def whitehead_box(m: int, letters: Sequence[str] | None = None, bottom: int = 1) -> LegWord:
    """The twist box of a Whitehead pattern with ``m`` half twists.

    For ``m >= 0`` the box is ``m`` copies of X(0). For ``m < 0`` it holds
    ``|m|`` loop letters (``S``/``Z``, or signed ``S+`` style letters);
    unsigned letters take alternating signs starting from ``bottom``.
    """
    if m >= 0:
        return LegWord(2, (X(0),) * m, (bottom, -bottom))
    if letters is None:
        letters = ["S"] * (-m)
    if len(letters) != -m:
        raise ValueError(f"need {-m} letters, got {len(letters)}")
    signed = []
    s = bottom
    for a in letters:
        if len(a) == 1:
            signed.append(a + ("+" if s > 0 else "-"))
        else:
            signed.append(a)
        s = -s
    return oriented_letters_word(signed)


def whitehead_pattern_stats(m: int, letters: Sequence[str] | None = None, bottom: int = 1) -> DiagramStats:
    """Census of an assembled maximal Whitehead representative (box plus clasp).

    The clasp orientation follows the bottom strand at the box's left end.
    """
    box = whitehead_box(m, letters, bottom)
    b = box.orient[0]
    st = word_stats(box)
    # the pattern is one closed component with winding zero
    return replace(st + clasp_stats(m, b), wp=1, wm=1)


def whitehead_pattern_invariants(
    m: int, letters: Sequence[str] | None = None, bottom: int = 1
) -> tuple[Number, Number]:
    return whitehead_pattern_stats(m, letters, bottom).invariants()
