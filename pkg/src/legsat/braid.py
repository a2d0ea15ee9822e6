"""Artin braid words and small word problems.

Letters are stored as signed integers: ``+i`` is sigma_i and ``-i`` its
inverse, with ``1 <= i <= n-1``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import BudgetExhausted, NonPositiveInput, StrandMismatch

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class BraidLetter:
    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, x: int) -> BraidLetter:
        if x == 0:
            raise ValueError("0 is not a braid letter")
        return cls(abs(x), 1 if x > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, -self.sign)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a.index >= self.strands:
                raise ValueError(f"sigma_{a.index} does not exist on {self.strands} strands")

    @classmethod
    def from_ints(cls, n: int, word: Iterable[int]) -> BraidWord:
        return cls(n, tuple(BraidLetter.from_int(x) for x in word))

    def ints(self) -> tuple[int, ...]:
        return tuple(a.to_int() for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise StrandMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(a.inverse() for a in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(a.sign > 0 for a in self.letters)

    def to_json(self) -> dict:
        return {"n": self.strands, "word": list(self.ints())}

    @classmethod
    def from_json(cls, obj: dict) -> BraidWord:
        return cls.from_ints(int(obj["n"]), obj.get("word", []))

    def __str__(self) -> str:
        if not self.letters:
            return f"e (B{self.strands})"
        return " ".join(f"s{a.index}" + ("" if a.sign > 0 else "^-1") for a in self.letters)


def writhe(w: BraidWord) -> int:
    return sum(a.sign for a in w.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Map start position -> end position (0-indexed; sigma_i swaps i-1 and i)."""
    # pos_of[strand] tracks where each starting strand currently sits
    at = list(range(w.strands))  # at[position] = starting strand
    for a in w.letters:
        i = a.index
        at[i - 1], at[i] = at[i], at[i - 1]
    out = [0] * w.strands
    for pos, strand in enumerate(at):
        out[strand] = pos
    return tuple(out)


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * w.strands
    cycles = 0
    for s in range(w.strands):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return cycles


def full_twist(n: int, k: int = 1) -> BraidWord:
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = 1 if k >= 0 else -1
    block = [sign * i for i in range(1, n)] * n
    if sign < 0:
        block = block[::-1]
    return BraidWord.from_ints(n, block * abs(k))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.ints():
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord.from_ints(w.strands, out)


# ---- positive monoid -------------------------------------------------------


def _artin_moves(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Both Artin relations, applied anywhere, on positive words."""
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if abs(a - b) >= 2:
            yield word[:i] + (b, a) + word[i + 2 :]
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if a == c and abs(a - b) == 1:
            yield word[:i] + (b, a, b) + word[i + 3 :]


def _rotations(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if len(word) > 1:
        yield word[1:] + word[:1]
        yield word[-1:] + word[:-1]


def _require_positive(*ws: BraidWord) -> None:
    for w in ws:
        if not w.is_positive():
            raise NonPositiveInput(f"word {w.ints()} has negative letters")


def positive_monoid_class(
    w: BraidWord, cyclic: bool = False, budget: int = DEFAULT_BUDGET
) -> frozenset[tuple[int, ...]]:
    """All positive words reachable from ``w`` by Artin moves (and rotations if ``cyclic``)."""
    _require_positive(w)
    start = w.ints()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        nbrs = list(_artin_moves(cur))
        if cyclic:
            nbrs.extend(_rotations(cur))
        for nxt in nbrs:
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExhausted(f"more than {budget} words reachable")
                queue.append(nxt)
    return frozenset(seen)


def positive_monoid_equivalent(w1: BraidWord, w2: BraidWord, budget: int = DEFAULT_BUDGET) -> bool:
    _require_positive(w1, w2)
    if w1.strands != w2.strands:
        raise StrandMismatch(f"{w1.strands} vs {w2.strands} strands")
    if len(w1) != len(w2):
        return False
    return w2.ints() in positive_monoid_class(w1, budget=budget)


# ---- general word problem (desk scale) -------------------------------------


class WordProblemResult(str, enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    BUDGET_EXHAUSTED = "budget-exhausted"


def burau_matrix(w: BraidWord, t: Fraction = Fraction(2)) -> tuple[tuple[Fraction, ...], ...]:
    """Unreduced Burau representation evaluated at a rational ``t``, exactly."""
    n = w.strands
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for a in w.letters:
        i = a.index - 1
        if a.sign > 0:
            blk = ((1 - t, t), (Fraction(1), Fraction(0)))
        else:
            blk = ((Fraction(0), Fraction(1)), (1 / t, 1 - 1 / t))
        # right-multiply columns i, i+1 by blk
        for row in m:
            x, y = row[i], row[i + 1]
            row[i] = x * blk[0][0] + y * blk[1][0]
            row[i + 1] = x * blk[0][1] + y * blk[1][1]
    return tuple(tuple(r) for r in m)


def _group_moves(word: tuple[int, ...], n: int, max_len: int) -> Iterator[tuple[int, ...]]:
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a == -b:
            yield word[:i] + word[i + 2 :]
        elif abs(abs(a) - abs(b)) >= 2:
            yield word[:i] + (b, a) + word[i + 2 :]
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            yield word[:i] + (b, a, b) + word[i + 3 :]
    if len(word) + 2 <= max_len:
        for i in range(len(word) + 1):
            for g in range(1, n):
                for s in (g, -g):
                    yield word[:i] + (s, -s) + word[i:]


def braid_group_equal(
    w1: BraidWord, w2: BraidWord, slack: int = 4, budget: int = 200_000
) -> WordProblemResult:
    """Three-valued equality test in B_n.

    ``distinct`` is certified by a differing permutation, writhe or Burau
    image; ``equal`` by reducing ``w1 w2^-1`` to the empty word with moves
    that never exceed ``len + slack`` letters.
    """
    if w1.strands != w2.strands:
        raise StrandMismatch(f"{w1.strands} vs {w2.strands} strands")
    if permutation(w1) != permutation(w2) or writhe(w1) != writhe(w2):
        return WordProblemResult.DISTINCT
    if burau_matrix(w1) != burau_matrix(w2):
        return WordProblemResult.DISTINCT
    start = free_reduce(w1 * w2.inverse()).ints()
    max_len = len(start) + slack
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if not cur:
            return WordProblemResult.EQUAL
        for nxt in _group_moves(cur, w1.strands, max_len):
            if nxt not in seen:
                if len(seen) >= budget:
                    return WordProblemResult.BUDGET_EXHAUSTED
                seen.add(nxt)
                queue.append(nxt)
    return WordProblemResult.BUDGET_EXHAUSTED
