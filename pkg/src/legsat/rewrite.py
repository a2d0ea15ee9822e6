"""Breadth-first closure of words under bidirectional rewrite rules.

Words are tuples of letter strings (``"Z+"``, ``"S"``, ``"X0"`` ...). The
oracles here enumerate all words of a family and split them into classes,
giving independent counts to compare with the closed forms in ``atlas``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .braid import BraidWord, positive_monoid_class
from .errors import BudgetExhausted, NonPositiveInput

Word = tuple[str, ...]
DEFAULT_BUDGET = 10**6

_RANK = {"Z+": 0, "Z-": 1, "Z": 2, "S+": 3, "S-": 4, "S": 5}
_LETTER = re.compile(r"X\d+|[ZS][+-]?")


def letter_rank(a: str) -> tuple[int, int]:
    if a in _RANK:
        return (_RANK[a], 0)
    if a.startswith("X"):
        return (10, int(a[1:]))
    raise ValueError(f"unknown letter {a!r}")


def word_key(w: Word) -> tuple:
    return tuple(letter_rank(a) for a in w)


def format_word(w: Word) -> str:
    return "".join(w)


def parse_word(s: str) -> Word:
    s = s.replace(" ", "")
    letters = _LETTER.findall(s)
    if "".join(letters) != s:
        raise ValueError(f"cannot parse word {s!r}")
    return tuple(letters)


def flip(a: str) -> str:
    if a.endswith("+"):
        return a[:-1] + "-"
    if a.endswith("-"):
        return a[:-1] + "+"
    return a


@dataclass(frozen=True)
class RelationSet:
    rules: tuple[tuple[Word, Word], ...] = ()
    cyclic: bool = False
    sign_flip_on_wrap: bool = False
    name: str = ""

    def __post_init__(self) -> None:
        for lhs, rhs in self.rules:
            if len(lhs) != len(rhs):
                raise ValueError(f"rule {lhs} <-> {rhs} changes length")

    def with_rules(self, extra: Iterable[tuple[Word, Word]], name: str | None = None) -> RelationSet:
        return RelationSet(self.rules + tuple(extra), self.cyclic, self.sign_flip_on_wrap, name or self.name)

    def neighbours(self, w: Word) -> Iterator[Word]:
        for lhs, rhs in self.rules:
            for a, b in ((lhs, rhs), (rhs, lhs)):
                L = len(a)
                for i in range(len(w) - L + 1):
                    if w[i : i + L] == a:
                        yield w[:i] + b + w[i + L :]
        if self.cyclic and w:
            f = flip if self.sign_flip_on_wrap else (lambda x: x)
            yield w[1:] + (f(w[0]),)
            yield (f(w[-1]),) + w[:-1]


@dataclass(frozen=True)
class WordClass:
    canonical: Word
    size: int
    tag: tuple | int | None = None
    members: frozenset = field(default=frozenset(), compare=False, repr=False)

    @property
    def canonical_str(self) -> str:
        return format_word(self.canonical)

    def to_json(self) -> dict:
        tag = list(self.tag) if isinstance(self.tag, tuple) else self.tag
        return {"canonical": self.canonical_str, "size": self.size, "tag": tag}


def closure(word: Word, relations: RelationSet, budget: int = DEFAULT_BUDGET) -> frozenset[Word]:
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for nxt in relations.neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExhausted(f"class exceeds budget of {budget} words")
                queue.append(nxt)
    return frozenset(seen)


def class_of(
    word: Word,
    relations: RelationSet,
    budget: int = DEFAULT_BUDGET,
    tag: Callable[[Word], object] | None = None,
) -> WordClass:
    members = closure(word, relations, budget)
    canon = min(members, key=word_key)
    return WordClass(canon, len(members), tag(canon) if tag else None, members)


def partition(
    words: Iterable[Word],
    relations: RelationSet,
    budget: int = DEFAULT_BUDGET,
    tag: Callable[[Word], object] | None = None,
) -> list[WordClass]:
    """Split ``words`` into classes; the result is sorted by canonical word."""
    assigned: set[Word] = set()
    classes = []
    for w in words:
        if w in assigned:
            continue
        cls = class_of(w, relations, budget, tag)
        assigned |= cls.members
        classes.append(cls)
    classes.sort(key=lambda c: word_key(c.canonical))
    return classes


# ---- Whitehead patterns ----------------------------------------------------


def _whitehead_rules() -> tuple[tuple[Word, Word], ...]:
    rules = []
    for s, t in (("+", "-"), ("-", "+")):
        rules.append((("Z" + s, "S" + t, "S" + s), ("S" + s, "S" + t, "Z" + s)))
        rules.append((("Z" + s, "Z" + t, "S" + s), ("S" + s, "Z" + t, "Z" + s)))
    return tuple(rules)


def whitehead_relations(m: int, pos_stab: bool = False, neg_stab: bool = False) -> RelationSet:
    rel = RelationSet(_whitehead_rules(), cyclic=True, sign_flip_on_wrap=m % 2 == 1, name="whitehead")
    extra = []
    if pos_stab:
        extra.append((("Z+",), ("S+",)))
    if neg_stab:
        extra.append((("Z-",), ("S-",)))
    return rel.with_rules(extra) if extra else rel


def alternating_words(length: int) -> Iterator[Word]:
    for start in (0, 1):
        signs = ["+-"[(start + j) % 2] for j in range(length)]
        for kinds in itertools.product("ZS", repeat=length):
            yield tuple(k + s for k, s in zip(kinds, signs))


def whitehead_tag(m: int) -> Callable[[Word], object]:
    if m % 2 == 0:
        return lambda w: (w.count("Z+"), w.count("Z-"))
    return lambda w: sum(1 for a in w if a[0] == "Z")


def whitehead_classes(m: int, budget: int = DEFAULT_BUDGET) -> list[WordClass]:
    if m >= 0:
        raise ValueError("Whitehead oracle needs m < 0")
    return partition(alternating_words(-m), whitehead_relations(m), budget, whitehead_tag(m))


def stabilized_classes(m: int, pos_stab: int, neg_stab: int, budget: int = DEFAULT_BUDGET) -> list[WordClass]:
    """Classes after stabilizing: Z+ <-> S+ with positive, Z- <-> S- with negative ones."""
    if m >= 0:
        raise ValueError("Whitehead oracle needs m < 0")
    if pos_stab < 0 or neg_stab < 0 or pos_stab + neg_stab < 1:
        raise ValueError("need at least one stabilization")
    rel = whitehead_relations(m, pos_stab > 0, neg_stab > 0)
    tag: Callable[[Word], object] | None = None
    if m % 2 == 0 and not (pos_stab and neg_stab):
        # the surviving label is the count of the sign that was not stabilized
        key = "Z-" if pos_stab else "Z+"
        tag = lambda w: w.count(key)  # noqa: E731
    return partition(alternating_words(-m), rel, budget, tag)


# ---- 2-braid patterns ------------------------------------------------------

TWO_BRAID_RELATIONS = RelationSet(
    ((("Z", "S", "S"), ("S", "S", "Z")), (("Z", "Z", "S"), ("S", "Z", "Z"))),
    cyclic=True,
    name="two-braid",
)


def two_braid_classes(m: int, budget: int = DEFAULT_BUDGET) -> list[WordClass]:
    if m >= 0 or m % 2 == 0:
        raise ValueError("2-braid oracle needs m < 0 odd")
    words = (tuple(w) for w in itertools.product("ZS", repeat=-m))
    return partition(words, TWO_BRAID_RELATIONS, budget, lambda w: w.count("Z"))


def two_braid_invariants(m: int, z: int) -> tuple[int, int]:
    """(reltb, relrot) of the class with ``z`` Z-letters."""
    return 2 * m, 2 * z + m


# ---- positive braids -------------------------------------------------------


def positive_relations(n: int, closed: bool) -> RelationSet:
    rules = []
    for i in range(n - 1):
        for j in range(n - 1):
            if abs(i - j) >= 2 and i < j:
                rules.append(((f"X{i}", f"X{j}"), (f"X{j}", f"X{i}")))
        if i + 1 < n - 1:
            a, b = f"X{i}", f"X{i + 1}"
            rules.append(((a, b, a), (b, a, b)))
    return RelationSet(tuple(rules), cyclic=closed, name="positive")


def braid_to_xword(w: BraidWord) -> Word:
    return tuple(f"X{a.index - 1}" for a in w.letters)


def positive_leg_classes(w: BraidWord, closed: bool = False, budget: int = DEFAULT_BUDGET) -> int:
    """Number of maximal Legendrian classes realizing the positive braid ``w``.

    Candidates are all X-words whose braid is positive-monoid equivalent to
    ``w`` (or reachable with rotations when closed); they are then split
    under the X-word Artin moves.
    """
    if not w.is_positive():
        raise NonPositiveInput(f"word {w.ints()} has negative letters")
    cands = positive_monoid_class(w, cyclic=closed, budget=budget)
    xwords = [braid_to_xword(BraidWord.from_ints(w.strands, c)) for c in sorted(cands)]
    return len(partition(xwords, positive_relations(w.strands, closed), budget))


def oracle_to_json(m: int, classes: Sequence[WordClass]) -> dict:
    return {"m": m, "classes": [c.to_json() for c in classes]}
