"""Classical invariants of Legendrian satellites and pattern families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .braid import BraidWord, closure_components, free_reduce, full_twist, writhe
from .errors import (
    EvenM,
    HypothesisNotDeclared,
    MultiComponentCompanion,
    MultiComponentPattern,
    NonPositiveBraid,
    NotCoprime,
)
from .legtangle import DiagramStats

if TYPE_CHECKING:
    from .atlas import KnotProfile


# ---- pattern families ------------------------------------------------------


@dataclass(frozen=True)
class BraidPattern:
    word: BraidWord
    family = "braid"

    def __post_init__(self) -> None:
        if closure_components(self.word) != 1:
            raise MultiComponentPattern("the braid closure must be a knot")

    @property
    def winding(self) -> int:
        return self.word.strands


@dataclass(frozen=True)
class TwoBraid:
    m: int
    family = "two_braid"

    def __post_init__(self) -> None:
        if self.m % 2 == 0:
            raise EvenM(f"a 2-braid pattern needs odd m, got {self.m}")

    @property
    def winding(self) -> int:
        return 2


@dataclass(frozen=True)
class Cable:
    p: int
    q: int
    family = "cable"

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if q == 0:
            raise ValueError("cable needs q != 0")
        if q < 0:
            p, q = -p, -q
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)
        if math.gcd(p, q) != 1:
            raise NotCoprime(f"gcd({p}, {q}) != 1")

    @property
    def winding(self) -> int:
        return self.q


@dataclass(frozen=True)
class Whitehead:
    m: int
    family = "whitehead"

    @property
    def winding(self) -> int:
        return 0


PatternSpec = Union[BraidPattern, TwoBraid, Cable, Whitehead]


def pattern_from_json(obj: dict) -> PatternSpec:
    fam = obj.get("family")
    if fam == "whitehead":
        return Whitehead(int(obj["m"]))
    if fam == "two_braid":
        return TwoBraid(int(obj["m"]))
    if fam == "cable":
        return Cable(int(obj["p"]), int(obj["q"]))
    if fam == "braid":
        return BraidPattern(BraidWord.from_json(obj))
    raise ValueError(f"unknown pattern family {fam!r}")


def pattern_to_json(spec: PatternSpec) -> dict:
    if isinstance(spec, BraidPattern):
        return {"family": "braid", **spec.word.to_json()}
    if isinstance(spec, Cable):
        return {"family": "cable", "p": spec.p, "q": spec.q}
    return {"family": spec.family, "m": spec.m}


def twist_pattern(spec: PatternSpec, k: int) -> PatternSpec:
    """Act by the k-th power of the full twist."""
    if isinstance(spec, BraidPattern):
        n = spec.word.strands
        return BraidPattern(free_reduce(spec.word * full_twist(n, k)))
    if isinstance(spec, TwoBraid):
        return TwoBraid(spec.m + 2 * k)
    if isinstance(spec, Whitehead):
        return Whitehead(spec.m + 2 * k)
    return Cable(spec.p + k * spec.q, spec.q)


def pattern_max_reltb(spec: PatternSpec) -> int:
    if isinstance(spec, BraidPattern):
        if not spec.word.is_positive():
            raise NonPositiveBraid("maximal reltb is only known for positive braids")
        return len(spec.word)
    if isinstance(spec, TwoBraid):
        return spec.m if spec.m > 0 else 2 * spec.m
    if isinstance(spec, Cable):
        p, q = spec.p, spec.q
        if q == 1:
            return 0  # isotopic to the core
        return p * q - p if p > 0 else p * q
    m = spec.m
    if m >= 0:
        return 1 - m if m % 2 == 0 else -m - 3
    return -3 if m % 2 else 1


def maximal_relrots(spec: PatternSpec) -> list[int]:
    """Rotation numbers of the classes realizing the maximal reltb."""
    if isinstance(spec, BraidPattern):
        pattern_max_reltb(spec)
        return [0]
    if isinstance(spec, TwoBraid):
        m = spec.m
        return [0] if m > 0 else list(range(m, -m + 1, 2))
    if isinstance(spec, Cable):
        p, q = spec.p, spec.q
        if p > 0 or q == 1:
            return [0]
        n = (-p) // q  # -n-1 < p/q < -n
        vals = {s * (p + q * (n + k)) for k in range(-n, n + 1, 2) for s in (1, -1)}
        return sorted(vals)
    m = spec.m
    return [-1, 1] if m > 0 and m % 2 else [0]


# ---- invariants ------------------------------------------------------------


@dataclass(frozen=True)
class PatternInvariants:
    winding: int
    reltb: int
    relrot: int


@dataclass(frozen=True)
class CompanionInvariants:
    tb: int
    rot: int


def satellite_classical(pat: PatternInvariants, comp: CompanionInvariants) -> tuple[int, int]:
    n = pat.winding
    return n * n * comp.tb + pat.reltb, n * comp.rot + pat.relrot


def compose_stats(pat: DiagramStats, comp: DiagramStats) -> DiagramStats:
    """Census of the satellite front built from a pattern and a one-component companion."""
    if comp.wp + comp.wm > 1:
        raise MultiComponentCompanion("companion census must describe a single closed component")
    a, b = pat.wp, pat.wm
    pairs_same = a * (a - 1) // 2 + b * (b - 1) // 2
    u = a * comp.u + b * comp.d + pat.u
    d = a * comp.d + b * comp.u + pat.d
    xp = a * b * comp.c + (a * a + b * b) * comp.xp + 2 * a * b * comp.xm + pat.xp
    xm = pairs_same * comp.c + 2 * a * b * comp.xp + (a * a + b * b) * comp.xm + pat.xm
    return DiagramStats(u=u, d=d, c=u + d, xp=xp, xm=xm)


def self_linking(tb: int, rot: int) -> int:
    return tb - rot


def transverse_satellite_sl(n: int, tb: int, rot: int, relsl: int) -> int:
    """``(n^2 tb - n rot) - relsl``, evaluated as stated (see the decisions ledger on its sign)."""
    return (n * n * tb - n * rot) - relsl


def _require_thick(profile: KnotProfile) -> None:
    if not profile.flags.uniformly_thick:
        raise HypothesisNotDeclared("profile is not declared uniformly thick")


def max_tb_satellite(profile: KnotProfile, spec: PatternSpec) -> int:
    _require_thick(profile)
    n = spec.winding
    t = profile.t_bar
    return n * n * t + pattern_max_reltb(twist_pattern(spec, -t))
