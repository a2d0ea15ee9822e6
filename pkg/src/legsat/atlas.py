"""Knot profiles, pattern class tables, the counting engine and mountain ranges.

Coordinates are ``(t, r)`` = (Thurston-Bennequin, rotation). A point lies
``A`` rows below a peak ``(P, rho)`` when ``t = P - A``; it is reached by
``A1`` positive and ``A2`` negative stabilizations when
``A1 + A2 = A`` and ``A1 - A2 = r - rho``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Protocol, Sequence

from .braid import BraidWord, writhe
from .errors import (
    EvenM,
    HypothesisNotDeclared,
    InconsistentTable,
    ParityViolation,
    UnsupportedFamily,
)
from .satellite import (
    BraidPattern,
    Cable,
    PatternSpec,
    TwoBraid,
    Whitehead,
    maximal_relrots,
    pattern_max_reltb,
    twist_pattern,
)

DEFAULT_DEPTH = 5  # rows below the top one, so six rows in all


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def stab_counts(peak: tuple[int, int], t: int, r: int) -> tuple[int, int] | None:
    """(A1, A2) reaching ``(t, r)`` from ``peak``, or None when unreachable."""
    A = peak[0] - t
    diff = r - peak[1]
    if A < 0 or abs(diff) > A or (A - diff) % 2:
        return None
    return (A + diff) // 2, (A - diff) // 2


# ---- profiles --------------------------------------------------------------

FLAG_NAMES = (
    "legendrian_simple",
    "uniformly_thick",
    "self_mirror",
    "no_unoriented_symmetry",
    "oriented_symmetry",
)


@dataclass(frozen=True)
class ProfileFlags:
    legendrian_simple: bool = False
    uniformly_thick: bool = False
    self_mirror: bool = False
    no_unoriented_symmetry: bool = False
    oriented_symmetry: bool = False

    def missing(self, names: Iterable[str]) -> list[str]:
        return [n for n in names if not getattr(self, n)]


@dataclass(frozen=True)
class KnotProfile:
    name: str
    t_bar: int
    peak_rots: tuple[int, ...]
    flags: ProfileFlags = field(default_factory=ProfileFlags)

    def __post_init__(self) -> None:
        rots = tuple(self.peak_rots)
        object.__setattr__(self, "peak_rots", rots)
        if not rots:
            raise ValueError("a profile needs at least one peak")
        if any(b <= a for a, b in zip(rots, rots[1:])):
            raise ValueError("peak rotations must be strictly increasing")
        if self.flags.self_mirror and tuple(-r for r in reversed(rots)) != rots:
            raise ValueError("a self-mirror profile needs rotations symmetric about 0")

    @property
    def k(self) -> int:
        return len(self.peak_rots) - 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "t_bar": self.t_bar,
            "peak_rots": list(self.peak_rots),
            "flags": {n: getattr(self.flags, n) for n in FLAG_NAMES},
        }

    @classmethod
    def from_json(cls, obj: dict) -> KnotProfile:
        flags = obj.get("flags", {})
        unknown = set(flags) - set(FLAG_NAMES)
        if unknown:
            raise ValueError(f"unknown profile flags {sorted(unknown)}")
        return cls(
            str(obj.get("name", "")),
            int(obj["t_bar"]),
            tuple(int(r) for r in obj["peak_rots"]),
            ProfileFlags(**{n: bool(v) for n, v in flags.items()}),
        )


def load_profile(path: str | Path) -> KnotProfile:
    return KnotProfile.from_json(json.loads(Path(path).read_text()))


def bundled_profile(name: str = "t13_3") -> KnotProfile:
    stem = name[:-5] if name.endswith(".json") else name
    text = resources.files("legsat").joinpath("data", f"{stem}.json").read_text()
    return KnotProfile.from_json(json.loads(text))


def _require(profile: KnotProfile, names: Sequence[str]) -> None:
    missing = profile.flags.missing(names)
    if missing:
        raise HypothesisNotDeclared(f"profile {profile.name!r} does not declare: {', '.join(missing)}")


BASE_FLAGS = ("legendrian_simple", "uniformly_thick", "no_unoriented_symmetry")
WINDING_ZERO_FLAGS = BASE_FLAGS + ("self_mirror", "oriented_symmetry")


# ---- valleys ---------------------------------------------------------------


@dataclass(frozen=True)
class ValleyData:
    depths: tuple[int, ...]
    centers: tuple[int, ...]  # rotation midway between the two peaks
    histogram: dict[int, int]  # depth -> number of valleys at negative rotation
    j: int
    k: int

    def n(self, d: int) -> int:
        return self.histogram.get(d, 0)


def valleys(profile: KnotProfile) -> ValleyData:
    rots = profile.peak_rots
    depths, centers = [], []
    for a, b in zip(rots, rots[1:]):
        if (b - a) % 2:
            raise ParityViolation(f"peaks at rotation {a} and {b} differ by an odd amount")
        depths.append((b - a) // 2)
        centers.append((a + b) // 2)
    hist: dict[int, int] = {}
    for d, c in zip(depths, centers):
        if c < 0:
            hist[d] = hist.get(d, 0) + 1
    return ValleyData(tuple(depths), tuple(centers), hist, max(depths, default=0), len(depths))


# ---- class tables ----------------------------------------------------------


class ClassTable(Protocol):
    def count(self, t: int, r: int) -> int: ...

    def sigma_image(self, d: int, t: int, r: int) -> int: ...

    def zeta_image(self, d: int, t: int, r: int) -> int: ...

    def f_quotient(self, t: int, r: int) -> int: ...


@dataclass(frozen=True)
class WhiteheadTable:
    """Classes of the Whitehead pattern with ``m`` half twists, by (reltb, relrot).

    ``sigma_image(d, ...)`` is the size of the image of the family member
    ``m + 2d`` under the d-fold reimbedding. Images are injective while
    ``m + 2d <= 0`` (``d <= l``). Past that they collapse to one class,
    present exactly when ``collapse_depth`` is at least ``d``
    (``rule="depth"``). ``rule="cone"`` instead asks only that the source
    family be nonempty there; the two rules differ for ``m < 0`` and only
    the first reproduces the tabulated ranges (see the decisions ledger).
    """

    m: int
    rule: str = "depth"

    def __post_init__(self) -> None:
        if self.rule not in ("depth", "cone"):
            raise ValueError("rule must be 'depth' or 'cone'")

    @property
    def l(self) -> int:
        return (-self.m) // 2

    def peaks(self) -> list[tuple[int, int]]:
        m = self.m
        if m >= 0:
            return [(1 - m, 0)] if m % 2 == 0 else [(-m - 3, -1), (-m - 3, 1)]
        return [(-3, 0)] if m % 2 else [(1, 0)]

    def count(self, t: int, r: int) -> int:
        m = self.m
        reach = [stab_counts(p, t, r) for p in self.peaks()]
        reach = [x for x in reach if x is not None]
        if not reach:
            return 0
        a1, a2 = reach[0]
        at_peak = a1 == 0 and a2 == 0
        if m >= 0:
            if m % 2 == 0 and at_peak:
                return 2
            return 1
        if m % 2:
            return -m + 1 if at_peak else 1
        h = -m // 2 + 1
        if at_peak:
            return h * h
        if a1 == 0 or a2 == 0:
            return h
        return 1

    def depth_below_maximum(self, t: int, r: int) -> int:
        """Largest min(A1, A2) over maximal classes reaching (t, r); -1 if none."""
        best = -1
        for p in self.peaks():
            x = stab_counts(p, t, r)
            if x is not None:
                best = max(best, min(x))
        return best

    def collapse_depth(self, t: int, r: int) -> int:
        """Depth that decides whether a collapsed image reaches (t, r); -1 if unreachable.

        Equal to ``depth_below_maximum`` except for odd ``m < 0``, where it is
        measured from the points (-2, +-1) one step above the peak. That is
        the reading which reproduces the odd mountain-range figures.
        """
        if self.depth_below_maximum(t, r) < 0:
            return -1
        if self.m < 0 and self.m % 2:
            return max(min(x) for x in (stab_counts(p, t, r) for p in ((-2, -1), (-2, 1))) if x)
        return self.depth_below_maximum(t, r)

    def sigma_image(self, d: int, t: int, r: int) -> int:
        src = WhiteheadTable(self.m + 2 * d, self.rule).count(t, r)
        if d <= self.l:
            return src
        if self.rule == "cone":
            return 1 if src else 0
        return 1 if self.collapse_depth(t, r) >= d else 0

    def zeta_image(self, d: int, t: int, r: int) -> int:
        return self.sigma_image(d, t, r)

    def f_quotient(self, t: int, r: int) -> int:
        c = self.count(t, r)
        return _ceil_div(c, 2) if r == 0 else c


@dataclass(frozen=True)
class ConeTable:
    """A Legendrian simple pattern family: count 1 inside the union of the peak cones.

    ``peaks(d)`` lists the maximal classes of the member twisted ``d`` more times.
    """

    spec: PatternSpec

    def peaks(self, d: int = 0) -> list[tuple[int, int]]:
        s = twist_pattern(self.spec, d) if d else self.spec
        top = pattern_max_reltb(s)
        return [(top, rho) for rho in maximal_relrots(s)]

    def _count(self, d: int, t: int, r: int) -> int:
        return int(any(stab_counts(p, t, r) is not None for p in self.peaks(d)))

    def count(self, t: int, r: int) -> int:
        return self._count(0, t, r)

    def sigma_image(self, d: int, t: int, r: int) -> int:
        return self._count(d, t, r)

    def zeta_image(self, d: int, t: int, r: int) -> int:
        return self._count(d, t, r)

    def f_quotient(self, t: int, r: int) -> int:
        return self.count(t, r)


def pattern_table(spec: PatternSpec, rule: str = "depth") -> ClassTable:
    if isinstance(spec, Whitehead):
        return WhiteheadTable(spec.m, rule)
    if isinstance(spec, (TwoBraid, Cable)):
        return ConeTable(spec)
    raise UnsupportedFamily("no class table is known for general braid patterns")


# ---- counting engine -------------------------------------------------------


def count_general(profile: KnotProfile, table: ClassTable, winding: int, t: int, r: int) -> int:
    """Number of Legendrian satellites at (t, r).

    ``table`` describes the pattern already twisted by ``-t_bar``; its
    ``sigma_image(d, ...)`` refers to the member twisted ``d`` times more.
    """
    v = valleys(profile)
    k = v.k
    if winding != 0:
        _require(profile, BASE_FLAGS)
        n, tb = winding, profile.t_bar
        total = sum(table.count(t - n * n * tb, r - n * ri) for ri in profile.peak_rots)
        for d, c in zip(v.depths, v.centers):
            total -= table.sigma_image(d, t - n * n * (tb - d), r - n * c)
    else:
        _require(profile, WINDING_ZERO_FLAGS)
        total = ((k + 1) // 2) * table.count(t, r)
        if k % 2 == 0:
            total += table.f_quotient(t, r)
        for d in v.depths[: k // 2]:
            total -= table.sigma_image(d, t, r)
    if total < 0:
        raise InconsistentTable(f"negative count {total} at ({t}, {r})")
    return total


# ---- mountain ranges -------------------------------------------------------


@dataclass(frozen=True)
class MountainRange:
    """Counts by (tb, rot), or by (sl, None) for the transverse kind."""

    kind: str
    max_tb: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in ("legendrian", "transverse"):
            raise ValueError(f"unknown range kind {self.kind!r}")
        if not self.entries:
            raise ValueError("a range needs at least one entry")
        for (t, _), c in self.entries.items():
            if c < 1 or t > self.max_tb:
                raise ValueError(f"bad entry at {t}: {c}")

    def get(self, t: int, r: int | None = None) -> int:
        return self.entries.get((t, r), 0)

    def rows(self) -> list[int]:
        return sorted({t for t, _ in self.entries}, reverse=True)

    def row(self, t: int) -> list[int]:
        """Counts on one row, by ascending rotation."""
        return [c for (tt, _), c in sorted(self.entries.items(), key=lambda kv: kv[0][1] or 0) if tt == t]

    def to_json(self) -> dict:
        items = sorted(self.entries.items(), key=lambda kv: (-kv[0][0], kv[0][1] or 0))
        if self.kind == "transverse":
            return {
                "kind": "transverse",
                "max_sl": self.max_tb,
                "entries": [{"sl": t, "count": c} for (t, _), c in items],
            }
        return {
            "kind": "legendrian",
            "max_tb": self.max_tb,
            "entries": [{"tb": t, "rot": r, "count": c} for (t, r), c in items],
        }

    @classmethod
    def from_json(cls, obj: dict) -> MountainRange:
        if obj.get("kind") == "transverse":
            ent = {(int(e["sl"]), None): int(e["count"]) for e in obj["entries"]}
            return cls("transverse", int(obj["max_sl"]), ent)
        ent = {(int(e["tb"]), int(e["rot"])): int(e["count"]) for e in obj["entries"]}
        return cls("legendrian", int(obj["max_tb"]), ent)


def _tabulate(top: int, depth: int, width: int, cell: Callable[[int, int], int]) -> dict:
    """Evaluate ``cell`` on every lattice point from ``top`` down ``depth`` rows."""
    out = {}
    for t in range(top, top - depth - 1, -1):
        for r in range(-width - (top - t), width + (top - t) + 1):
            c = cell(t, r)
            if c:
                out[(t, r)] = c
    return out


# ---- Whitehead doubles -----------------------------------------------------


def _whitehead_case(profile: KnotProfile, m: int):
    _require(profile, WINDING_ZERO_FLAGS)
    v = valleys(profile)
    M = m - 2 * profile.t_bar
    return v, M, (2 * profile.t_bar - m) // 2


def whitehead_double_max_tb(profile: KnotProfile, m: int) -> int:
    return WhiteheadTable(m - 2 * profile.t_bar).peaks()[0][0]


def whitehead_double_count(profile: KnotProfile, m: int, t: int, r: int) -> int:
    """Closed-form count of Legendrian Whitehead doubles at (t, r)."""
    v, M, l = _whitehead_case(profile, m)
    k = v.k
    half = _ceil_div(k + 1, 2)
    pat = WhiteheadTable(M)
    h = pat.depth_below_maximum(t, r)
    if h < 0:
        return 0
    at_peak = t == pat.peaks()[0][0]
    if M >= 0:
        if M % 2 == 0 and at_peak:
            return k + 1
        val = half - sum(v.n(d) for d in range(1, h + 1))
    elif M % 2:
        h = pat.collapse_depth(t, r)
        if at_peak:
            val = _ceil_div((k + 1) * (-M + 1), 2) - sum(
                v.n(d) * (-M - 2 * d + 1) for d in range(1, l + 1)
            )
        else:
            val = half - sum(v.n(d) for d in range(1, l + 1)) - sum(v.n(d) for d in range(l + 1, h + 1))
    else:
        if at_peak:
            val = (
                _ceil_div((k + 1) * (l + 1) ** 2, 2)
                - sum(v.n(d) * (l - d + 1) ** 2 for d in range(1, l))
                - 2 * v.n(l)
            )
        elif h == 0:
            val = half * (l + 1) - sum(v.n(d) * (l - d + 1) for d in range(1, l + 1))
        else:
            val = half - sum(v.n(d) for d in range(1, l + 1)) - sum(v.n(d) for d in range(l + 1, h + 1))
    if val < 0:
        raise InconsistentTable(f"negative closed-form count {val} at ({t}, {r})")
    return val


def range_whitehead_double(profile: KnotProfile, m: int, depth: int = DEFAULT_DEPTH) -> MountainRange:
    top = whitehead_double_max_tb(profile, m)
    ent = _tabulate(top, depth, 1, lambda t, r: whitehead_double_count(profile, m, t, r))
    return MountainRange("legendrian", top, ent)


def range_from_engine(
    profile: KnotProfile, spec: PatternSpec, depth: int = DEFAULT_DEPTH, rule: str = "depth"
) -> MountainRange:
    """Tabulate ``count_general`` for a pattern family over the top rows."""
    n = spec.winding
    tb = profile.t_bar
    twisted = twist_pattern(spec, -tb)
    table = pattern_table(twisted, rule)
    top = n * n * tb + pattern_max_reltb(twisted)
    width = abs(n) * max(abs(r) for r in profile.peak_rots) + max(abs(x) for x in maximal_relrots(twisted))
    ent = _tabulate(top, depth, width, lambda t, r: count_general(profile, table, n, t, r))
    return MountainRange("legendrian", top, ent)


def whitehead_double_max_sl(profile: KnotProfile, m: int) -> int:
    M = m - 2 * profile.t_bar
    if M >= 0:
        return 1 - M if M % 2 == 0 else -M - 2
    return -3 if M % 2 else 1


def transverse_whitehead_count(profile: KnotProfile, m: int, a: int) -> int:
    """Transverse Whitehead doubles at ``sl = max_sl - 2a``."""
    v, M, l = _whitehead_case(profile, m)
    half = _ceil_div(v.k + 1, 2)
    if a < 0:
        return 0
    if M >= 0:
        return half - sum(v.n(d) for d in range(1, a + 1))
    if M % 2 == 0 and a == 0:
        return half * (l + 1) - sum(v.n(d) * (l - d + 1) for d in range(1, l + 1))
    return half - sum(v.n(d) for d in range(1, l + 1)) - sum(v.n(d) for d in range(l + 1, a + 1))


def transverse_whitehead_double(profile: KnotProfile, m: int, depth: int = DEFAULT_DEPTH) -> MountainRange:
    top = whitehead_double_max_sl(profile, m)
    ent = {}
    for a in range(depth + 1):
        c = transverse_whitehead_count(profile, m, a)
        if c < 0:
            raise InconsistentTable(f"negative transverse count at a={a}")
        if c:
            ent[(top - 2 * a, None)] = c
    return MountainRange("transverse", top, ent)


# ---- Legendrian simple satellites ------------------------------------------


def _cone_range(peaks: Iterable[tuple[int, int]], depth: int) -> MountainRange:
    peaks = sorted(set(peaks))
    top = max(p[0] for p in peaks)
    ent = {}
    for t in range(top, top - depth - 1, -1):
        for pt, pr in peaks:
            A = pt - t
            if A < 0:
                continue
            for r in range(pr - A, pr + A + 1, 2):
                ent[(t, r)] = 1
    return MountainRange("legendrian", top, ent)


def two_braid_satellite_peaks(profile: KnotProfile, m: int) -> list[tuple[int, int]]:
    _require(profile, BASE_FLAGS)
    if m % 2 == 0:
        raise EvenM(f"2-braid satellites need odd m, got {m}")
    tb = profile.t_bar
    if m > 2 * tb:
        return [(2 * tb + m, 2 * ri) for ri in profile.peak_rots]
    shift = m - 2 * tb
    rots = {2 * ri + shift + 2 * j for ri in profile.peak_rots for j in range(2 * tb - m + 1)}
    return [(2 * m, r) for r in sorted(rots)]


def range_two_braid_satellite(profile: KnotProfile, m: int, depth: int = DEFAULT_DEPTH) -> MountainRange:
    return _cone_range(two_braid_satellite_peaks(profile, m), depth)


def cable_satellite_peaks(profile: KnotProfile, p: int, q: int) -> list[tuple[int, int]]:
    _require(profile, BASE_FLAGS)
    spec = Cable(p, q)
    p, q = spec.p, spec.q
    tb = profile.t_bar
    if p > tb * q:  # slope above t_bar
        return [(p * q - p + tb * q, q * ri) for ri in profile.peak_rots]
    if q == 1:
        raise UnsupportedFamily("a cable with q = 1 and slope at or below t_bar is the companion itself")
    pt = p - tb * q
    n = (-pt) // q
    rots = {ri + j for ri in profile.peak_rots for j in range(-n, n + 1, 2)}
    out = {q * rho + s * (pt + n * q) for rho in rots for s in (1, -1)}
    return [(p * q, r) for r in sorted(out)]


def range_cable(profile: KnotProfile, p: int, q: int, depth: int = DEFAULT_DEPTH) -> MountainRange:
    return _cone_range(cable_satellite_peaks(profile, p, q), depth)


def transverse_braid_satellite(profile: KnotProfile, w: BraidWord) -> tuple[int, bool]:
    """Maximal self-linking of the braided satellite; such satellites are transversely simple."""
    _require(profile, ("legendrian_simple", "uniformly_thick"))
    n = w.strands
    tb = profile.t_bar
    twisted = twist_pattern(BraidPattern(w), -tb)
    r0 = min(profile.peak_rots)
    return n * n * tb - n * r0 + writhe(twisted.word), True


# ---- rendering -------------------------------------------------------------


def render(rng: MountainRange) -> str:
    if rng.kind == "transverse":
        rows = sorted(rng.entries.items(), key=lambda kv: -kv[0][0])
        w = max(len(str(t)) for (t, _), _ in rows)
        return "\n".join(f"sl={t:>{w}}  {c}" for (t, _), c in rows) + "\n"
    rots = [r for _, r in rng.entries]
    lo, hi = min(rots), max(rots)
    w = max(len(str(c)) for c in rng.entries.values())
    bottom = min(t for t, _ in rng.entries)
    lines = []
    for t in range(rng.max_tb, bottom - 1, -1):
        cells = []
        for r in range(lo, hi + 1):
            c = rng.entries.get((t, r))
            cells.append(f"{c:>{w}}" if c else " " * w)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"
