"""Command-line front end.

Exit codes: 0 success, 1 domain error (or a failing oracle), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import atlas, rewrite
from .braid import BraidWord
from .errors import EvenM, LegsatError
from .legtangle import LegWord, word_invariants
from .satellite import (
    CompanionInvariants,
    PatternInvariants,
    maximal_relrots,
    pattern_from_json,
    pattern_max_reltb,
    satellite_classical,
    self_linking,
    twist_pattern,
)


class UsageError(Exception):
    pass


def _json_arg(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON argument: {e}") from None


def _read_source(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    try:
        return Path(name).read_text()
    except OSError as e:
        raise UsageError(str(e)) from None


def _profile(name: str) -> atlas.KnotProfile:
    path = Path(name)
    if path.exists():
        return atlas.KnotProfile.from_json(_json_arg(path.read_text()))
    try:
        return atlas.bundled_profile(path.name)
    except (FileNotFoundError, OSError):
        raise UsageError(f"no profile file or bundled profile named {name!r}") from None


def _parse_stab(text: str | None) -> tuple[int, int]:
    if not text:
        return 0, 0
    pos = neg = 0
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) < 2 or tok[0] not in "+-" or not tok[1:].isdigit():
            raise UsageError(f"bad stabilization token {tok!r}; use e.g. +1,-2")
        if tok[0] == "+":
            pos += int(tok[1:])
        else:
            neg += int(tok[1:])
    return pos, neg


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---- verbs -----------------------------------------------------------------


def cmd_invariants(args) -> int:
    try:
        w = LegWord.from_json(_json_arg(args.legword))
    except (KeyError, ValueError, TypeError) as e:
        if isinstance(e, LegsatError):
            raise
        raise UsageError(f"bad legword: {e}") from None
    tb, rot = word_invariants(w)
    _emit(args, {"reltb": str(tb) if not isinstance(tb, int) else tb,
                 "relrot": str(rot) if not isinstance(rot, int) else rot},
          f"reltb={tb} relrot={rot}")
    return 0


def cmd_satellite(args) -> int:
    obj = _json_arg(args.pattern)
    try:
        tb, rot = (int(x) for x in args.companion.split(","))
    except ValueError:
        raise UsageError("--companion expects tb,rot") from None
    comp = CompanionInvariants(tb, rot)
    if "family" in obj:
        # the pattern is read in the companion's framing, i.e. twisted by -tb
        spec = twist_pattern(pattern_from_json(obj), -tb)
        pats = [PatternInvariants(spec.winding, pattern_max_reltb(spec), rr) for rr in maximal_relrots(spec)]
    else:
        try:
            pats = [PatternInvariants(int(obj["winding"]), int(obj["reltb"]), int(obj["relrot"]))]
        except KeyError as e:
            raise UsageError(f"pattern JSON lacks {e}") from None
    rows = []
    for p in pats:
        t, r = satellite_classical(p, comp)
        rows.append({"tb": t, "rot": r, "sl": self_linking(t, r)})
    _emit(args, rows, "\n".join(f"tb={x['tb']} rot={x['rot']} sl={x['sl']}" for x in rows))
    return 0


def cmd_range(args) -> int:
    prof = _profile(args.profile)
    if args.transverse and args.family != "whitehead-double":
        raise UsageError("--transverse is available for whitehead-double only")
    if args.family == "whitehead-double":
        if args.m is None:
            raise UsageError("-m is required")
        if args.transverse:
            rng = atlas.transverse_whitehead_double(prof, args.m, args.depth)
        else:
            rng = atlas.range_whitehead_double(prof, args.m, args.depth)
    elif args.family == "two-braid":
        if args.m is None:
            raise UsageError("-m is required")
        rng = atlas.range_two_braid_satellite(prof, args.m, args.depth)
    else:
        if args.p is None or args.q is None:
            raise UsageError("-p and -q are required")
        rng = atlas.range_cable(prof, args.p, args.q, args.depth)
    _emit(args, rng.to_json(), atlas.render(rng))
    return 0


def _whitehead_class_list(m: int, pos: int, neg: int) -> list[dict]:
    table = atlas.WhiteheadTable(m)
    out = []
    for pt, pr in table.peaks():
        t, r = pt - pos - neg, pr + pos - neg
        if any(x["reltb"] == t and x["relrot"] == r for x in out):
            continue
        n = table.count(t, r)
        if m < 0 and m % 2 == 0 and not (pos and neg):
            h = -m // 2
            if pos or neg:
                key = "z-" if pos else "z+"
                labels = [f"{key}={z}" for z in range(h + 1)]
            else:
                labels = [f"z+={a},z-={b}" for a in range(h + 1) for b in range(h + 1)]
        elif m < 0 and m % 2 and not (pos or neg):
            labels = [f"z={z}" for z in range(-m + 1)]
        elif m >= 0 and m % 2 == 0 and not (pos or neg):
            labels = ["A", "B"]
        else:
            labels = ["Q" if n == 1 else f"Q{j}" for j in range(n)]
        assert len(labels) == n
        out.extend({"label": lab, "reltb": t, "relrot": r} for lab in labels)
    return out


def _two_braid_class_list(m: int, pos: int, neg: int) -> list[dict]:
    if m % 2 == 0:
        raise EvenM(f"2-braid patterns need odd m, got {m}")
    if m > 0:
        base = [("Q", m, 0)]
    else:
        base = [(f"z={z}", *rewrite.two_braid_invariants(m, z)) for z in range(-m + 1)]
    return [{"label": lab, "reltb": t - pos - neg, "relrot": r + pos - neg} for lab, t, r in base]


def cmd_classify(args) -> int:
    pos, neg = _parse_stab(args.stab)
    if args.family == "whitehead":
        rows = _whitehead_class_list(args.m, pos, neg)
    else:
        rows = _two_braid_class_list(args.m, pos, neg)
    text = [f"classes: {len(rows)}"]
    text += [f"  {x['label']}  reltb={x['reltb']} relrot={x['relrot']}" for x in rows]
    _emit(args, {"m": args.m, "classes": rows}, "\n".join(text))
    return 0


def cmd_oracle(args) -> int:
    if args.family == "positive":
        if not args.w:
            raise UsageError("-w is required, e.g. -w 1,2,1")
        try:
            ints = [int(x) for x in args.w.split(",")]
        except ValueError:
            raise UsageError("-w expects comma-separated integers") from None
        n = args.n or (max(abs(x) for x in ints) + 1)
        w = BraidWord.from_ints(n, ints)
        got, expected = rewrite.positive_leg_classes(w, args.closed), 1
        payload = {"word": w.to_json(), "closed": args.closed, "classes": got}
        lines = [f"oracle positive word={list(ints)} n={n} closed={args.closed}", f"classes: {got}"]
    else:
        if args.m is None:
            raise UsageError("-m is required")
        m = args.m
        pos, neg = _parse_stab(args.stab)
        if args.family == "whitehead":
            if pos or neg:
                classes = rewrite.stabilized_classes(m, pos, neg)
                expected = atlas.WhiteheadTable(m).count(1 - pos - neg if m % 2 == 0 else -3 - pos - neg, pos - neg)
            else:
                classes = rewrite.whitehead_classes(m)
                expected = atlas.WhiteheadTable(m).count(*atlas.WhiteheadTable(m).peaks()[0])
        else:
            if pos or neg:
                raise UsageError("--stab is only meaningful for the whitehead oracle")
            classes = rewrite.two_braid_classes(m)
            expected = -m + 1
        got = len(classes)
        payload = rewrite.oracle_to_json(m, classes)
        lines = [f"oracle {args.family} m={m}" + (f" stab=+{pos},-{neg}" if pos or neg else ""), f"classes: {got}"]
        lines += [f"  {c.canonical_str}  size={c.size}  tag={c.tag}" for c in classes]
    ok = got == expected
    payload.update({"expected": expected, "pass": ok})
    lines += [f"expected: {expected}", "PASS" if ok else "FAIL"]
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_render(args) -> int:
    obj = _json_arg(_read_source(args.range))
    try:
        rng = atlas.MountainRange.from_json(obj)
    except (KeyError, TypeError) as e:
        raise UsageError(f"bad range JSON: {e}") from None
    sys.stdout.write(atlas.render(rng))
    return 0


# ---- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="legsat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("invariants", parents=[common], help="reltb and relrot of a block word")
    s.add_argument("--legword", required=True, help="LegWord JSON")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("satellite", parents=[common], help="classical invariants of a satellite")
    s.add_argument("--pattern", required=True, help="PatternSpec JSON or {winding, reltb, relrot}")
    s.add_argument("--companion", required=True, help="tb,rot of the companion")
    s.set_defaults(func=cmd_satellite)

    s = sub.add_parser("range", parents=[common], help="mountain range of a satellite family")
    s.add_argument("family", choices=["whitehead-double", "two-braid", "cable"])
    s.add_argument("--profile", required=True, help="profile JSON file or bundled name (t13_3)")
    s.add_argument("-m", type=int)
    s.add_argument("-p", type=int)
    s.add_argument("-q", type=int)
    s.add_argument("--depth", type=int, default=atlas.DEFAULT_DEPTH, help="rows below the top")
    s.add_argument("--transverse", action="store_true")
    s.set_defaults(func=cmd_range)

    s = sub.add_parser("classify", parents=[common], help="closed-form pattern classes")
    s.add_argument("family", choices=["whitehead", "two-braid"])
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--stab", help="stabilizations, e.g. +1,-2")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("oracle", parents=[common], help="brute-force class census vs closed form")
    s.add_argument("family", choices=["whitehead", "two-braid", "positive"])
    s.add_argument("-m", type=int)
    s.add_argument("--stab")
    s.add_argument("-w", help="positive braid word, e.g. 1,2,1")
    s.add_argument("-n", type=int, help="strand count for -w")
    s.add_argument("--closed", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("render", parents=[common], help="text grid of a range JSON file")
    s.add_argument("--range", required=True, help="file or - for stdin")
    s.set_defaults(func=cmd_render)
    return p


_VALUE_FLAGS = ("--companion", "--stab")


def _glue_signed_values(argv: Sequence[str]) -> list[str]:
    """Let ``--companion -39,-10`` through: argparse would read the value as a flag."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_signed_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"legsat: error: {e}", file=sys.stderr)
        return 2
    except LegsatError as e:
        print(f"legsat: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"legsat: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
