"""Command line interface: ``seminormal <command> [flags]``.

Exit codes: 0 success, 1 a verification check failed, 2 bad flags,
3 invalid shape, 4 size cap exceeded, 5 pole during specialization.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import groups as G
from . import matrices as mx
from .exact import PoleError
from .hecke import build_hecke, central_matrix, murphy_matrix, specialize_rep
from .tableaux import (
    G2_LABELS,
    Shape,
    box_stats,
    d_label,
    enum_shapes,
    enum_standard_tableaux,
    g2_paths,
    tableau_weight,
)
from .verify import ALL_CHECKS, GROUP_CAPS, run_suite
from .weyl import apply_group_algebra, build_rep, character, label_json

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_SHAPE = 3
EXIT_CAP = 4
EXIT_POLE = 5

# largest rank for which representations are emitted
REP_CAPS = {"A": 10, "B": 8, "D": 8}


class ShapeError(ValueError):
    pass


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


_PART = r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)"
_DOUBLE = re.compile(rf"^\s*{_PART}\s*\|\s*{_PART}\s*([+\-−]?)\s*$")


def _rows(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_shape(group_type: str, spec: str, n: int | None = None):
    """Parse a shape label: ``3,2`` (A), ``(2,1)|(1)`` (B, D; ``+``/``-`` split), ``phi_2_1`` (G2)."""
    try:
        if group_type == "G2":
            if spec not in G2_LABELS:
                raise ShapeError(f"unknown G2 label {spec!r}; expected one of {', '.join(G2_LABELS)}")
            return spec
        if group_type == "A":
            if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", spec or ""):
                raise ShapeError(f"bad partition {spec!r}")
            label = Shape(_rows(spec))
        else:
            m = _DOUBLE.match(spec or "")
            if not m:
                raise ShapeError(f"bad double partition {spec!r}")
            alpha, beta, split = _rows(m.group(1)), _rows(m.group(2)), m.group(3).replace("−", "-")
            if group_type == "B":
                if split:
                    raise ShapeError("type B shapes take no +/- marker")
                label = Shape(alpha, beta)
            else:
                label = d_label(alpha, beta, split)
    except ShapeError:
        raise
    except ValueError as exc:
        raise ShapeError(str(exc)) from exc
    if n is not None and label.size != n:
        raise ShapeError(f"shape {spec!r} has size {label.size}, not {n}")
    if label.size < 1 or (group_type == "D" and label.size < 2):
        raise ShapeError(f"shape {spec!r} is too small for type {group_type}")
    return label


def _labels(args) -> list:
    if args.type == "G2":
        return list(G2_LABELS) if args.all else [parse_shape("G2", _need_shape(args))]
    if args.all:
        if args.n is None:
            raise CliError(EXIT_USAGE, "--all needs --n")
        _cap(args.type, args.n, REP_CAPS)
        return enum_shapes(args.type, args.n)
    label = parse_shape(args.type, _need_shape(args), args.n)
    _cap(args.type, label.size, REP_CAPS)
    return [label]


def _need_shape(args) -> str:
    if args.shape is None:
        raise CliError(EXIT_USAGE, "--shape is required (or --all)")
    return args.shape


def _cap(group_type: str, n: int, caps: dict):
    if group_type != "G2" and n > caps[group_type]:
        raise CliError(EXIT_CAP, f"rank {n} exceeds the cap {caps[group_type]} for type {group_type}")


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_tableaux(args):
    labels = _labels(args)
    if args.type == "G2":
        out = []
        for lab in labels:
            for path in g2_paths(lab):
                out.append({**path.to_json(), "weight": list(path.weight())})
        if args.format == "text":
            for item, path in zip(out, [p for lab in labels for p in g2_paths(lab)]):
                print(f"{path}  weight={tuple(item['weight'])}")
        else:
            _emit({"group": "G2", "paths": out})
        return 0
    t = args.type
    entries = []
    for lab in labels:
        shape = lab.shape if hasattr(lab, "split") else lab
        for tab in enum_standard_tableaux(shape):
            w = tableau_weight(tab, t)
            item = tab.to_json()
            item["contents"] = list(w.contents)
            if shape.is_double:
                item["signs"] = list(w.signs)
            item["weight"] = list(w.key(t)) if t == "A" else [list(x) for x in w.key(t)]
            entries.append((tab, item))
    if args.format == "text":
        for tab, item in entries:
            extra = f"  signs={item['signs']}" if "signs" in item else ""
            print(f"{tab}  contents={item['contents']}{extra}")
    else:
        _emit({"group": t, "n": labels[0].size if labels else args.n, "tableaux": [item for _, item in entries]})
    return 0


def cmd_rep(args, hecke: bool = False):
    build = build_hecke if hecke else build_rep
    reps = [build(args.type, lab).to_json() for lab in _labels(args)]
    _emit(reps[0] if len(reps) == 1 and not args.all else reps)
    return 0


def cmd_murphy(args):
    out = []
    for lab in _labels(args):
        if args.algebra == "hecke":
            rep = build_hecke(args.type, lab)
            ops = []
            if rep.group_type != "G2":
                start = 2 if rep.group_type in ("A", "D") else 1
                ops += [(f"M{k}", murphy_matrix(rep, k)) for k in range(start, rep.n + 1)]
            levels = range(1, 3) if rep.group_type == "G2" else range(2 if rep.group_type == "A" else 1, rep.n + 1)
            ops += [(f"z{k}", central_matrix(rep, k)) for k in levels]
        else:
            rep = build_rep(args.type, lab)
            ops = []
            for name, x in _weyl_elements(rep):
                ops.append((name, apply_group_algebra(rep, x)))
        out.append({
            "group": rep.group_type,
            "shape": label_json(rep.label),
            "basis": [b.to_json() for b in rep.basis],
            "operators": [
                {"name": name, "diagonal": mx.is_diagonal(m), "matrix": mx.to_strings(m)} for name, m in ops
            ],
        })
    _emit(out[0] if len(out) == 1 and not args.all else out)
    return 0


def _weyl_elements(rep):
    t, n = rep.group_type, rep.n
    if t == "G2":
        yield "z_1_0", G.central_sum("G2", 1, "zero")
        for fl in ("short", "long", "zero"):
            yield f"z_2_{fl}", G.central_sum("G2", 2, fl)
        return
    for k in range(1, n + 1):
        for fl in G.JM_FLAVORS[t]:
            yield f"m_{k}_{fl}", G.jm_element(t, k, fl, n)


def cmd_characters(args):
    t = args.type
    n = None if t == "G2" else args.n
    if t != "G2":
        if n is None:
            raise CliError(EXIT_USAGE, "--n is required")
        _cap(t, n, GROUP_CAPS)
    try:
        elements = G.enumerate_group(t, n)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    classes = conjugacy_classes(t, n)
    reps = [build_rep(t, lab) for lab in enum_shapes(t, n)]
    words = G.group_words(t, n)
    _emit({
        "group": t,
        "n": 2 if n is None else n,
        "order": len(elements),
        "classes": [{"representative": "".join(words[c[0]]) or "1", "size": len(c)} for c in classes],
        "characters": [
            {"shape": label_json(r.label), "values": [str(character(r, c[0])) for c in classes]} for r in reps
        ],
    })
    return 0


def conjugacy_classes(group_type: str, n=None) -> list[list]:
    """Classes in order of first appearance in the shortest-word enumeration."""
    elements = G.enumerate_group(group_type, n)
    gens = list(G.generators(group_type, n).values())
    seen = set()
    out = []
    for el in elements:
        if el in seen:
            continue
        orbit, frontier = {el}, [el]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = G.compose(G.compose(g, x), g)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        out.append([e for e in elements if e in orbit])
    return out


def cmd_verify(args):
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = set(checks) - set(ALL_CHECKS)
        if unknown:
            raise CliError(EXIT_USAGE, f"unknown checks {sorted(unknown)}; available: {', '.join(ALL_CHECKS)}")
    n = None if args.type == "G2" else args.n
    if args.type != "G2" and n is None:
        raise CliError(EXIT_USAGE, "--n is required")
    try:
        reports = run_suite(args.type, n, checks)
    except G.CapExceeded as exc:
        raise CliError(EXIT_CAP, str(exc)) from exc
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    if args.format == "text":
        for r in reports:
            subj = r.subject
            shape = json.dumps(subj.get("shape", {}), separators=(",", ":"))
            print(f"{r.status.upper():4}  {r.check:18} {subj.get('algebra', ''):6} {shape}")
    else:
        _emit([r.to_json() for r in reports])
    return 0 if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_specialize(args):
    try:
        p0, q0 = Fraction(args.p), Fraction(args.q)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_USAGE, f"bad rational value: {exc}") from exc
    out = []
    for lab in _labels(args):
        rep = build_hecke(args.type, lab)
        try:
            spec = specialize_rep(rep, p0, q0)
        except PoleError as exc:
            raise CliError(EXIT_POLE, f"pole at p={p0}, q={q0}: {exc}") from exc
        data = spec.to_json()
        data["generators"] = [
            {"name": rep.key(g["name"]), "matrix": g["matrix"]} for g in data["generators"]
        ]
        data["point"] = {"p": str(p0), "q": str(q0)}
        out.append(data)
    _emit(out[0] if len(out) == 1 and not args.all else out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seminormal", description="Seminormal representations of Weyl groups and Hecke algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=True, fmt=("json",)):
        p.add_argument("--type", required=True, choices=["A", "B", "D", "G2"])
        p.add_argument("--n", type=_positive)
        if shape:
            p.add_argument("--shape")
            p.add_argument("--all", action="store_true", help="every shape of size n")
        p.add_argument("--format", choices=list(fmt), default=fmt[0])

    common(sub.add_parser("tableaux", help="list standard tableaux with contents, signs and weights"), fmt=("json", "text"))
    common(sub.add_parser("rep", help="Weyl group representation matrices"))
    common(sub.add_parser("hecke-rep", help="Hecke algebra representation matrices"))
    p = sub.add_parser("murphy", help="Jucys-Murphy, Murphy and central operator matrices")
    common(p)
    p.add_argument("--algebra", choices=["hecke", "weyl"], default="hecke")
    common(sub.add_parser("characters", help="character table over conjugacy classes"), shape=False)
    p = sub.add_parser("verify", help="run the verification suite")
    common(p, shape=False, fmt=("json", "text"))
    p.add_argument("--checks", help=f"comma separated subset of: {', '.join(ALL_CHECKS)}")
    p = sub.add_parser("specialize", help="evaluate Hecke matrices at rational p, q")
    common(p)
    p.add_argument("--p", default="1")
    p.add_argument("--q", default="1")
    return parser


COMMANDS = {
    "tableaux": cmd_tableaux,
    "rep": cmd_rep,
    "hecke-rep": lambda a: cmd_rep(a, hecke=True),
    "murphy": cmd_murphy,
    "characters": cmd_characters,
    "verify": cmd_verify,
    "specialize": cmd_specialize,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ShapeError as exc:
        print(f"error: invalid shape: {exc}", file=sys.stderr)
        return EXIT_BAD_SHAPE


if __name__ == "__main__":
    sys.exit(main())
