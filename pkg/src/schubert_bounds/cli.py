"""Command-line interface: ``compute``, ``verify`` and ``count``.

Exit status: 0 when every audit record agrees, 1 on a disagreement,
2 on a usage or range error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import THEOREMS, force_from_env, run_audit
from .characters import key_poly, schubert_poly
from .combinat import ENUM_GUARD, Composition, Permutation, RangeError, count_max_avoiders, schroeder
from .diagrams import Diagram, max_poly, min_poly, rothe_diagram, skyline_diagram
from .lorentz import MAX_DEGREE, MAX_VARS, is_lorentzian
from .polyring import Poly
from .weyl import dual_character

KINDS = ("schubert", "key", "min", "max", "dual-char", "rothe", "skyline", "lorentzian")


class UsageError(ValueError):
    pass


def _parse_perm(text: str, force: bool) -> Permutation:
    try:
        w = Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(w) > ENUM_GUARD and not force:
        raise RangeError(f"permutation of size {len(w)} exceeds the guard {ENUM_GUARD}")
    return w


def _parse_comp(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _diagram_for(text: str, composition: bool, force: bool) -> Diagram:
    if text.lstrip().startswith("["):
        try:
            return Diagram.parse(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if composition:
        return skyline_diagram(_parse_comp(text))
    return rothe_diagram(_parse_perm(text, force))


def compute(kind: str, text: str, composition: bool = False, force: bool = False):
    """Return the requested object: a Poly, a Diagram or a bool."""
    if kind == "schubert":
        w = _parse_perm(text, force)
        return schubert_poly(w)
    if kind == "key":
        return key_poly(_parse_comp(text))
    if kind in ("min", "max", "dual-char"):
        d = _diagram_for(text, composition, force)
        return {"min": min_poly, "max": max_poly, "dual-char": dual_character}[kind](d)
    if kind == "rothe":
        return rothe_diagram(_parse_perm(text, force))
    if kind == "skyline":
        return skyline_diagram(_parse_comp(text))
    if kind == "lorentzian":
        f = key_poly(_parse_comp(text)) if composition else schubert_poly(_parse_perm(text, force))
        if force:
            return is_lorentzian(f, max_degree=max(f.degree(), 2), max_vars=max(f.n, 1))
        return is_lorentzian(f, MAX_DEGREE, MAX_VARS)
    raise UsageError(f"unknown kind {kind!r}")


def render_compute(kind: str, text: str, obj, as_json: bool) -> str:
    if not as_json:
        if isinstance(obj, bool):
            return str(obj).lower()
        return str(obj)
    payload = {"kind": kind, "input": text}
    if isinstance(obj, Poly):
        payload.update(n=obj.n, terms=obj.to_json())
    elif isinstance(obj, Diagram):
        payload.update(n=obj.n, columns=[list(c) for c in obj.columns])
    else:
        payload["value"] = obj
    return json.dumps(payload, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubert-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument("--force", action="store_true", help="lift the default size guards")

    pc = sub.add_parser("compute", help="compute one object")
    pc.add_argument("kind", choices=KINDS)
    pc.add_argument("input", help="permutation (1432 or 1,4,3,2), composition (0,2) or diagram ([[],[2,3],[2],[]])")
    pc.add_argument("--composition", action="store_true",
                    help="read INPUT as a composition for min/max/dual-char/lorentzian")
    common(pc)

    pv = sub.add_parser("verify", help="audit a theorem over an exhaustive range")
    pv.add_argument("theorem", choices=sorted(THEOREMS))
    pv.add_argument("--n", type=int)
    pv.add_argument("--len", dest="length", type=int)
    pv.add_argument("--max-part", type=int)
    pv.add_argument("--b", type=int)
    pv.add_argument("--timing", action="store_true", help="include wall time in the report")
    common(pv)

    pn = sub.add_parser("count", help="count 1432/1423-avoiders against Schroeder numbers")
    pn.add_argument("--n", type=int, default=8)
    common(pn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    force = args.force or force_from_env()
    try:
        if args.command == "compute":
            obj = compute(args.kind, args.input, args.composition, force)
            _emit(render_compute(args.kind, args.input, obj, args.json), args.out)
            return 0
        if args.command == "verify":
            report = run_audit(args.theorem, n=args.n, length=args.length, max_part=args.max_part,
                               b=args.b, force=force)
            print(f"{report.theorem}: {report.summary['disagreements']} disagreements "
                  f"in {report.summary['total']} records, {report.wall_time:.3f}s", file=sys.stderr)
            if args.json:
                text = json.dumps(report.to_json(args.timing), indent=1)
            else:
                text = report.to_text(args.timing)
            _emit(text, args.out)
            return 0 if report.ok else 1
        if args.command == "count":
            if args.n < 1:
                raise UsageError("--n must be at least 1")
            if args.n > ENUM_GUARD and not force:
                raise RangeError(f"n={args.n} exceeds the guard {ENUM_GUARD}")
            rows = [(k, count_max_avoiders(k, guard=k), schroeder(k - 1)) for k in range(1, args.n + 1)]
            ok = all(c == r for _, c, r in rows)
            if args.json:
                text = json.dumps([{"n": k, "avoiders": c, "schroeder": r} for k, c, r in rows])
            else:
                text = "n\tavoiders\tschroeder\n" + "\n".join(f"{k}\t{c}\t{r}" for k, c, r in rows)
            _emit(text, args.out)
            return 0 if ok else 1
    except (UsageError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
