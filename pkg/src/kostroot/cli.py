"""Command-line front end.

Algebra grammar: sl(M|N) with M != N, gl(M|M), osp(M|2N), D(2,1;a), G3 or
G(3), F4 or F(4), and the simple Lie types A<r>, B<r>, C<r>, D<r>, G2, F_4,
E6, E7, E8.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from . import bases as B
from . import graphs as G
from . import hermitian as H
from . import kostant as K
from . import linalg
from . import theorems as T
from .rootsys import CATALOG_EXAMPLES, AlgebraSpecError, RootSystem, build, parse_algebra
from .rootsys import to_dict as rs_to_dict

GRAMMAR = (
    "algebras: sl(M|N) (M != N), gl(M|M), osp(M|2N), D(2,1;a), G3, F4, "
    "A<r>, B<r>, C<r>, D<r>, G2, F_4, E6, E7, E8"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _algebra(text: str) -> str:
    try:
        parse_algebra(text)
    except AlgebraSpecError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kostroot", description=__doc__.split("\n\n")[0], epilog=GRAMMAR)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list-algebras", help="catalog examples and the grammar")

    s = sub.add_parser("roots", help="roots with parities")
    s.add_argument("--algebra", required=True, type=_algebra)
    s.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("bases", help="all bases, or W-class representatives")
    s.add_argument("--algebra", required=True, type=_algebra)
    s.add_argument("--up-to-weyl", action="store_true")
    s.add_argument("--permutations", action="store_true", help="also identify bases under coordinate permutations")
    s.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("kostant", help="Kostant roots of Delta/<I>")
    s.add_argument("--algebra", required=True, type=_algebra)
    s.add_argument("--collapse", default="", help="root tuples '(1,-1,0);(0,1,-1)' or indices '0,2' into --base")
    s.add_argument("--base", type=int, default=None, help="index into the sorted list of bases")
    s.add_argument("--toral", default=None, help="toral elements '(1,0,-1);...' instead of --collapse")
    s.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("graph", help="root graph, or a fiber graph of Delta/<I>")
    s.add_argument("--algebra", required=True, type=_algebra)
    s.add_argument("--base", type=int, default=None, help="index into the sorted list of bases (default 0 for root graphs)")
    s.add_argument("--collapse", default=None)
    s.add_argument("--toral", default=None, help="toral elements '(1,0,-1);...' instead of --collapse")
    s.add_argument("--fiber", default=None, help="Kostant root, e.g. '(1,0)' or '1,0'")
    s.add_argument("--format", choices=("dot", "json"), default="dot")

    s = sub.add_parser("verify", help="exhaustive verification of a claim")
    s.add_argument("--claim", required=True, choices=T.CLAIMS)
    s.add_argument("--algebra", type=_algebra, action="append", help="repeatable; default is the in-scope list")
    s.add_argument("--rank-bound", type=int, default=None)
    s.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("hermitian", help="Hermitian symmetric pair counts")
    s.add_argument("--counts", action="store_true", required=True)
    s.add_argument("--case", default=None, choices=[c.id for c in H.CATALOG])
    s.add_argument("--format", choices=("json", "text"), default="text")
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# -- input parsing ----------------------------------------------------------


_TUPLE = re.compile(r"\(([^()]*)\)")


def parse_vector(text: str):
    text = text.strip()
    m = _TUPLE.fullmatch(text)
    body = m.group(1) if m else text
    try:
        return tuple(linalg.parse_rational(x) for x in body.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read vector {text!r}")


def resolve_collapse(rs: RootSystem, text: str, base):
    """Root tuples, or indices into ``base``."""
    text = (text or "").strip()
    if not text:
        return []
    if "(" in text:
        vecs = [parse_vector(m.group(0)) for m in _TUPLE.finditer(text)]
        for v in vecs:
            if len(v) != rs.ambient_dim or v not in rs:
                raise UsageError(f"{v} is not a root of {rs.name}")
        return vecs
    if base is None:
        raise UsageError("index collapse sets need --base")
    try:
        idx = [int(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot read collapse set {text!r}")
    for i in idx:
        if not 0 <= i < len(base):
            raise UsageError(f"base index {i} out of range 0..{len(base) - 1}")
    return [base[i] for i in idx]


def _base(rs: RootSystem, index: Optional[int]):
    if index is None:
        return None
    bases = B.enumerate_bases(rs)
    if not 0 <= index < len(bases):
        raise UsageError(f"--base must lie in 0..{len(bases) - 1}")
    return bases[index].elements


def _vec(v) -> List[str]:
    return [linalg.fmt(x) for x in v]


# -- commands ---------------------------------------------------------------


def cmd_list(args) -> tuple:
    lines = [GRAMMAR, ""] + [f"{name:<10} {build(name).name}" for name in CATALOG_EXAMPLES]
    return 0, "\n".join(lines) + "\n"


def cmd_roots(args) -> tuple:
    rs = build(args.algebra)
    if args.format == "json":
        return 0, json.dumps(rs_to_dict(rs), indent=2, sort_keys=True) + "\n"
    lines = [f"{rs.name}: {len(rs)} roots ({len(rs.even)} even, {len(rs.odd)} odd), rank {rs.rank}"]
    lines += [f"  {rs.parity(v):<4} {rs.format(v)}" for v in rs.vectors]
    return 0, "\n".join(lines) + "\n"


def cmd_bases(args) -> tuple:
    rs = build(args.algebra)
    if args.up_to_weyl:
        classes = B.base_classes_up_to_W(rs, coordinate_permutations=args.permutations)
        reps = [b.elements for b in classes.representatives]
        sizes = list(classes.orbit_sizes)
    else:
        reps = [b.elements for b in B.enumerate_bases(rs)]
        sizes = None
    if args.format == "json":
        return 0, json.dumps([[_vec(v) for v in b] for b in reps], indent=2) + "\n"
    head = f"{rs.name}: {len(reps)} {'W-classes of bases' if args.up_to_weyl else 'bases'}"
    lines = [head]
    for i, b in enumerate(reps):
        extra = f"  (orbit {sizes[i]})" if sizes else ""
        lines.append(f"  [{i}] {{{', '.join(rs.format(v) for v in b)}}}{extra}")
    return 0, "\n".join(lines) + "\n"


def _kostant_system(rs: RootSystem, args):
    if args.toral is not None:
        if args.collapse:
            raise UsageError("give either --collapse or --toral")
        elements = [parse_vector(m.group(0)) for m in _TUPLE.finditer(args.toral)]
        try:
            return K.project_by_toral(rs, elements), []
        except K.ProjectionError as exc:
            raise UsageError(str(exc))
    base = _base(rs, args.base)
    collapse = resolve_collapse(rs, args.collapse, base)
    try:
        return K.project(rs, collapse, base), collapse
    except K.ProjectionError as exc:
        raise UsageError(str(exc))


def cmd_kostant(args) -> tuple:
    rs = build(args.algebra)
    KS, collapse = _kostant_system(rs, args)
    if args.format == "json":
        payload = {
            "R": [_vec(v) for v in KS.vectors],
            "fibers": {" ".join(_vec(nu)): [_vec(v) for v in KS.fiber(nu)] for nu in KS.vectors},
            "centralizer": [_vec(v) for v in KS.centralizer],
        }
        return 0, json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"{rs.name} / <{', '.join(rs.format(v) for v in collapse)}>: {len(KS)} Kostant roots"]
    for nu in KS.vectors:
        parities = "/".join(sorted(KS.parities(nu)))
        lines.append(f"  ({', '.join(str(x) for x in nu)}) [{parities}]: {', '.join(rs.format(v) for v in KS.fiber(nu))}")
    lines.append(f"  centralizer: {', '.join(rs.format(v) for v in KS.centralizer) or '-'}")
    return 0, "\n".join(lines) + "\n"


def cmd_graph(args) -> tuple:
    rs = build(args.algebra)
    if args.collapse is None and args.toral is None:
        if args.fiber is not None:
            raise UsageError("--fiber needs --collapse or --toral")
        index = args.base or 0
        graph = G.graph_of(rs, _base(rs, index))
        name = f"{rs.name} base {index}"
    else:
        KS, _ = _kostant_system(rs, args)
        if args.fiber is None:
            raise UsageError("--collapse needs --fiber (a Kostant root)")
        tau = parse_vector(args.fiber)
        if len(tau) != KS.dim or tau not in KS or linalg.is_zero(tau):
            raise UsageError(f"{args.fiber} is not a nonzero Kostant root; roots are "
                             + ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in KS.vectors))
        graph = G.fiber_graph(KS, tau)
        name = f"{rs.name} fiber {args.fiber}"
    if args.format == "json":
        return 0, G.to_json(graph) + "\n"
    return 0, G.to_dot(graph, name)


def cmd_verify(args) -> tuple:
    try:
        reports = T.run_claim(args.claim, args.algebra, args.rank_bound)
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps({"claim": args.claim, "passed": ok, "reports": [r.to_dict() for r in reports]}, indent=2) + "\n"
    else:
        lines = []
        for r in reports:
            line = r.summary()
            if r.expect_reducible and r.passed:
                line += " [reducible, as expected]"
            lines.append(line)
            lines += [f"    note: {n}" for n in r.notes]
            lines += [f"    failure: {json.dumps(T._jsonable(f))}" for f in r.failures[:5]]
        lines.append("PASS" if ok else "FAIL")
        text = "\n".join(lines) + "\n"
    return (0 if ok else 1), text


def cmd_hermitian(args) -> tuple:
    pairs = [H.get_case(args.case)] if args.case else H.hermitian_catalog()
    rows = H.count_rows(pairs)
    code = 0 if all(r["match"] for r in rows) else 1
    return code, H.format_rows(rows, args.format)


COMMANDS = {
    "list-algebras": cmd_list,
    "roots": cmd_roots,
    "bases": cmd_bases,
    "kostant": cmd_kostant,
    "graph": cmd_graph,
    "verify": cmd_verify,
    "hermitian": cmd_hermitian,
}


def run(args: argparse.Namespace) -> tuple:
    return COMMANDS[args.command](args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
        code, text = run(args)
    except UsageError as exc:
        print(f"kostroot: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"kostroot: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
