"""``okplanar`` command line.

Exit codes: 0 ok, 1 input error, 2 bound violation, 3 oracle size cap.
Errors are reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import io, render
from .analysis import analyze, summary_lines
from .decomposition import build_tree_decomposition
from .drawing import crossing_profile
from .errors import BoundViolationError, CertificateError, InvalidInputError, OracleCapError
from .generators import random_outer_k_planar, random_outer_min_k_planar, stacked_prism
from .oracles import brute_convex_lcr, brute_min_balanced_separation, brute_treewidth
from .separation import build_separation
from .triangulation import METHODS, triangulate

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_CAP = 0, 1, 2, 3
THREADS_ENV = "OKPLANAR_THREADS"


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, OracleCapError):
        return EXIT_CAP
    if isinstance(exc, (BoundViolationError, CertificateError)):
        return EXIT_BOUND
    return EXIT_INPUT


def error_obj(exc: BaseException) -> dict:
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": exit_code_for(exc)}


def _dump(obj, pretty: bool) -> str:
    return json.dumps(obj, indent=2) if pretty else json.dumps(obj)


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InvalidInputError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def cmd_analyze(args) -> int:
    if args.batch:
        folder = Path(args.batch)
        if not folder.is_dir():
            raise InvalidInputError(f"{folder} is not a directory")
        files = sorted(folder.glob("*.json"))

        def run(path: Path):
            try:
                rep = analyze(io.load_drawing(path), args.k, args.min_k)
                return rep.to_obj(), EXIT_OK
            except (InvalidInputError, BoundViolationError, CertificateError) as exc:
                return error_obj(exc), exit_code_for(exc)

        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            outcomes = list(pool.map(run, files))
        print(_dump({p.name: obj for p, (obj, _) in zip(files, outcomes)}, args.pretty))
        return max((code for _, code in outcomes), default=EXIT_OK)
    if not args.input:
        raise InvalidInputError("analyze needs an input file or --batch DIR")
    report = analyze(io.load_drawing(args.input), args.k, args.min_k)
    if args.pretty:
        print("\n".join(summary_lines(report)))
    else:
        print(json.dumps(report.to_obj()))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family == "prism":
        d = stacked_prism((args.a, args.b))
    elif args.family == "random":
        if args.seed is None:
            raise InvalidInputError("generate random needs N K SEED")
        d = random_outer_k_planar(args.a, args.b, args.seed, args.max_span)
    else:
        if args.seed is None:
            raise InvalidInputError("generate min-random needs N K SEED")
        d = random_outer_min_k_planar(args.a, args.b, args.seed)
    print(_dump(io.drawing_to_obj(d), args.pretty))
    return EXIT_OK


def _k_for(d, k):
    return k if k is not None else crossing_profile(d).max_count


def cmd_triangulate(args) -> int:
    d = io.load_drawing(args.input)
    k = 2 if args.method == "o2p" else _k_for(d, args.k)
    t, trace = triangulate(d, k, args.method)
    print(_dump(io.triangulation_to_obj(t, trace), args.pretty))
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = io.load_drawing(args.input)
    k = 2 if args.method == "o2p" else _k_for(d, args.k)
    t, _ = triangulate(d, k, args.method)
    td = build_tree_decomposition(d, t)
    if args.dot:
        sys.stdout.write(render.td_dot(td))
    else:
        obj = io.td_to_obj(td)
        obj["separation"] = io.separation_to_obj(build_separation(d, t))
        print(_dump(obj, args.pretty))
    return EXIT_OK


def cmd_render(args) -> int:
    obj = io.read_json(args.input)
    fmt = args.format or ("dot" if args.output.endswith(".dot") else "svg")
    if isinstance(obj, dict) and "bags" in obj:
        if fmt != "dot":
            raise InvalidInputError("tree decompositions render to DOT only")
        text = render.td_dot(io.td_from_obj(obj))
    else:
        d = io.drawing_from_obj(obj)
        links = io.inner_links_from_obj(io.read_json(args.links)) if args.links else None
        text = render.drawing_svg(d, links) if fmt == "svg" else render.drawing_dot(d, links)
    try:
        with open(args.output, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InvalidInputError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


def cmd_oracle(args) -> int:
    d = io.load_drawing(args.input)
    fn = {"tw": brute_treewidth, "sep": brute_min_balanced_separation, "lcr": brute_convex_lcr}[args.which]
    print(_dump(io.oracle_to_obj(args.which, fn(d)), args.pretty))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="okplanar", description="Treewidth and separators of outer k-planar drawings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full pipeline report", parents=[common])
    a.add_argument("input", nargs="?")
    a.add_argument("-k", type=int, default=None)
    a.add_argument("--min-k", action="store_true", help="treat the drawing as outer min-k-planar")
    a.add_argument("--batch", metavar="DIR", help=f"analyze every *.json in DIR ({THREADS_ENV} threads)")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="emit a drawing", parents=[common])
    g.add_argument("family", choices=["prism", "random", "min-random"])
    g.add_argument("a", type=int, help="prism: rows m; random: n")
    g.add_argument("b", type=int, help="prism: columns n; random: k")
    g.add_argument("seed", type=int, nargs="?")
    g.add_argument("--max-span", type=int, default=None)
    g.set_defaults(func=cmd_generate)

    for name, func, helptext in (
        ("triangulate", cmd_triangulate, "triangulation with split trace"),
        ("decompose", cmd_decompose, "tree decomposition and separation"),
    ):
        s = sub.add_parser(name, help=helptext, parents=[common])
        s.add_argument("input")
        s.add_argument("-k", type=int, default=None)
        s.add_argument("--method", choices=METHODS, default="strong")
        if name == "decompose":
            s.add_argument("--dot", action="store_true", help="emit the bag tree as DOT")
        s.set_defaults(func=func)

    r = sub.add_parser("render", help="SVG or DOT picture", parents=[common])
    r.add_argument("input", help="drawing JSON or tree decomposition JSON")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--links", help="triangulation JSON whose inner links are drawn dashed")
    r.add_argument("--format", choices=["svg", "dot"])
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="exact brute-force values for small graphs", parents=[common])
    o.add_argument("which", choices=["tw", "sep", "lcr"])
    o.add_argument("input")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InvalidInputError, BoundViolationError, CertificateError, OracleCapError) as exc:
        sys.stderr.write(json.dumps(error_obj(exc)) + "\n")
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
