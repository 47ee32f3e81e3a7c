"""Command line front end.

Every subcommand prints exactly the JSON the corresponding library
serializer produces (plus a trailing newline), so scripted callers can
diff CLI output against library output. Exit codes: 0 solved or OK,
2 I/O or parse failure, 3 unsolvable (or a failed verification),
4 swap graph is not a star, 5 validation findings, 6 state limit hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .dot import export_dot
from .errors import NotStarError, ParseError, StateLimitError
from .jsonio import (parse_instance, parse_solution, serialize_instance,
                     serialize_solution)
from .model import report_to_dict, validate
from .ncl import parse_ncl, serialize_ncl, solve_ncl_bfs, validate_ncl
from .oracle import (DEFAULT_MAX_STATES, LIMIT_EXCEEDED, SOLVABLE,
                     outcome_to_dict, serialize_outcome, solve_bfs,
                     verify_sequence)
from .reduction import parse_layout, reduce, serialize_layout
from .star import decide, serialize_verdict

EXIT_OK = 0
EXIT_IO = 2
EXIT_UNSOLVABLE = 3
EXIT_NOT_STAR = 4
EXIT_INVALID = 5
EXIT_LIMIT = 6


def _fail(message, code):
    print(f"ccts: {message}", file=sys.stderr)
    return code


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True)


def cmd_validate(args):
    report = validate(parse_instance(_read(args.instance)))
    _emit(_dump(report_to_dict(report)), args.output)
    return EXIT_OK if report.ok else EXIT_INVALID


def _outcome_exit(outcome):
    if outcome.status == SOLVABLE:
        return EXIT_OK
    if outcome.status == LIMIT_EXCEEDED:
        return EXIT_LIMIT
    return EXIT_UNSOLVABLE


def cmd_solve(args):
    inst = parse_instance(_read(args.instance))
    outcome = solve_bfs(inst, max_states=args.max_states)
    _emit(serialize_outcome(outcome), args.output)
    if args.solution is not None and outcome.status == SOLVABLE:
        with open(args.solution, "w", encoding="utf-8") as fh:
            fh.write(serialize_solution(outcome.witness, inst.name) + "\n")
    return _outcome_exit(outcome)


def cmd_decide_star(args):
    inst = parse_instance(_read(args.instance))
    try:
        verdict = decide(inst, max_states=args.max_states)
    except NotStarError as exc:
        return _fail(str(exc), EXIT_NOT_STAR)
    except StateLimitError as exc:
        return _fail(f"state limit hit after {exc.states_explored} states", EXIT_LIMIT)
    _emit(serialize_verdict(verdict), args.output)
    return EXIT_OK if verdict.solvable else EXIT_UNSOLVABLE


def cmd_ncl_solve(args):
    inst = parse_ncl(_read(args.ncl))
    findings = validate_ncl(inst.graph)
    if findings:
        for finding in findings:
            print(f"ccts: {finding}", file=sys.stderr)
        return EXIT_INVALID
    outcome = solve_ncl_bfs(inst, max_states=args.max_states)
    _emit(serialize_outcome(outcome), args.output)
    return _outcome_exit(outcome)


def cmd_reduce_ncl(args):
    inst = parse_ncl(_read(args.ncl))
    try:
        output = reduce(inst, cubic=args.cubic)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INVALID)
    _emit(serialize_instance(output.instance), args.output)
    if args.output is not None:
        sidecar = args.output
        if sidecar.endswith(".json"):
            sidecar = sidecar[: -len(".json")]
        with open(sidecar + ".layout.json", "w", encoding="utf-8") as fh:
            fh.write(serialize_layout(output.layout) + "\n")
    return EXIT_OK


def cmd_verify(args):
    inst = parse_instance(_read(args.instance))
    _, seq = parse_solution(_read(args.solution))
    verified = verify_sequence(inst, seq)
    _emit(_dump({"verified": verified}), args.output)
    return EXIT_OK if verified else EXIT_UNSOLVABLE


def cmd_gen(args):
    if args.kind == "grid":
        inst, layout = generators.grid_instance(args.rows, args.cols, seed=args.seed)
    elif args.kind == "cycle":
        inst, layout = generators.cycle_instance(args.n, blanks=args.blanks, shift=args.shift)
    elif args.kind == "t0":
        inst, layout = generators.t0_instance(seed=args.seed)
    elif args.kind == "star_random":
        inst, layout = generators.star_random_instance(args.n, args.k, args.seed or 0)
    elif args.kind == "teaser":
        inst, layout = generators.teaser_instance()
    else:  # ncl_fixture
        if args.name is None:
            return _fail("ncl_fixture needs --name", EXIT_IO)
        try:
            fixture = generators.ncl_fixture(args.name)
        except ValueError as exc:
            return _fail(str(exc), EXIT_IO)
        _emit(serialize_ncl(fixture), args.output)
        return EXIT_OK
    _emit(serialize_instance(inst, layout=layout), args.output)
    return EXIT_OK


def cmd_export_dot(args):
    raw = json.loads(_read(args.instance))
    inst = parse_instance(json.dumps(raw))
    coords = raw.get("layout") if isinstance(raw, dict) else None
    gadgets = parse_layout(_read(args.layout)) if args.layout else None
    _emit(export_dot(inst, layout=coords, gadget_layout=gadgets).rstrip("\n"), args.output)
    return EXIT_OK


def cmd_serve(args):
    import uvicorn

    from .server import create_app

    app = create_app(args.instances, max_states_cap=args.max_states,
                     static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_output(p):
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")


def _add_max_states(p, default=DEFAULT_MAX_STATES):
    p.add_argument("--max-states", type=int, default=default, metavar="N",
                   help="visited-state budget for searches")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ccts",
        description="Tools for token swapping puzzles whose swaps are "
                    "constrained by a color compatibility graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance beyond what parsing enforces")
    p.add_argument("instance")
    _add_output(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="breadth-first search for a shortest swap sequence")
    p.add_argument("instance")
    p.add_argument("--solution", default=None, metavar="FILE",
                   help="also write the witness as a solution file when solvable")
    _add_max_states(p)
    _add_output(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide-star", help="polynomial decision for star swap graphs")
    p.add_argument("instance")
    _add_max_states(p)
    _add_output(p)
    p.set_defaults(func=cmd_decide_star)

    p = sub.add_parser("ncl-solve", help="search a constraint graph for a reorientation")
    p.add_argument("ncl")
    _add_max_states(p)
    _add_output(p)
    p.set_defaults(func=cmd_ncl_solve)

    p = sub.add_parser("reduce-ncl",
                       help="compile a constraint graph into a swapping instance")
    p.add_argument("ncl")
    p.add_argument("--cubic", action="store_true",
                   help="pad every vertex to degree exactly three")
    _add_output(p)
    p.epilog = "with -o OUT.json the gadget layout sidecar goes to OUT.layout.json"
    p.set_defaults(func=cmd_reduce_ncl)

    p = sub.add_parser("verify", help="replay a swap sequence against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated instance or fixture")
    p.add_argument("kind", choices=("grid", "cycle", "t0", "star_random",
                                    "teaser", "ncl_fixture"))
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--blanks", type=int, default=1)
    p.add_argument("--shift", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--name", default=None, help="fixture name for ncl_fixture")
    _add_output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="Graphviz rendering of an instance")
    p.add_argument("instance")
    p.add_argument("--layout", default=None,
                   help="gadget layout sidecar; gadgets become cluster subgraphs")
    _add_output(p)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("serve", help="run the HTTP API (and static UI, if built)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--instances", default="instances", metavar="DIR")
    p.add_argument("--static", default="frontend/dist", metavar="DIR",
                   help="directory with the built web UI; skipped if absent")
    _add_max_states(p, default=2_000_000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(str(exc), EXIT_IO)
    except json.JSONDecodeError as exc:
        return _fail(f"invalid JSON: {exc}", EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())
