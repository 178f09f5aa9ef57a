"""``polyneigh`` command line.

Exit status: 0 success, 1 a requested property or verification check failed,
2 usage or parse error, 3 geometric validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, classify, construct, faces, hull, jsonio, verify
from .errors import GeometryError, PolyneighError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GEOMETRY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_json(path):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_USAGE)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}", EXIT_USAGE)


def _read_polytope(path) -> hull.Polytope:
    data = _read_json(path)
    try:
        return hull.Polytope.from_dict(data)
    except GeometryError:
        raise
    except PolyneighError as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE)


def _emit(args, obj):
    text = jsonio.dumps(obj)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_facets(args):
    p = _read_polytope(args.input)
    _emit(args, hull.enumerate_facets(p, args.algorithm).to_dict())
    return EXIT_OK


def cmd_faces(args):
    p = _read_polytope(args.input)
    fs = hull.enumerate_facets(p, args.algorithm)
    _emit(args, faces.all_faces(fs, p).to_dict())
    return EXIT_OK


def cmd_check(args):
    p = _read_polytope(args.input)
    fs = hull.enumerate_facets(p, args.algorithm)
    st = faces.all_faces(fs, p)
    _emit(args, classify.classification_report(st, fs).to_dict())
    failed = False
    requested = []
    if args.neighborly is not None:
        requested.append((f"neighborly {args.neighborly}", classify.is_k_neighborly(st, fs, args.neighborly)))
    if args.simplicial is not None:
        requested.append((f"simplicial {args.simplicial}", classify.is_m_simplicial(st, args.simplicial)))
    if args.simple is not None:
        requested.append((f"simple {args.simple}", classify.is_m_simple(st, args.simple)))
    for name, ok in requested:
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=sys.stderr)
        failed |= not ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_construct(args):
    kind = args.kind
    if kind == "cyclic":
        p = construct.cyclic(args.dim, args.vertices)
    elif kind == "pyramid":
        p = construct.pyramid(_read_polytope(args.input), args.times)
    elif kind == "join":
        p = construct.join(_read_polytope(args.a), _read_polytope(args.b))
    elif kind == "join-family":
        p = construct.join_family(args.n, args.m)
    else:
        p = construct.example(args.name)
    text = construct.dumps_polytope(p)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bound(args):
    name = args.name
    if name == "msn":
        rep = bounds.BoundReport(name, {"d": args.dim, "v": args.vertices},
                                 value=bounds.msn(args.dim, args.vertices))
    elif name == "gtheorem":
        params = {"d": args.dim, "v": args.vertices, "k": args.k, "j": args.j}
        rep = bounds.BoundReport(name, params, value=bounds.g_theorem_face_bound(
            args.dim, args.vertices, args.k, args.j))
    elif name == "barnette":
        rep = bounds.BoundReport(name, {"d": args.dim, "v": args.vertices},
                                 value=bounds.barnette(args.dim, args.vertices))
    elif name == "neighborly":
        rep = bounds.BoundReport(name, {"k": args.k, "v": args.vertices},
                                 value=bounds.neighborly_max_facets(args.k, args.vertices))
    elif name == "dim5":
        rep = bounds.BoundReport(name, {"v": args.vertices},
                                 value=bounds.dim5_lower_bound(args.vertices))
    else:
        rep = bounds.report_known(args.dim, args.vertices)
    _emit(args, rep.to_dict())
    return EXIT_OK


def cmd_verify_paper(args):
    report = verify.run_checks(args.fixtures, args.filter)
    if args.json:
        _emit(args, report.to_dict())
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_FAIL


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise CliError(f"{args.kind if hasattr(args, 'kind') else args.name}: missing "
                       + ", ".join("--" + m.replace("_", "-") for m in missing), EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyneigh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def polytope_cmd(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--input", required=True, help="Polytope JSON file ('-' for stdin)")
        sp.add_argument("--algorithm", choices=hull.ALGORITHMS, default="oracle")
        sp.add_argument("--output", help="write JSON here instead of stdout")
        return sp

    polytope_cmd("facets", "enumerate facets").set_defaults(func=cmd_facets)
    polytope_cmd("faces", "enumerate all faces and the f-vector").set_defaults(func=cmd_faces)

    sp = polytope_cmd("check", "classify neighborliness, simpliciality, simplicity")
    sp.add_argument("--neighborly", type=int, metavar="K")
    sp.add_argument("--simplicial", type=int, metavar="M")
    sp.add_argument("--simple", type=int, metavar="M")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("construct", help="build a polytope")
    sp.add_argument("kind", choices=("cyclic", "pyramid", "join", "example", "join-family"))
    sp.add_argument("--dim", type=int)
    sp.add_argument("--vertices", type=int)
    sp.add_argument("--input", help="base polytope for pyramid")
    sp.add_argument("--times", type=int, default=1, help="pyramid folds")
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--name")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bound", help="evaluate a closed-form bound")
    sp.add_argument("name", choices=("msn", "gtheorem", "barnette", "neighborly", "dim5", "mn-known"))
    sp.add_argument("--dim", type=int)
    sp.add_argument("--vertices", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("verify-paper", help="run the reproduction checks")
    sp.add_argument("--filter", help="only run check groups with this prefix (e.g. fig1)")
    sp.add_argument("--fixtures", help="directory holding p46.json ... p610.json")
    sp.add_argument("--json", action="store_true", help="emit the report as JSON")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_verify_paper)
    return parser


_REQUIRED = {
    ("construct", "cyclic"): ("dim", "vertices"),
    ("construct", "pyramid"): ("input",),
    ("construct", "join"): ("a", "b"),
    ("construct", "example"): ("name",),
    ("construct", "join-family"): ("n", "m"),
    ("bound", "msn"): ("dim", "vertices"),
    ("bound", "gtheorem"): ("dim", "vertices", "k", "j"),
    ("bound", "barnette"): ("dim", "vertices"),
    ("bound", "neighborly"): ("k", "vertices"),
    ("bound", "dim5"): ("vertices",),
    ("bound", "mn-known"): ("dim", "vertices"),
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        key = (args.command, getattr(args, "kind", None) or getattr(args, "name", None))
        if key in _REQUIRED:
            _need(args, *_REQUIRED[key])
        return args.func(args)
    except CliError as exc:
        print(f"polyneigh: {exc}", file=sys.stderr)
        return exc.code
    except GeometryError as exc:
        print(f"polyneigh: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except PolyneighError as exc:
        print(f"polyneigh: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
