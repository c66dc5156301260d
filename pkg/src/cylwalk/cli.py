"""Command line interface.

Every verb reads JSON from standard input (when it needs input) and writes
compact JSON to standard output.  Exit status is 0 on success, 1 when the
input is not a valid object (a JSON error report goes to standard error)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence, TextIO

from . import jsonio as J
from .enumeration import (
    a_series,
    count_oct,
    count_sct,
    d4_coefficient,
    motzkin_bounded,
    motzkin_bounded_noflat_top,
)
from .growth import complete_from_path, grow_from_TU, retype_oct, validate_diagram
from .insertion import crs_forward, crs_inverse, phi, phi_inverse, reverse_walk_bijection
from .models import (
    COVERS,
    Necklace,
    corner,
    enumerate_walks,
    lift_walk,
    map_f,
    map_g,
    map_h,
    map_q,
    project_walk,
    reverse_complement,
    tableau_of_walk,
    walk_of_tableau,
    walk_to_tasep,
    walk_vertices,
    word_of_point,
)
from .shapes import (
    DomainError,
    Shape,
    addable_rows,
    boundary_word,
    complement,
    conjugate,
    corner_count,
    removable_rows,
)
from .tableaux import random_oct, random_sct
from .verify import DEFAULT_SEED, run_all


def _read(stdin: TextIO) -> Any:
    return J.loads(stdin.read())


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace("[", "").replace("]", "").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_shape(args, stdin) -> Any:
    s = J.decode_shape(_read(stdin))
    if args.conjugate:
        return J.encode_shape(conjugate(s))
    if args.complement:
        return J.encode_shape(complement(s))
    if args.boundary:
        return {"word": boundary_word(s)}
    if args.corners:
        return {"addable": addable_rows(s), "removable": removable_rows(s), "corner_count": corner_count(s)}
    return J.encode_shape(s)


def cmd_map(args, stdin) -> Any:
    obj = _read(stdin)
    if args.f:
        return J.encode_vertex("simplex", map_f(J.decode_shape(obj)))
    if args.g:
        return J.encode_vertex("necklace", map_g(J.decode_vertex("simplex", obj)))
    if args.h:
        return J.encode_vertex("tasep", map_h(J.decode_shape(obj)))
    if args.q:
        return J.encode_vertex("necklace", map_q(J.decode_vertex("tasep", obj)))
    return J.encode_vertex("tasep", reverse_complement(J.decode_vertex("tasep", obj)))


def cmd_walk(args, stdin) -> Any:
    obj = _read(stdin)
    if args.to_simplex:
        return J.encode_walk(walk_of_tableau(J.decode_tableau(obj)))
    if args.to_tableau:
        alpha = J.decode_shape(J._field(obj, "alpha", "input"))
        return J.encode_oct(tableau_of_walk(alpha, J.decode_walk(J._field(obj, "walk", "input"))))
    if args.to_tasep:
        return J.encode_walk(walk_to_tasep(J.decode_walk(obj), anchor=args.anchor))
    if args.project:
        return J.encode_walk(project_walk(args.project, J.decode_walk(obj)))
    if args.lift:
        src = COVERS[args.lift][0]
        start = J.decode_vertex(src, J._field(obj, "start", "input"))
        return J.encode_walk(lift_walk(args.lift, start, J.decode_walk(J._field(obj, "walk", "input"))))
    walk = J.decode_walk(obj)
    return [J.encode_vertex(walk.model, v) for v in walk_vertices(walk)]


def cmd_crs(args, stdin) -> Any:
    obj = _read(stdin)
    P, Q = crs_forward(J.decode_sct(J._field(obj, "T", "input")), J.decode_sct(J._field(obj, "U", "input")))
    return {"P": J.encode_sct(P), "Q": J.encode_sct(Q)}


def cmd_crs_inv(args, stdin) -> Any:
    obj = _read(stdin)
    T, U = crs_inverse(J.decode_sct(J._field(obj, "P", "input")), J.decode_sct(J._field(obj, "Q", "input")))
    return {"T": J.encode_sct(T), "U": J.encode_sct(U)}


def cmd_grow(args, stdin) -> Any:
    obj = _read(stdin)
    g = grow_from_TU(J.decode_sct(J._field(obj, "T", "input")), J.decode_sct(J._field(obj, "U", "input")))
    return J.encode_diagram(g)


def cmd_complete(args, stdin) -> Any:
    obj = _read(stdin)
    shapes = [J.decode_shape(s) for s in J._field(obj, "shapes", "path")]
    return J.encode_diagram(complete_from_path(J._field(obj, "type", "path"), shapes))


def cmd_retype(args, stdin) -> Any:
    return J.encode_oct(retype_oct(J.decode_oct(_read(stdin)), args.to, symmetric=args.symmetric))


def cmd_validate_diagram(args, stdin) -> Any:
    v = validate_diagram(J.decode_diagram(_read(stdin)))
    if v is not None:
        raise DomainError(f"square at ({v.x},{v.y}): {v.reason}")
    return {"ok": True}


def cmd_count(args, stdin) -> Any:
    model = args.model
    n = args.n
    w = args.type_word if args.type_word is not None else "+" * (n or 0)
    if model in ("motzkin", "motzkin-noflat"):
        _need(args, "n", "h")
        f = motzkin_bounded if model == "motzkin" else motzkin_bounded_noflat_top
        return f(n, args.h)
    if model == "a":
        _need(args, "n", "L")
        return a_series(n, args.L)
    if model == "d4":
        _need(args, "n", "L")
        return d4_coefficient(n, args.L)
    _need(args, "d", "L")
    d, L = args.d, args.L
    if model in ("sct-inner", "sct-outer"):
        _need(args, "n", "shape")
        return count_sct(d, L, args.shape, n, model.split("-")[1])
    if model == "oct":
        _need(args, "shape")
        return count_oct(d, L, args.shape, w)
    if model == "shapes":
        start = Shape(d, L, tuple(args.shape)) if args.shape else Shape(d, L, (0,) * d)
    elif model == "simplex":
        start = corner(d, L) if args.from_corner or args.start is None else tuple(_ints(args.start))
    elif model == "tasep":
        start = word_of_point(corner(d, L)) if args.from_corner or args.start is None else args.start
    else:
        bits = word_of_point(corner(d, L)) if args.from_corner or args.start is None else args.start
        start = map_q(bits) if not isinstance(bits, Necklace) else bits
    start = J.decode_vertex(model, J.encode_vertex(model, start))
    return enumerate_walks(model, start, w)


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"this model needs {' '.join(missing)}")


def cmd_random(args, stdin) -> Any:
    if args.type_word is not None:
        return J.encode_oct(random_oct(args.d, args.L, args.shape, args.type_word, args.seed))
    return J.encode_sct(random_sct(args.d, args.L, args.shape, args.n, args.seed))


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cylwalk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("shape", help="validate or transform a shape")
    g = s.add_mutually_exclusive_group()
    for flag in ("validate", "conjugate", "complement", "boundary", "corners"):
        g.add_argument(f"--{flag}", action="store_true")
    s.set_defaults(run=cmd_shape)

    s = sub.add_parser("map", help="apply a covering map or the reverse complement")
    g = s.add_mutually_exclusive_group(required=True)
    for flag in ("f", "g", "h", "q", "rc"):
        g.add_argument(f"--{flag}", action="store_true")
    s.set_defaults(run=cmd_map)

    s = sub.add_parser("walk", help="convert between walks and tableaux")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--to-simplex", action="store_true", help="tableau to simplex walk")
    g.add_argument("--to-tableau", action="store_true", help='{"alpha", "walk"} to oscillating tableau')
    g.add_argument("--to-tasep", action="store_true", help="simplex walk to particle walk")
    g.add_argument("--project", choices=sorted(COVERS), help="image of a walk under a cover")
    g.add_argument("--lift", choices=sorted(COVERS), help='lift {"start", "walk"} through a cover')
    g.add_argument("--vertices", action="store_true", help="list the vertices visited (default)")
    s.add_argument("--anchor", choices=("start", "end"), default="start")
    s.set_defaults(run=cmd_walk)

    for verb, fn, text in (
        ("crs", cmd_crs, 'cylindric Robinson-Schensted of {"T", "U"}'),
        ("crs-inv", cmd_crs_inv, 'inverse correspondence of {"P", "Q"}'),
        ("grow", cmd_grow, 'growth diagram of {"T", "U"}'),
        ("complete", cmd_complete, 'complete a diagram from {"type", "shapes"}'),
        ("validate-diagram", cmd_validate_diagram, "check a growth diagram"),
    ):
        sub.add_parser(verb, help=text).set_defaults(run=fn)
    sub.add_parser("phi", help="phi of a tableau").set_defaults(
        run=lambda a, i: J.encode_sct(phi(J.decode_sct(_read(i)))))
    sub.add_parser("phi-inv", help="inverse of phi").set_defaults(
        run=lambda a, i: J.encode_sct(phi_inverse(J.decode_sct(_read(i)))))
    sub.add_parser("reverse-walk", help="forward walk from x to a walk ending at x").set_defaults(
        run=lambda a, i: J.encode_walk(reverse_walk_bijection(J.decode_walk(_read(i)))))

    s = sub.add_parser("retype", help="change the type of an oscillating tableau")
    s.add_argument("--to", required=True, help="new type word over +/-")
    s.add_argument("--symmetric", action="store_true", help="keep only the start shape fixed")
    s.set_defaults(run=cmd_retype)

    s = sub.add_parser("count", help="count walks or tableaux")
    s.add_argument("--model", required=True, choices=(
        "simplex", "shapes", "tasep", "necklace", "sct-inner", "sct-outer", "oct",
        "motzkin", "motzkin-noflat", "a", "d4"))
    s.add_argument("--d", type=int)
    s.add_argument("--L", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--shape", type=_ints, help="window, e.g. 1,1,0")
    s.add_argument("--start", help="start vertex: coordinates 1,0,2 or a bit string")
    s.add_argument("--type-word")
    s.add_argument("--from-corner", action="store_true")
    s.add_argument("--plain", action="store_true", help="print the bare integer")
    s.set_defaults(run=cmd_count)

    s = sub.add_parser("random", help="sample a tableau by uniform steps")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--L", type=int, required=True)
    s.add_argument("--shape", type=_ints, required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--type-word")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(run=cmd_random)

    s = sub.add_parser("verify", help="run acceptance criteria")
    s.add_argument("criteria", nargs="*", default=["all"], help="numbers 1-11 or 'all'")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(run=None)
    return p


def _verify(args, stdout: TextIO) -> int:
    if args.criteria == ["all"]:
        numbers = None
    else:
        try:
            numbers = [int(c) for c in args.criteria]
        except ValueError:
            raise UsageError("criteria are numbers 1-11 or 'all'") from None
        if any(not 1 <= k <= 11 for k in numbers):
            raise UsageError("criteria are numbers 1-11")
    results = run_all(numbers, args.seed)
    for r in results:
        print(r.line(), file=stdout)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed", file=stdout)
    return 0 if passed == len(results) else 1


def run(argv: Sequence[str] | None = None, stdin: TextIO = sys.stdin,
        stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "verify":
            return _verify(args, stdout)
        result = args.run(args, stdin)
        if args.verb == "count" and not isinstance(result, dict):
            result = result if args.plain else {"count": result}
        print(result if isinstance(result, int) else J.dumps(result), file=stdout)
        return 0
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"cylwalk: error: {exc}", file=stderr)
        return 2
    except (DomainError, KeyError, TypeError) as exc:
        kind = getattr(exc, "kind", "input")
        message = str(exc) if not isinstance(exc, KeyError) else f"missing field {exc}"
        print(J.dumps({"error": {"kind": kind, "message": message}}), file=stderr)
        return 1


def main() -> None:
    sys.exit(run())
