"""Command line front end.

Machine-readable results go to stdout (a single integer for the counting
subcommands); commentary and diagnostics go to stderr.  Exit codes: 0 on
success, 1 on a validation failure (bad parameters, failed axioms, invalid
diagram data), 2 on a malformed input file.
"""

import argparse
import os
import sys
from importlib import resources

from .coloring import count_alexander, count_colorings
from .diagram import (
    DiagramError,
    ROLE_VARIANTS,
    faces,
    parse_diagram,
    realize,
    traverse,
)
from .gauss import GaussCodeError, parse_gauss
from .knotdata import KnotTableError, batch_invariants, load_table, write_csv
from .search import SearchBoundExceeded, enumerate_virtual_tribrackets
from .tables import (
    AlexanderParams,
    TableError,
    alexander_classical,
    format_structure,
    load_structure,
    verify,
    virtual_alexander,
)


class _CliFailure(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _fail(message, status=1):
    raise _CliFailure(message, status)


def _find_tensor(path):
    """Resolve a tensor file argument: as given, else from bundled data."""
    if os.path.exists(path):
        return path
    if os.sep not in path:
        candidate = resources.files("tribrackets").joinpath("data", path)
        if candidate.is_file():
            return str(candidate)
    _fail("tensor file not found: %s" % path, 2)


def _load_structure(path):
    try:
        return load_structure(_find_tensor(path))
    except TableError as exc:
        _fail("bad tensor file %s: %s" % (path, exc), 2)
    except OSError as exc:
        _fail(str(exc), 2)


def _diagram_from_args(args):
    if getattr(args, "gauss", None) is not None:
        try:
            return realize(parse_gauss(args.gauss))
        except (GaussCodeError, DiagramError) as exc:
            _fail("bad gauss code: %s" % exc)
    try:
        with open(args.diagram, "r", encoding="utf-8") as fh:
            return parse_diagram(fh.read())
    except OSError as exc:
        _fail(str(exc), 2)
    except DiagramError as exc:
        _fail("bad diagram file %s: %s" % (args.diagram, exc), 2)


def _variant(args):
    return args.variant


def _out_stream(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def cmd_verify(args):
    structure = _load_structure(args.tensor)
    report = verify(structure)
    print(
        "order %d: classical %s, virtual %s, violations %d"
        % (
            report.order,
            "three-determined" if report.classical_determined else "NOT three-determined",
            "three-determined" if report.virtual_determined else "NOT three-determined",
            len(report.violations),
        ),
        file=sys.stderr,
    )
    for v in report.violations:
        print("  %s" % (v,), file=sys.stderr)
    print("verified" if report.ok else "failed")
    return 0 if report.ok else 1


def cmd_alexander(args):
    from .tables import format_tables

    try:
        if args.v is None:
            classical = alexander_classical(args.mod, args.x, args.y)
            text = format_tables(
                classical,
                None,
                comment="linear classical tensor m=%d x=%d y=%d"
                % (args.mod, args.x, args.y),
            )
        else:
            structure = virtual_alexander(args.mod, args.x, args.y, args.v)
            text = format_structure(
                structure,
                comment="linear tensor pair m=%d x=%d y=%d v=%d"
                % (args.mod, args.x, args.y, args.v),
            )
    except TableError as exc:
        _fail(str(exc))
    stream, owned = _out_stream(args.out)
    try:
        stream.write(text)
    finally:
        if owned:
            stream.close()
    return 0


def cmd_count(args):
    structure = _load_structure(args.tensor)
    report = verify(structure)
    if not report.ok:
        _fail("tensor file does not verify; run the verify subcommand")
    d = _diagram_from_args(args)
    try:
        value = count_colorings(d, structure, variant=_variant(args))
    except DiagramError as exc:
        _fail("bad diagram: %s" % exc)
    print(value.count)
    return 0


def cmd_count_alexander(args):
    try:
        params = AlexanderParams(args.mod, args.x, args.y, args.v)
    except TableError as exc:
        _fail(str(exc))
    d = _diagram_from_args(args)
    try:
        value = count_alexander(d, params, variant=_variant(args))
    except DiagramError as exc:
        _fail("bad diagram: %s" % exc)
    print(value.count)
    return 0


def cmd_enumerate(args):
    try:
        stream = enumerate_virtual_tribrackets(args.order, limit=args.limit)
        structures = list(stream)
    except SearchBoundExceeded as exc:
        _fail(str(exc))
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        for i, st in enumerate(structures, start=1):
            name = os.path.join(args.out, "order%d-%03d.tri" % (args.order, i))
            with open(name, "w", encoding="utf-8") as fh:
                fh.write(format_structure(st, comment="enumerated %d/%d" % (i, len(structures))))
        print(len(structures))
        return 0
    for i, st in enumerate(structures, start=1):
        sys.stdout.write("# structure %d\n" % i)
        sys.stdout.write(format_structure(st))
        sys.stdout.write("\n")
    print("%d structures" % len(structures), file=sys.stderr)
    return 0


def cmd_table(args):
    knots = args.knots
    if not os.path.exists(knots) and os.sep not in knots:
        candidate = resources.files("tribrackets").joinpath("data", knots)
        if candidate.is_file():
            knots = str(candidate)
    try:
        table = load_table(knots)
    except KnotTableError as exc:
        _fail(str(exc), 2)
    except OSError as exc:
        _fail(str(exc), 2)
    structures = []
    for path in args.tensor:
        st = _load_structure(path)
        if not verify(st).ok:
            _fail("tensor file %s does not verify" % path)
        if st.name is None:
            st.name = os.path.splitext(os.path.basename(path))[0]
        structures.append(st)
    rows = batch_invariants(table, structures, jobs=args.jobs)
    write_csv(rows, args.out)
    failures = [r for r in rows if r.error is not None]
    for r in failures:
        print("row %s/%s failed: %s" % (r.structure, r.knot, r.error), file=sys.stderr)
    if args.figure is not None:
        from .report import render_figure

        render_figure(rows, args.figure)
        print("figure written to %s" % args.figure, file=sys.stderr)
    print("%d rows written to %s" % (len(rows), args.out), file=sys.stderr)
    return 0


def cmd_realize(args):
    try:
        d = realize(parse_gauss(args.gauss))
    except (GaussCodeError, DiagramError) as exc:
        _fail("bad gauss code: %s" % exc)
    fd = faces(d)
    from .diagram import format_diagram

    sys.stdout.write(format_diagram(d))
    print("faces %d" % fd.n_faces)
    euler_ok = all(v - e + f == 2 for v, e, f in fd.pieces)
    print("euler %s" % ("ok" if euler_ok else "violated"))
    print("code %s" % traverse(d), file=sys.stderr)
    return 0 if euler_ok else 1


def build_parser():
    top = argparse.ArgumentParser(
        prog="tribrackets",
        description="Counting invariants of virtual knots and links "
        "from two-operation ternary coloring structures.",
    )
    top.add_argument(
        "--variant",
        choices=sorted(ROLE_VARIANTS),
        default=None,
        help="debug override of the frozen role convention",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="check the axioms of a tensor file")
    p.add_argument("tensor")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alexander", help="emit a linear tensor (pair)")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_alexander)

    for name, fn in (("count", cmd_count), ("count-alexander", cmd_count_alexander)):
        p = sub.add_parser(name, help="count colorings of a diagram")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--gauss")
        src.add_argument("--diagram")
        if name == "count":
            p.add_argument("--tensor", required=True)
        else:
            p.add_argument("--mod", type=int, required=True)
            p.add_argument("--x", type=int, required=True)
            p.add_argument("--y", type=int, required=True)
            p.add_argument("--v", type=int, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate", help="enumerate structures of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", default=None, help="directory for one file per structure")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="batch invariants over a knot table")
    p.add_argument("--knots", required=True)
    p.add_argument("--tensor", action="append", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--figure", default=None, help="also render the counts grid")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("realize", help="realize a gauss code as a diagram")
    p.add_argument("--gauss", required=True)
    p.set_defaults(func=cmd_realize)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.subcommand in ("verify", "alexander", "enumerate", "table", "realize"):
        if getattr(args, "variant", None):
            print("note: --variant has no effect on %s" % args.subcommand, file=sys.stderr)
    try:
        return args.func(args)
    except _CliFailure as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.status
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
