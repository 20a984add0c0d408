"""Command-line front end.

Exit status: 0 on success, 1 when ``equal`` finds different elements, 2 on
any parse or validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .calculus import canonical_numbering, concatenate, equal, reduce
from .diagram import format_diagram, invert, validate
from .errors import BraidError, ValidationError
from .files import file_kind, load_diagram, load_hmap, load_triple, read_text
from .fss import evaluate, format_triple, psi, triple_from_diagram, validate_triple
from .presentation import format_presentation, parse_presentation, validate_tree_like
from .render import render_svg
from .treespace import PointPrefix, format_address, parse_address


def _valid_diagram(path):
    d = load_diagram(path)
    report = validate(d)
    if not report.ok:
        raise ValidationError(f"{path}: " + "; ".join(v.message for v in report.violations))
    return d


def _same_presentation(*ds):
    digests = {d.presentation.digest() for d in ds}
    if len(digests) != 1:
        raise ValidationError("inputs reference different presentations")


def _ref(p):
    # catalog content is written under its catalog name; file references are copied
    return catalog.catalog_name(p) or p.name


def _show(d, ref=None):
    wmap, tmap = canonical_numbering(d)
    return format_diagram(d.relabel_ids(wmap, tmap), ref or _ref(d.presentation))


def _emit(text, out=None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    kind = file_kind(args.file)
    if kind == "presentation":
        parse_presentation(read_text(args.file))
    elif kind == "diagram":
        report = validate(load_diagram(args.file))
        if not report.ok:
            for v in report.violations:
                print(f"{v.code}: {v.message}")
            return 2
    elif kind == "triple":
        report = validate_triple(load_triple(args.file))
        if not report.ok:
            for problem in report.problems:
                print(problem)
            return 2
    else:
        load_hmap(args.file)
    print("ok")
    return 0


def cmd_treelike(args):
    report = validate_tree_like(parse_presentation(read_text(args.file)))
    if report.is_tree_like:
        print("tree-like")
    else:
        print("not tree-like")
        for i, code in report.violations:
            print(f"relation {i}: {code}")
    return 0


def cmd_reduce(args):
    _emit(_show(reduce(_valid_diagram(args.file))), args.output)
    return 0


def cmd_compose(args):
    a, b = _valid_diagram(args.first), _valid_diagram(args.second)
    _same_presentation(a, b)
    _emit(_show(reduce(concatenate(a, b))))
    return 0


def cmd_invert(args):
    _emit(_show(invert(_valid_diagram(args.file))))
    return 0


def cmd_equal(args):
    a, b = _valid_diagram(args.first), _valid_diagram(args.second)
    _same_presentation(a, b)
    same = equal(a, b)
    print("equal" if same else "different")
    return 0 if same else 1


def _valid_triple(path):
    t = load_triple(path)
    return t.check()


def cmd_to_diagram(args):
    t = _valid_triple(args.file)
    _emit(_show(reduce(psi(t)), _ref(t.space.source)))
    return 0


def cmd_to_triple(args):
    d = _valid_diagram(args.file)
    t = triple_from_diagram(d)
    _emit(format_triple(t, _ref(d.presentation)))
    return 0


def cmd_eval(args):
    t = _valid_triple(args.file)
    image = evaluate(t, PointPrefix(parse_address(args.point), args.terminal))
    addr = image.address
    if args.depth is not None:
        addr = addr[:args.depth]
    print(format_address(addr))
    return 0


def cmd_catalog(args):
    params = {}
    if args.name == "thompson":
        params["d"] = args.d
    elif args.name == "houghton":
        params["n"] = args.n
    p, base = catalog.builtin(args.name, **params)
    print(format_presentation(p), end="")
    print(f"# base: {base}")
    return 0


def cmd_interpret_houghton(args):
    _emit(catalog.format_hmap(catalog.houghton_interpret(_valid_diagram(args.file))))
    return 0


def cmd_build_houghton(args):
    hmap = load_hmap(args.file)
    _emit(_show(catalog.houghton_build(hmap), f"houghton({hmap.n})"))
    return 0


def cmd_embed_relabel(args):
    d = _valid_diagram(args.file)
    if d.presentation != catalog.qaut():
        raise ValidationError("embed-relabel needs a diagram over qaut")
    _emit(_show(catalog.relabel_embed(d), "thompson(3)"))
    return 0


def cmd_render(args):
    _emit(render_svg(_valid_diagram(args.file)), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="braidfss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, *files, help=None):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    verb("validate", cmd_validate, "file", help="check a .sgp/.bdg/.fst/.hmap file")
    verb("treelike", cmd_treelike, "file", help="report whether a presentation is tree-like")
    verb("reduce", cmd_reduce, "file", help="cancel all dipoles").add_argument("-o", "--output")
    verb("compose", cmd_compose, "first", "second", help="FIRST after SECOND: FIRST stacked on SECOND")
    verb("invert", cmd_invert, "file", help="mirror a diagram top to bottom")
    verb("equal", cmd_equal, "first", "second", help="equality modulo dipoles")
    verb("to-diagram", cmd_to_diagram, "file", help="defining triple to reduced diagram")
    verb("to-triple", cmd_to_triple, "file", help="diagram to coarsest defining triple")
    ev = verb("eval", cmd_eval, "file", help="apply a defining triple to a point prefix")
    ev.add_argument("--point", required=True)
    ev.add_argument("--terminal", action="store_true", help="the point is a leaf (isolated point)")
    ev.add_argument("--depth", type=int, help="print at most this many edges of the image")
    cat = sub.add_parser("catalog", help="print a built-in presentation")
    cat.add_argument("name", choices=catalog.BUILTIN_NAMES)
    cat.add_argument("--d", type=int, default=2)
    cat.add_argument("--n", type=int, default=2)
    cat.set_defaults(func=cmd_catalog)
    verb("interpret-houghton", cmd_interpret_houghton, "file", help="diagram over houghton(n) to a ray map")
    verb("build-houghton", cmd_build_houghton, "file", help="ray map (.hmap) to a diagram")
    verb("embed-relabel", cmd_embed_relabel, "file", help="qaut diagram to thompson(3) by a -> x")
    verb("render", cmd_render, "file", help="draw a diagram as SVG").add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BraidError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
