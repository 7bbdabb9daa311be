"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import kernels
from .catalog import build_entry, default_catalog, load_catalog, resolve_group
from .complex import SimplicialComplex
from .errors import CapExceeded, GroupError
from .gk import cover_number, gk_complex
from .graphs import group_graph
from .group import FiniteGroup
from .group_complexes import (
    BUILTIN_WORDS,
    CLASS_TAGS,
    class_complex,
    filtered_independence_complex,
    generation_report,
    independence_complex,
    non_generating_complex,
    strong_independence_complex,
    word_complex,
)
from .homology import homology_json
from .subgroups import classify, lattice, min_generators, order_counts
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

COMPLEX_KINDS = (
    ["independence", "strong", "nongen", "indep:commuting", "indep:nongen", "gk"]
    + [f"class:{t}" for t in CLASS_TAGS]
    + [f"word:{w}" for w in BUILTIN_WORDS]
)
GRAPH_KINDS = {"power": "power", "enhanced": "enhanced_power", "commuting": "commuting", "generating": "generating"}
LATTICE_KINDS = {"strong", "nongen"} | {f"class:{t}" for t in CLASS_TAGS}


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def build_complex(g: FiniteGroup, kind: str) -> SimplicialComplex:
    if kind == "independence":
        return independence_complex(g)
    if kind == "strong":
        return strong_independence_complex(g)
    if kind == "nongen":
        return non_generating_complex(g)
    if kind == "indep:commuting":
        return filtered_independence_complex(g, "commuting")
    if kind == "indep:nongen":
        return filtered_independence_complex(g, "non_generating")
    if kind == "gk":
        return gk_complex(g).complex
    head, _, tail = kind.partition(":")
    if head == "class" and tail in CLASS_TAGS:
        return class_complex(g, tail)
    if head == "word" and tail in BUILTIN_WORDS:
        return word_complex(g, tail)
    raise UsageError(f"unknown complex kind {kind!r}; choose from {', '.join(COMPLEX_KINDS)}")


def group_info(g: FiniteGroup) -> dict:
    out = {
        "name": g.name,
        "order": g.order,
        "order_counts": {str(k): v for k, v in order_counts(g).items()},
        "min_generators": min_generators(g, g.full_mask),
    }
    try:
        out["flags"] = classify(g).to_json()
        out["subgroups"] = len(lattice(g))
    except CapExceeded as exc:
        out["note"] = str(exc)
    return out


def _group(args, kind: str | None = None) -> FiniteGroup:
    needs = kind in LATTICE_KINDS if kind else False
    return resolve_group(args.group, needs_lattice=needs)


def cmd_group_info(args) -> int:
    _emit(group_info(_group(args)))
    return EXIT_OK


def cmd_complex_build(args) -> int:
    g = _group(args, args.kind)
    if args.kind == "gk":
        c = gk_complex(g)
        _emit(c.to_json(cover_number(c)))
        return EXIT_OK
    c = build_complex(g, args.kind)
    out = c.to_json()
    if args.report:
        out["generation"] = generation_report(g, c).to_json()
    _emit(out)
    return EXIT_OK


def cmd_graph_build(args) -> int:
    g = _group(args)
    gr = group_graph(g, GRAPH_KINDS[args.kind])
    if args.dot:
        sys.stdout.write(gr.to_dot(f"{args.kind}_{g.name}"))
    else:
        _emit(gr.to_json())
    return EXIT_OK


def cmd_homology(args) -> int:
    g = _group(args, args.kind)
    _emit(homology_json(build_complex(g, args.kind), reduced=args.reduced))
    return EXIT_OK


def _catalog(args):
    return load_catalog(args.catalog) if args.catalog else default_catalog()


def cmd_verify(args) -> int:
    outcomes = run_suite(args.suite, _catalog(args), include_slow=args.include_slow)
    failed = 0
    for o in outcomes:
        _emit(o.to_json())
        failed += not o.passed
    sys.stderr.write(f"{len(outcomes) - failed}/{len(outcomes)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_batch(args) -> int:
    status = EXIT_OK
    for e in _catalog(args):
        if e.slow and not args.include_slow:
            continue
        try:
            g = build_entry(e)
            rec = group_info(g)
            c = independence_complex(g)
            st = c.stats()
            rec["independence"] = {"dimension": st.dimension, "pure": st.is_pure, "facets": len(c.facets)}
            gk = gk_complex(g)
            rec["gk"] = gk.to_json(cover_number(gk))
        except (CapExceeded, GroupError) as exc:
            rec = {"name": e.name, "error": f"{type(exc).__name__}: {exc}"}
            if not e.reference:
                status = EXIT_FAIL
        rec["name"] = e.name
        _emit(rec)
    return status


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grouplex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group", help="group information")
    gsub = grp.add_subparsers(dest="action", required=True)
    info = gsub.add_parser("info")
    info.add_argument("--group", required=True, help="catalog name, C<n>/D<n>/S<n>/A<n>, or JSON spec")
    info.set_defaults(func=cmd_group_info)

    cx = sub.add_parser("complex", help="simplicial complexes on a group")
    cxsub = cx.add_subparsers(dest="action", required=True)
    build = cxsub.add_parser("build")
    build.add_argument("--group", required=True)
    build.add_argument("--kind", required=True, choices=COMPLEX_KINDS)
    build.add_argument("--report", action="store_true", help="add the facet generation report")
    build.set_defaults(func=cmd_complex_build)

    gr = sub.add_parser("graph", help="graphs on a group")
    grsub = gr.add_subparsers(dest="action", required=True)
    gbuild = grsub.add_parser("build")
    gbuild.add_argument("--group", required=True)
    gbuild.add_argument("--kind", required=True, choices=sorted(GRAPH_KINDS))
    gbuild.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    gbuild.set_defaults(func=cmd_graph_build)

    hom = sub.add_parser("homology", help="integral homology of a complex")
    hom.add_argument("--group", required=True)
    hom.add_argument("--kind", default="independence", choices=[k for k in COMPLEX_KINDS])
    red = hom.add_mutually_exclusive_group()
    red.add_argument("--reduced", dest="reduced", action="store_true", default=True)
    red.add_argument("--unreduced", dest="reduced", action="store_false")
    hom.set_defaults(func=cmd_homology)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="all", choices=SUITES)
    ver.add_argument("--include-slow", action="store_true")
    ver.add_argument("--catalog", help="catalog JSON file (default: shipped catalog)")
    ver.set_defaults(func=cmd_verify)

    bat = sub.add_parser("batch", help="summarize every group in a catalog")
    bat.add_argument("--catalog", help="catalog JSON file (default: shipped catalog)")
    bat.add_argument("--include-slow", action="store_true")
    bat.set_defaults(func=cmd_batch)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_CAP
    except (UsageError, GroupError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
