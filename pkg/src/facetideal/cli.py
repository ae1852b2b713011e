"""Command-line front end.

    facetideal analyze example.facets
    facetideal is-tree bad.facets          # exit 1 when not a tree
    facetideal random --seed 7 --mode random_tree | facetideal is-tree -

Input is a ``.facets`` text file or its JSON mirror (``-`` reads stdin).
Output is JSON unless ``--format pretty``.  Exit codes: 0 success, 1 a
negative verdict from a yes/no verb, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cm import (
    artinian_reduction,
    cm_reisner,
    cm_tree,
    polarization_renaming,
    polarize,
    verify_polarization_roundtrip,
)
from .complex import dimension, is_connected
from .covers import independence, minimal_vertex_covers
from .errors import FacetIdealError
from .generate import MODES, GeneratorConfig, generate
from .ideals import decompose, facet_ideal, nonface_ideal
from .io import read_complex
from .transform import graft, is_grafted, localize
from .trees import is_forest, is_tree, leaf_report, leaves

OK, NEGATIVE, ERROR = 0, 1, 2


def _summary(c) -> dict:
    return {
        "vertices": list(c.universe),
        "facets": [list(f) for f in c.facets],
        "dimension": dimension(c),
        "connected": is_connected(c),
    }


def _covers_json(c) -> dict:
    cov = minimal_vertex_covers(c)
    ind = independence(c)
    return {
        "alpha": cov.alpha,
        "beta": ind.beta,
        "unmixed": cov.unmixed,
        "covers": [list(x) for x in cov.covers],
        "independent_sets": [[list(c.facets[i]) for i in w] for w in ind.witnesses],
    }


def cmd_analyze(c, args):
    cert = is_tree(c)
    dec = is_grafted(c)
    cm = {"tree": cm_tree(c) if cert.verdict else None, "reisner": None}
    if args.reisner:
        cm["reisner"] = cm_reisner(c, args.char, jobs=args.jobs).to_dict(with_links=False)
    report = {
        "complex": _summary(c),
        "covers": _covers_json(c),
        "leaves": [list(f) for f in leaves(c)],
        "tree": cert.to_dict(),
        "grafting": dec.to_dict() if dec else None,
        "decomposition": decompose(c).to_dict(),
        "cm": cm,
    }
    return report, OK


def cmd_covers(c, args):
    return _covers_json(c), OK


def cmd_leaves(c, args):
    reports = [leaf_report(c, f).to_dict() for f in c.facets]
    return {"leaves": [list(f) for f in leaves(c)], "facets": reports}, OK


def cmd_is_tree(c, args):
    if args.forest:
        cert = is_forest(c)
        return cert.to_dict("forest"), OK if cert.verdict else NEGATIVE
    cert = is_tree(c)
    return cert.to_dict("tree"), OK if cert.verdict else NEGATIVE


def cmd_localize(c, args):
    kept = [v for v in args.keep.replace(",", " ").split() if v]
    return localize(c, kept).to_dict(), OK


def cmd_graft(c, args):
    out = graft(c, args.partition)
    return {"complex": out.to_dict(), "grafting": is_grafted(out).to_dict()}, OK


def cmd_ideal(c, args):
    ideal = nonface_ideal(c) if args.nonface else facet_ideal(c)
    return {"kind": "nonface" if args.nonface else "facet", **ideal.to_dict()}, OK


def cmd_decompose(c, args):
    return decompose(c).to_dict(), OK


def cmd_cm(c, args):
    out = {"tree": None, "reisner": None}
    verdicts = []
    if args.method in ("tree", "both"):
        if args.method == "tree" or is_tree(c).verdict:
            out["tree"] = cm_tree(c)
            verdicts.append(out["tree"])
    if args.method in ("reisner", "both"):
        rep = cm_reisner(c, args.char, jobs=args.jobs)
        out["reisner"] = rep.to_dict(with_links=args.links)
        verdicts.append(rep.cm)
    if len(set(verdicts)) > 1:
        out["disagreement"] = True
    return out, OK if all(verdicts) else NEGATIVE


def cmd_polarize_check(c, args):
    red = artinian_reduction(c)
    pol = polarize(red.generators())
    names = polarization_renaming(red, pol)
    ok = verify_polarization_roundtrip(c)
    return {
        "roundtrip": ok,
        "reduction": red.to_dict(),
        "polarization": pol.to_dict(),
        "renaming": names,
    }, OK if ok else NEGATIVE


def cmd_random(args):
    cfg = GeneratorConfig(
        seed=args.seed,
        mode=args.mode,
        max_vertices=args.max_vertices,
        max_facets=args.max_facets,
        max_facet_size=args.max_facet_size,
    )
    return generate(cfg).to_dict(), OK


VERBS = {
    "analyze": (cmd_analyze, "full report: covers, leaves, tree test, grafting, decomposition, CM"),
    "covers": (cmd_covers, "minimal vertex covers, alpha, beta, unmixedness"),
    "leaves": (cmd_leaves, "leaf, joint and free-vertex report per facet"),
    "is-tree": (cmd_is_tree, "tree (or --forest) recognition with a leafless witness"),
    "localize": (cmd_localize, "localize at the prime generated by --keep"),
    "graft": (cmd_graft, "graft new leaves onto the complex (default: whisker every vertex)"),
    "ideal": (cmd_ideal, "facet ideal (default) or non-face ideal generators"),
    "decompose": (cmd_decompose, "minimal primes, height and Krull dimension"),
    "cm": (cmd_cm, "Cohen-Macaulay verdict by the tree criterion and/or Reisner's criterion"),
    "polarize-check": (cmd_polarize_check, "Artinian reduction and polarization round-trip"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for link homology")

    parser = argparse.ArgumentParser(prog="facetideal", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for name, (_, help_) in VERBS.items():
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.add_argument("input", help="a .facets or .json file, or - for stdin")
        if name == "analyze":
            p.add_argument("--reisner", action="store_true", help="also run the homology oracle")
            p.add_argument("--char", type=int, default=0)
        elif name == "is-tree":
            p.add_argument("--forest", action="store_true")
        elif name == "localize":
            p.add_argument("--keep", required=True, help="vertices generating the prime, e.g. x,y,z")
        elif name == "graft":
            p.add_argument("--partition", default=None, help='classes separated by |, e.g. "x|y z|u"')
        elif name == "ideal":
            g = p.add_mutually_exclusive_group()
            g.add_argument("--facet", action="store_true")
            g.add_argument("--nonface", action="store_true")
        elif name == "cm":
            p.add_argument("--method", choices=("tree", "reisner", "both"), default="both")
            p.add_argument("--char", type=int, default=0)
            p.add_argument("--links", action="store_true", help="include per-link Betti tables")

    p = sub.add_parser("random", parents=[common], help="seeded random complex (JSON)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="random")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-facets", type=int, default=6)
    p.add_argument("--max-facet-size", type=int, default=4)
    return parser


def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(v)}" if _flat(v) else _pretty(v, indent + 1) for v in obj)
    return pad + _inline(obj)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return not isinstance(v, dict)


def _inline(v) -> str:
    if isinstance(v, list):
        if all(isinstance(x, str) for x in v):
            return "{" + ",".join(v) + "}"
        return " ".join(_inline(x) for x in v) if v else "(none)"
    if v is None:
        return "-"
    return str(v)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "random":
            report, code = cmd_random(args)
        else:
            c = read_complex(args.input)
            report, code = VERBS[args.verb][0](c, args)
    except (FacetIdealError, ValueError) as exc:
        print(f"facetideal {args.verb}: {exc}", file=sys.stderr)
        return ERROR
    if args.format == "pretty":
        stdout.write(_pretty(report) + "\n")
    else:
        stdout.write(json.dumps(report) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
