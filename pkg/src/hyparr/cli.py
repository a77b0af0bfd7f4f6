"""``hyparr`` command line: invariants, regions and bijections of hyperplane arrangements.

Exit codes: 0 success, 1 budget exceeded or failed cross-check, 2 bad input.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import formulas
from .arrangement import FAMILIES, Arrangement, FamilySpec, make_family
from .combinatorics import (ballot_sequences, catalan_chamber, catalan_number, catalan_region_to_ballot,
                            chromatic_polynomial, count_acyclic_orientations, enumerate_parking_functions,
                            is_parking_function, pak_labeling, strictly_positive_partial_sums)
from .errors import ArrangementError, BudgetExceeded, CrossCheckFailed, ParseError
from .exact_math import T, poly_roots_numeric
from .io import load_arrangement, load_graph
from .orlik_solomon import OrlikSolomon, hilbert_from_chi
from .poset import (DEFAULT_MAX_POINTS, chi_via_deletion_contraction, chi_via_finite_field,
                    chi_via_mobius)
from .regions import enumerate_regions, zaslavsky_counts
from .report import arrangement_summary, polynomial_payload, rational, region_row, render

METHODS = ("mobius", "delcon", "finitefield")


class InputError(Exception):
    """Bad command-line input that argparse cannot catch by itself."""


# ---------------------------------------------------------------------------
# argument parsing

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS,
                   help="point budget for finite-field counting")
    p.add_argument("--max-regions", type=int, default=None, help="abort enumeration past this many regions")
    p.add_argument("--threads", type=int, default=1, help="parallel workers for counting and enumeration")


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--graph", help="graph file for the graphical family")
    p.add_argument("--file", help="arrangement file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyparr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="characteristic polynomial")
    _source(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="mobius")
    _common(p)

    p = sub.add_parser("regions", help="region and bounded-region counts")
    _source(p)
    p.add_argument("--enumerate", action="store_true", help="list every region")
    p.add_argument("--bounded", action="store_true", help="list the relatively bounded regions")
    p.add_argument("--plot", metavar="FILE", help="draw a planar arrangement with its regions")
    _common(p)

    p = sub.add_parser("parking", help="parking functions and the Shi labelling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labels", action="store_true", help="label Shi regions by parking functions")
    _common(p)

    p = sub.add_parser("ballot", help="ballot sequences of the Catalan chamber regions")
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("os", help="Orlik-Solomon graded dimensions")
    _source(p)
    _common(p)

    p = sub.add_parser("linial-roots", help="real parts of the roots of the Linial polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--plot", metavar="FILE", help="scatter the roots in the complex plane")
    _common(p)

    p = sub.add_parser("graph", help="chromatic polynomial and acyclic orientations")
    p.add_argument("--file", required=True)
    p.add_argument("--chromatic", action="store_true")
    p.add_argument("--acyclic", action="store_true")
    _common(p)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    _common(p)
    return parser


def _arrangement(args) -> tuple[Arrangement, str]:
    if args.file:
        return load_arrangement(args.file), args.file
    if not args.family:
        raise InputError("give --family or --file")
    graph = load_graph(args.graph) if args.graph else None
    if args.family == "graphical":
        if graph is None:
            raise InputError("graphical family needs --graph")
        spec = FamilySpec("graphical", graph.n, graph=graph)
    else:
        if args.n is None:
            raise InputError(f"{args.family} family needs --n")
        spec = FamilySpec(args.family, args.n, args.d)
    return make_family(spec), spec.describe()


# ---------------------------------------------------------------------------
# commands

def cmd_chi(args) -> dict:
    A, name = _arrangement(args)
    methods = METHODS if args.method == "all" else (args.method,)
    compute = {
        "mobius": chi_via_mobius,
        "delcon": chi_via_deletion_contraction,
        "finitefield": lambda B: chi_via_finite_field(B, args.max_points, args.threads),
    }
    found = {m: compute[m](A) for m in methods}
    chi = found[methods[0]]
    agree = all(p == chi for p in found.values())
    out = {
        "arrangement": arrangement_summary(A, name),
        "chi": polynomial_payload(chi),
        "methods": {m: polynomial_payload(p) for m, p in found.items()},
        "agree": agree,
    }
    if not agree:
        raise CrossCheckFailed("methods disagree", out)
    return out


def cmd_regions(args) -> dict:
    A, name = _arrangement(args)
    regions, bounded = zaslavsky_counts(A)
    out = {"arrangement": arrangement_summary(A, name), "regions": regions, "bounded": bounded}
    if args.enumerate or args.bounded or args.plot:
        found = enumerate_regions(A, workers=args.threads, max_regions=args.max_regions)
        n_bounded = sum(r.relatively_bounded for r in found)
        agree = len(found) == regions and n_bounded == bounded
        out["enumerated"] = {"regions": len(found), "bounded": n_bounded}
        out["agree"] = agree
        rows = [region_row(k, r) for k, r in enumerate(found)]
        if args.bounded and not args.enumerate:
            rows = [row for row in rows if row["bounded"]]
        out["region_table"] = rows
        if args.plot:
            from .plotting import plot_arrangement_2d
            out["plot"] = plot_arrangement_2d(A, found, args.plot, title=name)
        if not agree:
            raise CrossCheckFailed("enumeration disagrees with the characteristic polynomial", out)
    return out


def cmd_parking(args) -> dict:
    n = args.n
    pfs = enumerate_parking_functions(n)
    expected = (n + 1) ** (n - 1)
    out = {"n": n, "parking_functions": len(pfs), "expected": expected}
    ok = len(pfs) == expected and all(is_parking_function(a) for a in pfs)
    if args.labels:
        labels = pak_labeling(n)
        bijective = sorted(labels.values()) == sorted(pfs)
        out["bijective"] = bijective
        out["labels"] = [{"signs": "".join("+" if s > 0 else "-" for s in signs),
                          "label": list(lab)} for signs, lab in sorted(labels.items(), reverse=True)]
        ok = ok and bijective
    out["agree"] = ok
    if not ok:
        raise CrossCheckFailed("parking-function cross-check failed", out)
    return out


def cmd_ballot(args) -> dict:
    n = args.n
    A = make_family(FamilySpec("catalan", n))
    found = enumerate_regions(A, within=catalan_chamber(n), max_regions=args.max_regions, workers=args.threads)
    rows, ok = [], True
    for r in found:
        b = catalan_region_to_ballot(n, r)
        crit = strictly_positive_partial_sums(b)
        ok &= crit == r.relatively_bounded
        rows.append({"signs": r.sign_string(), "ballot": "".join("+" if x > 0 else "-" for x in b),
                     "bounded": r.relatively_bounded})
    seqs = {row["ballot"] for row in rows}
    ok &= len(seqs) == len(rows) == len(ballot_sequences(n))
    out = {"n": n, "chamber_regions": len(rows), "catalan": catalan_number(n),
           "bounded": sum(row["bounded"] for row in rows), "agree": ok, "ballots": rows}
    if not ok:
        raise CrossCheckFailed("ballot bijection failed", out)
    return out


def cmd_os(args) -> dict:
    A, name = _arrangement(args)
    dims = OrlikSolomon(A).graded_dimensions()
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    hilb = hilbert_from_chi(chi_via_mobius(A), A.dim)
    agree = [hilb.coefficient(k) for k in range(len(dims))] == dims and hilb.degree < len(dims)
    out = {"arrangement": arrangement_summary(A, name), "graded_dimensions": dims,
           "hilbert": polynomial_payload(hilb), "agree": agree}
    if not agree:
        raise CrossCheckFailed("graded dimensions differ from x^d chi(-1/x)", out)
    return out


def cmd_linial_roots(args) -> dict:
    n = args.n
    chi = formulas.linial_chi(n)
    quotient, _ = chi.divmod(T)
    roots = poly_roots_numeric(quotient) if quotient.degree >= 1 else []
    center = n / 2
    worst = max((abs(z.real - center) for z in roots), default=0.0)
    out = {
        "n": n,
        "chi": polynomial_payload(chi),
        "center": rational(Fraction(n, 2)),
        "max_deviation": worst,
        "tol": args.tol,
        "agree": worst < args.tol,
        "roots": [{"re": z.real, "im": z.imag} for z in roots],
    }
    if args.plot:
        from .plotting import plot_roots
        out["plot"] = plot_roots(roots, center, args.plot, title=f"linial({n})")
    if not out["agree"]:
        raise CrossCheckFailed(f"a root lies {worst:.3g} from the line Re = n/2", out)
    return out


def cmd_graph(args) -> dict:
    G = load_graph(args.file)
    out = {"vertices": G.n, "edges": [list(e) for e in G.edges]}
    both = not (args.chromatic or args.acyclic)
    if args.chromatic or both:
        out["chromatic"] = polynomial_payload(chromatic_polynomial(G))
    if args.acyclic or both:
        out["acyclic_orientations"] = count_acyclic_orientations(G)
    return out


def cmd_selftest(args) -> dict:
    from .acceptance import run_all
    echo = None if args.json else print
    results = run_all(args.only or None, echo=echo)
    out = {
        "passed": all(r.passed for r in results),
        "criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "details": r.details}
                     for r in results],
    }
    if not out["passed"]:
        raise CrossCheckFailed("some acceptance criteria failed", out)
    return out


COMMANDS = {
    "chi": cmd_chi, "regions": cmd_regions, "parking": cmd_parking, "ballot": cmd_ballot,
    "os": cmd_os, "linial-roots": cmd_linial_roots, "graph": cmd_graph, "selftest": cmd_selftest,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = COMMANDS[args.command](args)
    except (ParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckFailed as exc:
        if len(exc.args) > 1 and isinstance(exc.args[1], dict):
            if not (args.command == "selftest" and not args.json):
                print(render(exc.args[1], args.json))
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ArrangementError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not (args.command == "selftest" and not args.json):
        print(render(payload, args.json))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
