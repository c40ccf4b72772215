"""Command-line frontend with machine-readable JSON reports.

Commands: analyze, verify-paper, compare, search, table. Every rational in a
report appears as an exact "num/den" string in lowest terms next to a float
approximation under a separate key; CSV output is decimal-rendered and
therefore approximate by construction. Exit codes: 0 pass, 1 verification
mismatch, 2 usage or parse error, 3 tie encountered, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .conjecture import (
    compare_stability,
    search_counterexamples,
    verify_counterexample,
)
from .core import BooleanFunction
from .fourier import influence, stability_polynomial, wht
from .ltf import (
    TIE_REJECT,
    TIE_TO_MINUS_ONE,
    TieEncountered,
    counterexample,
    is_monotone,
    is_odd,
    is_unbiased,
    materialize,
    parse_spec,
    render_spec,
    tie_witness,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TIE = 3
EXIT_IO = 4


def fraction_fields(x: Fraction) -> dict:
    """Exact num/den string plus a presentation-only float approximation."""
    return {"exact": f"{x.numerator}/{x.denominator}", "approx": float(x)}


def value_fields(v):
    return fraction_fields(v) if isinstance(v, Fraction) else v


def decimal17(x: Fraction) -> str:
    return format(float(x), ".17g")


def render_document(doc: dict) -> str:
    """Canonical rendering: parsing and re-rendering is byte-identical."""
    return json.dumps(doc, indent=2, sort_keys=True)


def _document(command: str, inputs: dict, results) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": __version__,
    }


def _comparison_display(lhs: Fraction, rhs: Fraction) -> dict:
    """Render both sides over their least common denominator, e.g. 44/64 < 45/64."""
    denom = lhs.denominator * rhs.denominator // math.gcd(lhs.denominator, rhs.denominator)
    left = f"{lhs.numerator * (denom // lhs.denominator)}/{denom}"
    right = f"{rhs.numerator * (denom // rhs.denominator)}/{denom}"
    relation = "<" if lhs < rhs else ("=" if lhs == rhs else ">")
    return {
        "lhs_common_denominator": left,
        "rhs_common_denominator": right,
        "display": f"{left} {relation} {right}",
    }


def cmd_analyze(args) -> int:
    spec = parse_spec(args.spec, args.tie_policy)
    f = materialize(spec)
    e = wht(f)
    poly = stability_polynomial(e)
    weight_fields = [fraction_fields(w) for w in poly.weights]
    results = {
        "arity": f.n,
        "weights": list(spec.weights),
        "threshold": spec.threshold,
        "tie_broken": spec.tie_policy == TIE_TO_MINUS_ONE
        and tie_witness(spec) is not None,
        "table_hex": f.to_hex(),
        "ones": f.ones(),
        "bias": fraction_fields(f.bias()),
        "unbiased": is_unbiased(f),
        "odd": is_odd(f),
        "monotone": is_monotone(f),
        "influences": [fraction_fields(influence(f, i)) for i in range(1, f.n + 1)],
        "degree_weights": weight_fields,
        "stability_polynomial": {
            "form": "Stab(rho) = sum_k W_k rho^k",
            "coefficients": weight_fields,
        },
    }
    inputs = {"spec": args.spec, "tie_policy": args.tie_policy}
    print(render_document(_document("analyze", inputs, results)))
    return EXIT_OK


def cmd_verify(args) -> int:
    candidate = None
    if args.corrupt_table:
        clean = counterexample()
        candidate = BooleanFunction(clean.n, clean.table ^ 1)
    report = verify_counterexample(candidate=candidate)
    results = {
        "pass": report.passed,
        "first_failure": report.first_failure,
        "checks": [
            {
                "name": c.name,
                "claimed": value_fields(c.claimed),
                "computed": value_fields(c.computed),
                "pass": c.passed,
            }
            for c in report.checks
        ],
        "w1_comparison": {
            "lhs": "W^1[f]",
            "rhs": "W^1[Maj_5]",
            **_comparison_display(report.w1_candidate, report.w1_majority),
            "strict_less": report.w1_candidate < report.w1_majority,
        },
        "influence_symmetry": {
            "groups": [
                {
                    "coordinates": [1, 2],
                    "influence": fraction_fields(report.candidate_influences[0]),
                },
                {
                    "coordinates": [3, 4, 5],
                    "influence": fraction_fields(report.candidate_influences[2]),
                },
            ]
        },
        "stability_at_tenth": {
            "rho": fraction_fields(report.stab_rho),
            "candidate": fraction_fields(report.stab_candidate),
            "majority": fraction_fields(report.stab_majority),
            "difference": fraction_fields(report.stab_majority - report.stab_candidate),
        },
    }
    print(render_document(_document("verify-paper", {}, results)))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_compare(args) -> int:
    f = materialize(parse_spec(args.spec_f))
    g = materialize(parse_spec(args.spec_g))
    report = compare_stability(f, g, args.grid)
    lines = ["rho,stab_f,stab_g,diff"]
    for rho, diff in report.grid:
        sf = report.poly_candidate.evaluate(rho)
        sg = report.poly_reference.evaluate(rho)
        lines.append(f"{decimal17(rho)},{decimal17(sf)},{decimal17(sg)},{decimal17(diff)}")
    with open(args.out, "w") as handle:
        handle.write("\n".join(lines) + "\n")
    bracket = None
    if report.crossover_bracket is not None:
        lo, hi = report.crossover_bracket
        bracket = {
            "lo": fraction_fields(lo),
            "hi": fraction_fields(hi),
            "max_width": "2^-40",
        }
    witness = None
    if report.small_rho_witness is not None:
        rho0, val = report.small_rho_witness
        witness = {"rho": fraction_fields(rho0), "diff": fraction_fields(val)}
    results = {
        "arity": report.arity,
        "verdict": report.verdict,
        "margin": fraction_fields(report.margin),
        "diff_poly": [fraction_fields(c) for c in report.diff_poly],
        "small_rho_witness": witness,
        "crossover_bracket": bracket,
        "csv": {
            "path": args.out,
            "rows": args.grid + 1,
            "rendering": "decimal, 17 significant digits (approximate)",
        },
    }
    inputs = {"spec_f": args.spec_f, "spec_g": args.spec_g, "grid": args.grid, "out": args.out}
    print(render_document(_document("compare", inputs, results)))
    return EXIT_OK


def _search_entry(r) -> dict:
    return {
        "spec": render_spec(r.spec),
        "weights": list(r.spec.weights),
        "w1": fraction_fields(r.w1),
        "w1_majority": fraction_fields(r.w1_majority),
        "margin": fraction_fields(r.margin),
        "flags": {
            "unbiased": r.unbiased,
            "monotone": r.monotone,
            "odd": r.odd,
            "tie_free": r.tie_free,
        },
        "table_hex": r.table_hex,
    }


def cmd_search(args) -> int:
    results = search_counterexamples(
        args.n,
        args.max_weight,
        require_tie_free=not args.allow_ties,
        workers=args.parallel,
    )
    entries = [_search_entry(r) for r in results]
    # The results file deliberately omits the worker count: parallelism is an
    # execution detail and the file is contractually byte-identical across it.
    file_doc = _document(
        "search",
        {
            "n": args.n,
            "max_weight": args.max_weight,
            "require_tie_free": not args.allow_ties,
        },
        {"count": len(entries), "counterexamples": entries},
    )
    with open(args.out, "w") as handle:
        handle.write(render_document(file_doc) + "\n")
    inputs = {
        "n": args.n,
        "max_weight": args.max_weight,
        "parallel": args.parallel,
        "require_tie_free": not args.allow_ties,
        "out": args.out,
    }
    stdout_doc = _document(
        "search", inputs, {"count": len(entries), "out": args.out, "counterexamples": entries}
    )
    print(render_document(stdout_doc))
    return EXIT_OK


def cmd_table(args) -> int:
    print(materialize(parse_spec(args.spec)).to_hex())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolfun",
        description="Exact spectral analysis of Boolean threshold functions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    analyze = sub.add_parser("analyze", help="full spectral report for an LTF spec")
    analyze.add_argument("spec", help='weights with optional threshold, e.g. "2,2,1,1,1@0"')
    analyze.add_argument(
        "--tie-policy",
        choices=[TIE_REJECT, TIE_TO_MINUS_ONE],
        default=TIE_REJECT,
        help="what to do when a weighted sum hits the threshold",
    )
    analyze.set_defaults(handler=cmd_analyze)

    verify = sub.add_parser(
        "verify-paper",
        help="recompute the bundled counterexample's exact values and check them",
    )
    verify.add_argument("--corrupt-table", action="store_true", help=argparse.SUPPRESS)
    verify.set_defaults(handler=cmd_verify)

    compare = sub.add_parser(
        "compare", help="exact stability comparison of two specs, with CSV curve"
    )
    compare.add_argument("spec_f", help="candidate spec")
    compare.add_argument("spec_g", help="reference spec")
    compare.add_argument("--grid", type=int, default=256, help="rho grid resolution")
    compare.add_argument("--out", required=True, help="CSV output path")
    compare.set_defaults(handler=cmd_compare)

    search = sub.add_parser(
        "search", help="exhaust small weight vectors for sub-majority W_1"
    )
    search.add_argument("n", type=int, help="odd arity, at most 9")
    search.add_argument("max_weight", type=int, help="largest weight to enumerate")
    search.add_argument("--parallel", type=int, default=1, help="worker processes")
    search.add_argument("--out", required=True, help="results document path")
    search.add_argument(
        "--allow-ties",
        action="store_true",
        help="tie-break specs with map_to_minus_one instead of skipping them",
    )
    search.set_defaults(handler=cmd_search)

    table = sub.add_parser("table", help="print only the truth-table hex of a spec")
    table.add_argument("spec")
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except TieEncountered as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIE
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
