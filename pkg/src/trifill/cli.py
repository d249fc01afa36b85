"""Command-line interface.

Exit codes are a stable contract for scripting: 0 success / all checks
pass, 1 verification or reproduction mismatch, 2 usage or parse error,
3 I/O error.  Standard output carries only the requested payload; logs
and diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys

from ._format import fmt12
from .classify import classify, classify_triangle
from .errors import StateFormatError, ZeroVectorError
from .measures import (
    ConcurrenceTriangle,
    batch_edges,
    batch_fill,
    batch_tangle,
    full_report,
)
from .states import (
    NAMED_STATE_NAMES,
    ThreeQubitState,
    emit_state,
    haar_amplitudes,
    named_state,
    parse_state,
    sample_canonical,
    sample_haar,
)
from .verify import SUITE_NAMES, InequivalenceScan, measures_disagree, run_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _err(message: str) -> None:
    print(f"trifill: {message}", file=sys.stderr)


def _state_from_args(args) -> ThreeQubitState:
    if args.named is not None:
        return named_state(args.named)
    return parse_state(args.state)


def _add_state_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--named", metavar="NAME", help=f"built-in state, one of: {', '.join(NAMED_STATE_NAMES)}"
    )
    group.add_argument(
        "--state", metavar="JSON", help='state as {"amplitudes": [[re, im] x 8]}'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifill",
        description="Concurrence-triangle entanglement measures for three-qubit pure states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="print the full measure report of a state as JSON")
    _add_state_arguments(p)

    p = sub.add_parser("classify", help="print the entanglement class of a state")
    _add_state_arguments(p)
    p.add_argument("--tol", type=float, default=1e-7,
                   help="edge/tangle tolerance for the class boundaries (default 1e-7)")

    p = sub.add_parser("sample", help="emit seeded random states as JSON lines")
    p.add_argument("--n", type=int, required=True, help="number of states")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--mode", choices=("haar", "canonical"), default="haar")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")

    p = sub.add_parser("verify", help="run seeded property-check suites, one JSON line each")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    p.add_argument("--n", type=int, default=100_000,
                   help="samples per suite (grid points for f-ratio; pairs for inequivalence)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--area-eps", type=float, default=1e-6,
                   help="no-area suite: fill below this counts as zero area")
    p.add_argument("--edge-bound", type=float, default=0.05,
                   help="no-area suite: min edge above this flags a counterexample")

    p = sub.add_parser(
        "reproduce-paper",
        help="print the reference-state table and check every headline number",
    )

    p = sub.add_parser("scatter", help="export measures of Haar samples as CSV")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", metavar="PATH", required=True)

    return parser


# ---------------------------------------------------------------------------
# subcommands


def _cmd_measure(args) -> int:
    try:
        state = _state_from_args(args)
    except (StateFormatError, ZeroVectorError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(full_report(state).to_json(indent=2))
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        state = _state_from_args(args)
        label = classify(state, tol=args.tol, tol_tangle=args.tol).label
    except (StateFormatError, ZeroVectorError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(label)
    return EXIT_OK


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _cmd_sample(args) -> int:
    if args.n < 1:
        _err("--n must be >= 1")
        return EXIT_USAGE
    states = (
        sample_haar(args.seed, args.n)
        if args.mode == "haar"
        else sample_canonical(args.seed, args.n)
    )
    try:
        out, owned = _open_out(args.out)
        try:
            for state in states:
                out.write(emit_state(state) + "\n")
        finally:
            if owned:
                out.close()
    except OSError as exc:
        _err(f"cannot write {args.out}: {exc}")
        return EXIT_IO
    return EXIT_OK


def _cmd_verify(args) -> int:
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    total_failures = 0
    for name in suites:
        kwargs = {}
        if name == "no-area":
            kwargs = {"area_eps": args.area_eps, "edge_bound": args.edge_bound}
        try:
            report = run_suite(name, args.n, args.seed, **kwargs)
        except ValueError as exc:
            _err(str(exc))
            return EXIT_USAGE
        print(report.json_line())
        if isinstance(report, InequivalenceScan):
            total_failures += 0 if report.forced_pair_disagrees else 1
        else:
            total_failures += report.failures
        print(f"{name}: {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if total_failures == 0 else EXIT_MISMATCH


def _cmd_scatter(args) -> int:
    if args.n < 1:
        _err("--n must be >= 1")
        return EXIT_USAGE
    amps = haar_amplitudes(args.seed, args.n)
    edges = batch_edges(amps)
    fill = batch_fill(edges)
    q = 0.5 * edges.sum(axis=1)
    gmc_edge = edges.min(axis=1)
    tangle = batch_tangle(amps)
    sigma = 0.5 * (tangle + gmc_edge)
    try:
        with open(args.out, "w", encoding="utf-8") as out:
            out.write("a,b,c,fill,q,gmc_edge,tangle,sigma,class\n")
            for r in range(args.n):
                tri = ConcurrenceTriangle(*edges[r])
                label = classify_triangle(tri, tangle[r]).label
                numbers = (*edges[r], fill[r], q[r], gmc_edge[r], tangle[r], sigma[r])
                out.write(",".join(fmt12(x) for x in numbers) + f",{label}\n")
    except OSError as exc:
        _err(f"cannot write {args.out}: {exc}")
        return EXIT_IO
    return EXIT_OK


_PAPER_TABLE = (
    ("|000>", "Ket000"),
    ("Bell(x)|0>", "BellTimesKet0"),
    ("GHZ", "GHZ"),
    ("W", "W"),
    ("psi1", "Psi1"),
    ("psi2", "Psi2"),
    ("psi3", "Psi3"),
)


def _cmd_reproduce(args) -> int:
    reports = {key: full_report(named_state(key)) for _, key in _PAPER_TABLE}

    columns = ("state", "a", "b", "c", "fill", "Q", "gmc", "tangle", "sigma", "class")
    widths = (12, 15, 15, 15, 15, 15, 15, 15, 15, 18)
    print("  ".join(f"{h:>{w}}" for h, w in zip(columns, widths)))
    for label, key in _PAPER_TABLE:
        r = reports[key]
        cells = (
            label,
            fmt12(r.triangle.a), fmt12(r.triangle.b), fmt12(r.triangle.c),
            fmt12(r.fill), fmt12(r.global_q), fmt12(r.gmc_edge),
            fmt12(r.tangle), fmt12(r.sigma), r.state_class.label,
        )
        print("  ".join(f"{c:>{w}}" for c, w in zip(cells, widths)))
    print()

    def close(value, target, tol):
        return abs(value - target) <= tol

    ghz, w = reports["GHZ"], reports["W"]
    p1, p2, p3 = reports["Psi1"], reports["Psi2"], reports["Psi3"]
    checks = [
        ("fill(GHZ) = 1 within 1e-12", close(ghz.fill, 1.0, 1e-12), fmt12(ghz.fill)),
        ("fill(W) = 64/81 within 1e-12", close(w.fill, 64.0 / 81.0, 1e-12), fmt12(w.fill)),
        ("gmc(psi1) = 0.345 within 5e-4", close(p1.gmc_edge, 0.345, 5e-4), fmt12(p1.gmc_edge)),
        ("gmc(psi2) = 0.5 within 1e-12", close(p2.gmc_edge, 0.5, 1e-12), fmt12(p2.gmc_edge)),
        ("fill(psi1) = 0.393 within 1e-3", close(p1.fill, 0.393, 1e-3), fmt12(p1.fill)),
        ("fill(psi2) = 0.25 within 1e-12", close(p2.fill, 0.25, 1e-12), fmt12(p2.fill)),
        (
            "fill and gmc order (psi1, psi2) oppositely",
            p1.fill > p2.fill and p1.gmc_edge < p2.gmc_edge,
            f"fill {fmt12(p1.fill)} > {fmt12(p2.fill)}, gmc {fmt12(p1.gmc_edge)} < {fmt12(p2.gmc_edge)}",
        ),
        (
            "inequivalence detector agrees on (psi1, psi2)",
            measures_disagree(named_state("Psi1"), named_state("Psi2")),
            "strict rank flip with margin 1e-9",
        ),
        ("fill(psi3) = 0.559 within 1e-3", close(p3.fill, 0.559, 1e-3), fmt12(p3.fill)),
        (
            "gmc(psi3) = gmc(psi2) within 1e-12 (gmc is blind to the change)",
            close(p3.gmc_edge, p2.gmc_edge, 1e-12),
            f"{fmt12(p3.gmc_edge)} vs {fmt12(p2.gmc_edge)}",
        ),
        (
            "fill(psi3) - fill(psi2) > 0.3 (fill is not blind)",
            p3.fill - p2.fill > 0.3,
            fmt12(p3.fill - p2.fill),
        ),
        (
            "condition (c): fill(GHZ) > fill(W) > 0",
            ghz.fill > w.fill > 0.0,
            f"{fmt12(ghz.fill)} > {fmt12(w.fill)} > 0",
        ),
        (
            "zero fill on the product and biseparable rows",
            reports["Ket000"].fill < 1e-9 and reports["BellTimesKet0"].fill < 1e-9,
            f"{fmt12(reports['Ket000'].fill)}, {fmt12(reports['BellTimesKet0'].fill)}",
        ),
        (
            "classes: product, biseparable:3|12, ghz-class, w-class, 3x ghz-class",
            [reports[k].state_class.label for _, k in _PAPER_TABLE]
            == [
                "product",
                "biseparable:3|12",
                "ghz-class",
                "w-class",
                "ghz-class",
                "ghz-class",
                "ghz-class",
            ],
            ", ".join(reports[k].state_class.label for _, k in _PAPER_TABLE),
        ),
    ]

    all_ok = True
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        all_ok &= ok
        print(f"[{status}] {name}  ({detail})")
    print()
    if all_ok:
        print(f"all {len(checks)} checks passed")
        return EXIT_OK
    print("some checks FAILED")
    return EXIT_MISMATCH


_HANDLERS = {
    "measure": _cmd_measure,
    "classify": _cmd_classify,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
    "reproduce-paper": _cmd_reproduce,
    "scatter": _cmd_scatter,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
