"""Command-line front end: point evaluation, minimization, CSV scans,
certificate verification, the reference probability table, and conjecture
grid scans.

Exit codes: 0 success, 1 a verification check failed or a conjecture
violation was found, 2 usage error. All output is deterministic for fixed
arguments; scan CSV is byte-stable.
"""

import argparse
import contextlib
import sys

from . import certificates, iddist, optimize
from .gamma_prob import GammaParams, band, h, t
from .optimize import NoInteriorMinimum
from .specfun import std_normal_band

__all__ = ["main", "run", "build_parser", "counterexample_table", "COUNTEREXAMPLES"]

_SIG = ".12g"

# The reference table: one-sigma-scaled bands that straddle the normal band
# in both directions once kappa moves off 1.
COUNTEREXAMPLES = (
    ("gamma alpha=1", 0.5, ("gamma", 1.0), 0.3834005),
    ("standard normal", 0.5, ("normal", None), 0.3829249),
    ("gamma alpha=2", 0.5, ("gamma", 2.0), 0.3819693),
    ("gamma alpha=1", 2.0, ("gamma", 1.0), 0.9502129),
    ("standard normal", 2.0, ("normal", None), 0.9544997),
    ("gamma alpha=10", 2.0, ("gamma", 10.0), 0.9585112),
)


def counterexample_table():
    """Rows (label, kappa, computed probability, reference value)."""
    rows = []
    for label, kappa, (kind, alpha), reference in COUNTEREXAMPLES:
        if kind == "gamma":
            value = band(GammaParams(alpha), kappa)
        else:
            value = std_normal_band(kappa)
        rows.append((label, kappa, float(value), reference))
    return rows


def _parse_range(text):
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = float(lo_text), float(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must be lo:hi, got {text!r}")
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"range needs lo < hi, got {text!r}")
    return lo, hi


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gamma-extremes",
        description="Gamma-distribution extreme probabilities, certified inequalities, "
        "and infinitely-divisible band scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate h, t, or the band probability")
    p_eval.add_argument("--function", required=True, choices=("h", "t", "band"))
    p_eval.add_argument("--kappa", type=float)
    p_eval.add_argument("--alpha", type=float, required=True)
    p_eval.add_argument("--beta", type=float, default=1.0)

    p_min = sub.add_parser("minimize", help="locate the interior minimum of h(kappa, .)")
    p_min.add_argument("--kappa", type=float, required=True)
    p_min.add_argument("--tol", type=float, default=1e-8)

    p_scan = sub.add_parser("scan", help="CSV table of h(kappa, alpha) over a log grid")
    p_scan.add_argument("--kappa", type=float, required=True)
    p_scan.add_argument("--range", type=_parse_range, required=True, dest="alpha_range",
                        metavar="LO:HI")
    p_scan.add_argument("--n", type=int, default=400)
    p_scan.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run the exact sign-certificate suite")
    p_verify.add_argument("--only", nargs="*", default=None,
                          choices=("smallalpha", "chain_plus", "chain_minus", "case2", "case1"))
    p_verify.add_argument("--full-compare", action="store_true")
    p_verify.add_argument("--out", default=None)

    sub.add_parser("counterexamples",
                   help="reference table of band probabilities straddling the normal band")

    p_conj = sub.add_parser("conjecture", help="band-inequality grid scan for one family")
    p_conj.add_argument("--family", required=True, choices=iddist.FAMILIES)
    p_conj.add_argument("--out", default=None)

    return parser


@contextlib.contextmanager
def _sink(path, default):
    if path is None:
        yield default
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _cmd_eval(args, out):
    if args.function == "t":
        value = t(args.alpha)
    elif args.function == "h":
        if args.kappa is None:
            raise ValueError("eval --function h requires --kappa")
        value = h(args.kappa, args.alpha)
    else:
        if args.kappa is None:
            raise ValueError("eval --function band requires --kappa")
        value = band(GammaParams(args.alpha, args.beta), args.kappa)
    print(format(float(value), _SIG), file=out)
    return 0


def _cmd_minimize(args, out):
    try:
        result = optimize.min_h(args.kappa, tol=args.tol)
    except NoInteriorMinimum as diag:
        boundary = "alpha->infinity" if diag.boundary == "upper" else "alpha->0"
        print(
            f"no interior minimum for kappa={format(args.kappa, _SIG)}: "
            f"infimum ~ {format(diag.value, _SIG)} approached at the {boundary} boundary",
            file=out,
        )
        return 0
    print(f"argmin={format(result.argmin, _SIG)}", file=out)
    print(f"min_value={format(float(result.min_value), _SIG)}", file=out)
    print(f"evaluations={result.evaluations}", file=out)
    return 0


def _cmd_scan(args, out):
    lo, hi = args.alpha_range
    rows = optimize.scan(args.kappa, lo, hi, args.n)
    with _sink(args.out, out) as fh:
        fh.write("alpha,value\n")
        for alpha, value in rows:
            fh.write(f"{format(alpha, _SIG)},{format(float(value), _SIG)}\n")
    return 0


def _cmd_verify(args, out):
    only = None if not args.only else set(args.only)
    try:
        reports, case1 = certificates.verify_all(full_compare=args.full_compare, only=only)
    except (certificates.CertificateMismatch, certificates.SignViolation,
            certificates.NumericMismatch) as exc:
        print(f"name=verify;verdict=fail;detail={exc}", file=out)
        return 1
    with _sink(args.out, out) as fh:
        fh.write(certificates.format_records(reports, case1) + "\n")
    return 0


def _cmd_counterexamples(args, out):
    print("label                 kappa   computed     reference", file=out)
    worst = 0.0
    for label, kappa, value, reference in counterexample_table():
        worst = max(worst, abs(value - reference))
        print(f"{label:<21} {kappa:<7g} {value:.7f}    {reference:.7f}", file=out)
    if worst > 1e-6:
        print(f"name=counterexamples;verdict=fail;detail=max deviation {worst:.3g}", file=out)
        return 1
    return 0


def _cmd_conjecture(args, out):
    report = iddist.conjecture_scan(args.family)
    verdict = "violations_found" if report.violations else "no_violation"
    argmin = repr(report.argmin_params)
    notes = " | ".join(report.notes)
    with _sink(args.out, out) as fh:
        fh.write(
            f"name=conjecture_{report.family};verdict={verdict};"
            f"detail=min_band={format(float(report.min_band), _SIG)} argmin={argmin} "
            f"grid={len(report.grid)} threshold={format(report.threshold, _SIG)} "
            f"violations={len(report.violations)}; {notes}\n"
        )
        for spec, value in report.violations:
            fh.write(
                f"name=violation;verdict=below_threshold;"
                f"detail=params={spec!r} band={format(float(value), _SIG)}\n"
            )
    return 1 if report.violations else 0


_HANDLERS = {
    "eval": _cmd_eval,
    "minimize": _cmd_minimize,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "counterexamples": _cmd_counterexamples,
    "conjecture": _cmd_conjecture,
}


def run(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
