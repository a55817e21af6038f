"""``blocktoeplitz`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import __version__
from .counting import DEFAULT_BUDGET, DEFAULT_P_GRID, BudgetExceeded, count_pi_star, count_pi_star_signed, estimate_p
from .experiments import RunConfig, run_convergence, run_simulation
from .inputs import DISTRIBUTIONS, InputSpec, default_seed
from .links import Composite, parse_link
from .report import emit_report
from .spectral import EigenSolverError, write_eigenvalue_csv
from .theory import MAX_T, REGIMES, Regime, theoretical_moments
from .verify import SUITES, run_verification
from .words import MAX_T as MAX_WORD_T
from .words import Word, is_catalan, enumerate_pair_matched

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload) -> None:
    text = emit_report(payload, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)


def _emit_table(args, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if args.out is None:
        sys.stdout.write(buf.getvalue())
    else:
        Path(args.out).write_text(buf.getvalue())


def cmd_words(args) -> int:
    rows = []
    for t in range(1, args.t_max + 1):
        words = enumerate_pair_matched(t)
        entry = {"t": t, "pair_matched": len(words), "catalan": sum(map(is_catalan, words))}
        if args.list:
            entry["words"] = [{"word": str(w), "catalan": is_catalan(w)} for w in words]
        rows.append(entry)
    if args.format == "csv":
        _emit_table(args, ["t", "pair_matched", "catalan"], [[r["t"], r["pair_matched"], r["catalan"]] for r in rows])
    else:
        _emit(args, {"words": rows})
    return EXIT_OK


def _link_from_args(args):
    link = parse_link(args.link, args.k, args.n)
    size = link.dim if isinstance(link, Composite) else args.n
    return link, size


def cmd_count(args) -> int:
    link, size = _link_from_args(args)
    w = Word(args.word)
    if args.sign is not None:
        res = count_pi_star_signed(link, size, w, tuple(args.sign), args.budget)
    else:
        res = count_pi_star(link, size, w, args.budget)
    _emit(args, res.to_dict())
    return EXIT_OK


def cmd_pw(args) -> int:
    link = parse_link(args.link)
    est = estimate_p(link, Word(args.word), args.grid, args.budget)
    _emit(args, {
        "word": args.word, "link": link.value, "p_hat": est.p_hat, "residual": est.residual,
        "grid": list(est.grid), "normalized": list(est.normalized),
    })
    return EXIT_OK


def _regime(args) -> Regime:
    if args.regime == "fixed_k":
        return Regime.fixed_k(args.k)
    if args.regime == "fixed_n":
        return Regime.fixed_n(args.n)
    return Regime.both_large()


def cmd_moments(args) -> int:
    regime = _regime(args)
    m = theoretical_moments(args.model, regime, args.t_max, args.grid, args.budget)
    _emit(args, {"model": args.model, "regime": regime.label(), "p_grid": list(args.grid),
                 "moments": {str(h): v for h, v in m.items()}})
    return EXIT_OK


def _config(args, n=None, k=None) -> RunConfig:
    return RunConfig(
        model=args.model, regime=args.regime, n=n or args.n, k=k or args.k,
        replicates=args.reps, input=InputSpec(args.dist, args.seed), h_max=args.h_max,
        bins=args.bins, jobs=args.jobs, output_path=args.out,
    )


def cmd_simulate(args) -> int:
    report = run_simulation(_config(args), keep_eigenvalues=args.eig_out is not None)
    if args.eig_out:
        write_eigenvalue_csv(report.eigenvalues, args.eig_out, report.config.scale)
    _emit(args, report)
    return EXIT_OK


def cmd_converge(args) -> int:
    if args.regime == "fixed_k":
        grid = [_config(args, k=s) for s in args.sizes]
    elif args.regime == "fixed_n":
        grid = [_config(args, n=s) for s in args.sizes]
    else:
        grid = [_config(args, n=s, k=s) for s in args.sizes]
    _emit(args, run_convergence(grid, empirical=not args.no_empirical))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.suite, args.budget, args.max_size)
    if args.format == "csv":
        _emit_table(args, ["check", "pass", "detail"], [[c.name, c.passed, c.detail] for c in report.checks])
    else:
        _emit(args, report)
    if not report.passed:
        bad = report.first_failure
        print(f"verification failed: {bad.name} ({bad.detail})", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _output_flags(p):
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blocktoeplitz", description="Block Toeplitz random matrix experiments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("words", help="enumerate pair-matched and Catalan words")
    p.add_argument("--t-max", type=int, default=4, choices=range(1, MAX_WORD_T + 1), metavar=f"1..{MAX_WORD_T}")
    p.add_argument("--list", action="store_true", help="include the words themselves")
    _output_flags(p)
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("count", help="exact #Pi*(w) for one link and size")
    p.add_argument("--link", required=True, help="sym_toeplitz, wigner, asym_toeplitz, full_iid, tbi or tbt")
    p.add_argument("--n", type=int, required=True, help="matrix size, or block size for tbi/tbt")
    p.add_argument("--k", type=int, default=None, help="number of blocks for tbi/tbt")
    p.add_argument("--word", required=True)
    p.add_argument("--sign", type=_int_list, default=None, help="sign vector, written --sign=-1,1")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    _output_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("pw", help="extrapolated p(w) for one link")
    p.add_argument("--link", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--grid", type=_int_list, default=list(DEFAULT_P_GRID))
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    _output_flags(p)
    p.set_defaults(func=cmd_pw)

    p = sub.add_parser("moments", help="theoretical limiting moments")
    p.add_argument("--model", choices=("TBI", "TBT"), type=str.upper, required=True)
    p.add_argument("--regime", choices=REGIMES, default="both_large")
    p.add_argument("--n", type=int, default=None, help="fixed block size for fixed_n")
    p.add_argument("--k", type=int, default=None, help="fixed block count for fixed_k")
    p.add_argument("--t-max", type=int, default=3, choices=range(1, MAX_T + 1), metavar=f"1..{MAX_T}")
    p.add_argument("--grid", type=_int_list, default=list(DEFAULT_P_GRID))
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    _output_flags(p)
    p.set_defaults(func=cmd_moments)

    for name, fn, hlp in (("simulate", cmd_simulate, "Monte Carlo moments and histogram"),
                          ("converge", cmd_converge, "convergence sweep over a size grid")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--model", choices=("TBI", "TBT"), type=str.upper, required=True)
        p.add_argument("--regime", choices=REGIMES, default="both_large")
        p.add_argument("--n", type=int, default=32)
        p.add_argument("--k", type=int, default=32)
        p.add_argument("--reps", type=int, default=50)
        p.add_argument("--seed", type=int, default=default_seed())
        p.add_argument("--dist", choices=DISTRIBUTIONS, default="rademacher")
        p.add_argument("--h-max", type=int, default=6)
        p.add_argument("--bins", type=int, default=60)
        p.add_argument("--jobs", type=int, default=1)
        _output_flags(p)
        if name == "simulate":
            p.add_argument("--eig-out", default=None, help="CSV of all scaled eigenvalues")
        else:
            p.add_argument("--sizes", type=_int_list, required=True, help="grid of the varied size, e.g. 2,4,8,16")
            p.add_argument("--no-empirical", action="store_true", help="theoretical trajectory only")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="exact identity suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-size", type=int, default=6, help="largest n and k in the decomposition suite")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    _output_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceeded, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EigenSolverError as exc:
        print(f"eigensolver failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
