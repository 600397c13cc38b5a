"""
UniRat Command Line
Solve, verify and tabulate unitary vs. Chebyshev approximation errors
"""

import argparse
import concurrent.futures
import json
import math
import sys
from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from analysis.bounds_analysis import BoundsReport, closed_form_n0, evaluate_bounds
from approximation.cheb_minimax import solve_chebyshev
from approximation.errors import ApproximationError, FrequencyOutOfRange, NotConverged
from approximation.unitary_core import Target
from approximation.unitary_remez import solve
from cli.config import OmegaSpec, SweepConfig, log_level, thread_count
from cli.writers import csv_text, emit, json_text

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NOT_CONVERGED = 2
EXIT_OUT_OF_RANGE = 3

FIGURE1_POINTS = 200
REPORT_COLUMNS = [
    'n', 'omega', 'error_u', 'error_c', 'ratio_c_over_u', 'lower_ok', 'upper_ok',
    'asym_ratio_u', 'asym_ratio_c', 'max_re_gamma', 'degenerate',
]


def configure_logging(level: Optional[str] = None):
    logger.remove()
    logger.add(sys.stderr, level=(level or log_level()).upper())
    logger.enable("approximation")
    logger.enable("analysis")


def _status(message: str, to_stderr: bool = False):
    print(message, file=sys.stderr if to_stderr else sys.stdout)


def cmd_solve_unitary(args: argparse.Namespace) -> int:
    """Unitary best approximant: certificate plus summary line"""
    target = Target(omega=args.omega, n=args.n)
    try:
        cert = solve(target, tol=args.tol, max_iter=args.max_iter)
    except ValueError as e:
        args.parser.error(str(e))
    except FrequencyOutOfRange as e:
        _status(str(e))
        return EXIT_OUT_OF_RANGE
    except NotConverged as e:
        _status(f"not converged: {e}")
        return EXIT_NOT_CONVERGED
    except ApproximationError as e:
        _status(f"failed: {e}", to_stderr=True)
        return EXIT_FAILED

    summary = (f"n={target.n} omega={target.omega:.17g} error_u={cert.error_u:.17g} "
               f"alpha={cert.alpha:.17g} deviation={cert.deviation:.3e} "
               f"iterations={cert.iterations}")
    if cert.flags:
        summary += f" flags={','.join(cert.flags)}"
    _status(summary, to_stderr=not args.out)
    emit(json_text(cert.to_dict()), args.out)
    return EXIT_OK


def cmd_solve_chebyshev(args: argparse.Namespace) -> int:
    """Chebyshev approximant via AAA-Lawson: result file plus summary line"""
    target = Target(omega=args.omega, n=args.n)
    grid_size = args.grid_size or max(2000, 20 * (2 * target.n + 2))
    try:
        result = solve_chebyshev(target, grid_size=grid_size,
                                 lawson_iters=args.lawson_iters, polish=not args.no_polish)
    except ValueError as e:
        args.parser.error(str(e))
    except ApproximationError as e:
        _status(f"failed: {e}", to_stderr=True)
        return EXIT_FAILED

    summary = (f"n={target.n} omega={target.omega:.17g} error_c={result.error_c:.17g} "
               f"flatness={result.flatness:.3e} converged={result.converged} "
               f"lawson_iters={result.lawson_iters}")
    if result.flags:
        summary += f" flags={','.join(result.flags)}"
    _status(summary, to_stderr=not args.out)
    emit(json_text(result.to_dict()), args.out)
    return EXIT_OK


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    if args.config:
        with open(args.config, encoding='utf-8') as f:
            data = json.load(f)
        if args.out:
            data['output_path'] = args.out
        return SweepConfig.model_validate(data)

    if args.omega is not None:
        spec = OmegaSpec(min=args.omega, max=args.omega, count=1)
    else:
        spec = OmegaSpec(min=args.omega_min, max=args.omega_max, count=args.count,
                         spacing=args.spacing, inclusive=not args.open)
    return SweepConfig(
        degrees=args.degrees,
        omega_spec=spec,
        tol=args.tol,
        grid_size=args.grid_size or 2000,
        lawson_iters=args.lawson_iters,
        max_iter=args.max_iter,
        output_path=args.out,
        format=args.format,
    )


def failed_report(n: int, omega: float, error: ApproximationError) -> BoundsReport:
    """Row for a point whose solve raised; both checks count as failed"""
    nan = float('nan')
    return BoundsReport(n=n, omega=omega, error_u=nan, error_c=nan, lower_ok=False,
                        upper_ok=False, asym_ratio_u=nan, asym_ratio_c=nan,
                        degenerate=Target(omega=omega, n=n).degenerate,
                        notes=(f"{type(error).__name__}: {error}",))


def run_sweep(config: SweepConfig, threads: Optional[int] = None) -> List[BoundsReport]:
    """Bounds reports for every (n, omega), in (n, omega) order"""
    points = config.points()

    def one(point) -> BoundsReport:
        n, omega = point
        grid_size = max(config.grid_size, 20 * (2 * n + 2))
        try:
            return evaluate_bounds(n, omega, tol=config.tol, max_iter=config.max_iter,
                                   grid_size=grid_size, lawson_iters=config.lawson_iters)
        except ApproximationError as e:
            logger.error(f"n={n} omega={omega}: {e}")
            return failed_report(n, omega, e)

    workers = threads or thread_count()
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(one, points))


def cmd_verify(args: argparse.Namespace) -> int:
    """Sweep of bounds reports; nonzero exit if any inequality fails"""
    try:
        config = _sweep_config(args)
    except (ValidationError, OSError, json.JSONDecodeError) as e:
        args.parser.error(str(e))

    reports = run_sweep(config)
    if config.format == 'json':
        text = json_text([r.to_dict() for r in reports])
    else:
        text = csv_text([r.to_row() for r in reports], columns=REPORT_COLUMNS)
    emit(text, config.output_path)

    failures = [r for r in reports if not (r.lower_ok and r.upper_ok)]
    _status(f"verified {len(reports)} points: {len(failures)} inequality failures",
            to_stderr=not config.output_path)
    return EXIT_FAILED if failures else EXIT_OK


def figure1_rows(count: int = FIGURE1_POINTS, computed: bool = False,
                 tol: float = 1e-10, grid_size: int = 2000, lawson_iters: int = 1000,
                 threads: Optional[int] = None) -> List[Dict[str, float]]:
    """Degree-0 error curves on count equispaced frequencies inside (0, pi)"""
    omegas = OmegaSpec(min=0.0, max=math.pi, count=count, inclusive=False).values()

    def one(omega: float) -> Dict[str, float]:
        error_c, error_u = closed_form_n0(omega)
        row = {'omega': omega, 'error_u': error_u, 'error_c': error_c}
        if computed:
            target = Target(omega=omega, n=0)
            row['error_u_computed'] = solve(target, tol=tol).error_u
            row['error_c_computed'] = solve_chebyshev(
                target, grid_size=grid_size, lawson_iters=lawson_iters).error_c
        return row

    with concurrent.futures.ThreadPoolExecutor(max_workers=threads or thread_count()) as executor:
        return list(executor.map(one, omegas))


def cmd_figure1(args: argparse.Namespace) -> int:
    """CSV of E^u and E^c over omega for n = 0"""
    rows = figure1_rows(count=args.count, computed=args.computed, tol=args.tol,
                        grid_size=args.grid_size or 2000, lawson_iters=args.lawson_iters)
    emit(csv_text(rows), args.out)
    if args.computed:
        worst = max(max(abs(r['error_u_computed'] - r['error_u']),
                        abs(r['error_c_computed'] - r['error_c'])) for r in rows)
        _status(f"{len(rows)} rows, max |computed - closed form| = {worst:.3e}",
                to_stderr=not args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='unirat',
        description="Unitary best and Chebyshev rational approximation to exp(i*omega*x) on [-1, 1].")
    parser.add_argument('--log-level', default=None, help="Log level (default: UNIRAT_LOG_LEVEL or WARNING)")
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument('--tol', type=float, default=1e-10, help="Equioscillation tolerance (default: 1e-10)")
        p.add_argument('--max-iter', type=int, default=200, help="Unitary iteration budget (default: 200)")
        p.add_argument('--grid-size', type=int, default=None, help="Chebyshev working grid size")
        p.add_argument('--lawson-iters', type=int, default=1000, help="Lawson iterations (default: 1000)")
        p.add_argument('--out', default=None, help="Output file (default: stdout)")

    p = sub.add_parser('solve-unitary', help="Unitary best approximant and certificate")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--omega', type=float, required=True)
    common(p)
    p.set_defaults(func=cmd_solve_unitary, parser=p)

    p = sub.add_parser('solve-chebyshev', help="Chebyshev approximant via AAA-Lawson")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--omega', type=float, required=True)
    p.add_argument('--no-polish', action='store_true', help="Skip the extremal polish")
    common(p)
    p.set_defaults(func=cmd_solve_chebyshev, parser=p)

    p = sub.add_parser('verify', help="Check E^u/2 <= E^c < E^u over a sweep")
    p.add_argument('--degrees', type=int, nargs='+', default=[0])
    p.add_argument('--omega', type=float, default=None, help="Single frequency")
    p.add_argument('--omega-min', type=float, default=0.0)
    p.add_argument('--omega-max', type=float, default=math.pi)
    p.add_argument('--count', type=int, default=50)
    p.add_argument('--spacing', choices=['linear', 'log'], default='linear')
    p.add_argument('--open', action='store_true', help="Exclude the interval endpoints")
    p.add_argument('--format', choices=['csv', 'json'], default='csv')
    p.add_argument('--config', default=None, help="JSON sweep configuration file")
    common(p)
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser('figure1', help="Degree-0 error curves over (0, pi)")
    p.add_argument('--computed', action='store_true', help="Add solver-computed columns")
    p.add_argument('--count', type=int, default=FIGURE1_POINTS)
    common(p)
    p.set_defaults(func=cmd_figure1, parser=p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        Target(omega=getattr(args, 'omega', None) or 0.0, n=getattr(args, 'n', 0))
    except ValueError as e:
        parser.error(str(e))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
