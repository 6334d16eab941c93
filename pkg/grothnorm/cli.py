"""Command line entry point.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage,
parse or precondition errors.
"""
import argparse
import logging
import sys
from typing import List, Optional

from grothnorm.applications import verify_sgi, maxcut, cutnorm_bracket, stretch_spread
from grothnorm.classes import SymMatrix, RectMatrix
from grothnorm.gramopt import OptConfig, CertificateKind, gamma_d, Gamma_d, G_d_rect, stabilizing_rank
from grothnorm.oracle import MAX_SIGN_ENUM, MAX_BOX_ENUM, theta_real_exact, Theta_real_exact, coordinate_ascent, \
    theta_complex_lower, Theta_complex_lower
from grothnorm.readwrite import read_matrix, dumps_report, to_jsonable, to_csv_reports
from grothnorm.rounding import sample_sphere, mc_identities, sharpness_experiment, sharpness_sweep
from grothnorm.special import constants_table
from grothnorm.utils import FieldTag, RngStream, GrothnormError, FieldMismatchError, TOL_REPORT

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

NORMS = ("theta", "Theta", "gamma", "Gamma", "G")
FIELDS = tuple(f.value for f in FieldTag)


def _add_common(parser, defaults=True):
    def default(value):
        return value if defaults else argparse.SUPPRESS

    parser.add_argument("--seed", type=int, default=default(0),
                        help="master seed of every random stream (default: 0)")
    parser.add_argument("--restarts", type=int, default=default(OptConfig.restarts),
                        help=f"ascent restarts per sign (default: {OptConfig.restarts})")
    parser.add_argument("--workers", type=int, default=default(1), help="threads for the restarts (default: 1)")
    parser.add_argument("--json", action="store_true", default=default(False), help="print JSON reports")
    parser.add_argument("--tol", type=float, default=default(TOL_REPORT),
                        help=f"relative slack of the inequality checks (default: {TOL_REPORT:g})")
    parser.add_argument("-v", "--verbose", action="count", default=default(0), help="-v for INFO, -vv for DEBUG")


def build_parser() -> argparse.ArgumentParser:
    """Parser of the ``grothnorm`` command; the global options are accepted before or after the subcommand."""
    parser = argparse.ArgumentParser(prog="grothnorm",
                                     description="Grothendieck d-norms, inequality checks and experiments.")
    _add_common(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, defaults=False)
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="one norm of a matrix file")
    compute.add_argument("--norm", choices=NORMS, required=True)
    compute.add_argument("--d", type=int, default=None, help="rank of the factors (default: stabilizing rank)")
    compute.add_argument("--field", choices=FIELDS, default=None, help="field of the vectors (default: matrix field)")
    compute.add_argument("file")

    for name, text in (("verify", "check the Grothendieck chain and the cone constants"),
                       ("maxcut", "maximum cut of a nonnegative zero-diagonal weight matrix"),
                       ("cutnorm", "cut-norm bracket of a real rectangular matrix"),
                       ("stretch", "stretch and spread of a real symmetric matrix")):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("file")

    commands.add_parser("constants", parents=[common], help="table of named constants and bounds")

    experiment = commands.add_parser("experiment", parents=[common], help="random experiments")
    experiments = experiment.add_subparsers(dest="experiment", required=True)
    sharpness = experiments.add_parser("sharpness", parents=[common], help="ratio γ/θ on random Gram matrices")
    sharpness.add_argument("--n", type=int, default=2)
    sharpness.add_argument("--m", type=int, default=512)
    sharpness.add_argument("--field", choices=FIELDS, default="real")

    identities = commands.add_parser("identities", parents=[common], help="Monte-Carlo Gaussian sign identities")
    identities.add_argument("--n", type=int, default=3, help="dimension of the unit vectors")
    identities.add_argument("--samples", type=int, default=100_000)
    identities.add_argument("--field", choices=FIELDS, default="real")

    sweep = commands.add_parser("sweep", parents=[common], help="sharpness trend over m, written as CSV")
    sweep.add_argument("--n", type=int, default=2)
    sweep.add_argument("--ms", type=int, nargs="+", default=[16, 64, 256, 1024])
    sweep.add_argument("--field", choices=FIELDS, default="real")
    sweep.add_argument("--out", default="sharpness.csv")
    return parser


def _emit(args, report, lines):
    if args.json:
        print(dumps_report(report))
    else:
        print("\n".join(lines))


def _theta(A: SymMatrix, radial: bool, cfg: OptConfig, field: FieldTag):
    if not field.is_real:
        lower = Theta_complex_lower if radial else theta_complex_lower
        return lower(A, restarts=cfg.restarts, seed=cfg.seed), CertificateKind.HEURISTIC_LOWER_BOUND
    if not A.field.is_real:
        raise FieldMismatchError("A complex matrix needs complex vectors.")
    if not radial and A.n <= MAX_SIGN_ENUM:
        return theta_real_exact(A)[0], CertificateKind.EXACT_ENUMERATION
    if radial and A.n <= MAX_BOX_ENUM:
        return Theta_real_exact(A), CertificateKind.EXACT_ENUMERATION
    value = coordinate_ascent(A, radial, restarts=cfg.restarts, seed=cfg.seed)[0]
    return value, CertificateKind.HEURISTIC_LOWER_BOUND


def _read(file, kind):
    matrix = read_matrix(file)
    if not isinstance(matrix, kind):
        raise GrothnormError(f"{file} holds a {type(matrix).__name__}, expected a {kind.__name__}.")
    return matrix


def _compute(args, cfg):
    M = read_matrix(args.file)
    field = FieldTag.parse(args.field) if args.field else M.field
    if isinstance(M, RectMatrix):
        if args.norm != "G":
            raise GrothnormError(f"Norm {args.norm} needs a symmetric matrix file.")
        B = M
    else:
        B = RectMatrix(M.entries, M.field)

    if args.norm in ("theta", "Theta"):
        value, kind = _theta(M, args.norm == "Theta", cfg, field)
        report = {"norm": args.norm, "value": value, "kind": kind, "d": 1, "field": field}
    else:
        size = B.m + B.n if args.norm == "G" else M.n
        d = args.d or stabilizing_rank(size, field)
        if args.norm == "G":
            estimate = G_d_rect(B, d, cfg, field)
        else:
            estimate = (gamma_d if args.norm == "gamma" else Gamma_d)(M, d, cfg, field)
        report = {"norm": args.norm, **estimate.to_dict()}
        value, kind = estimate.value, estimate.kind
    _emit(args, report, [f"{args.norm} = {value:.12g} ({kind.value})"])
    return EXIT_OK


def _verify(args, cfg):
    report = verify_sgi(_read(args.file, SymMatrix), cfg, args.tol, args.file)
    lines = [f"{name:>6} = {norm.value:.12g} ({norm.kind.value})" for name, norm in report.norms.items()]
    lines += [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.lhs:.10g} {c.relation} "
              f"{c.constant:.6g} * {c.rhs:.10g}" for c in report.checks]
    _emit(args, report, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _constants(args, cfg):
    table = constants_table()
    _emit(args, table.as_dict(), [f"{k} = {v}" for k, v in table.as_dict().items()])
    return EXIT_OK


def _maxcut(args, cfg):
    result = maxcut(_read(args.file, SymMatrix), cfg, rng=RngStream(args.seed))
    exact = "n/a" if result.exact is None else f"{result.exact:.12g}"
    _emit(args, result, [f"exact = {exact}", f"relaxation = {result.relaxation:.12g}",
                         f"rounded = {result.rounded:.12g} (mean {result.rounded_mean:.6g})"])
    return EXIT_OK


def _cutnorm(args, cfg):
    bracket = cutnorm_bracket(_read(args.file, RectMatrix), cfg)
    lines = [f"bracket = [{bracket.lower:.10g}, {bracket.upper:.10g}]"]
    if bracket.exact is not None:
        lines.append(f"exact = {bracket.exact:.12g}")
    _emit(args, bracket, lines)
    return EXIT_OK if bracket.exact is None or bracket.contains(bracket.exact) else EXIT_FAILED


def _stretch(args, cfg):
    result = stretch_spread(_read(args.file, SymMatrix), cfg, args.tol)
    _emit(args, result, [f"stretch = {result.stretch:.12g}", f"spread = {result.spread:.12g}",
                         f"ratio = {result.ratio:.10g} (bound {result.bound:.6g})"])
    return EXIT_OK if result.passed else EXIT_FAILED


def _sharpness(args, cfg):
    report = sharpness_experiment(args.n, args.m, args.field, RngStream(args.seed), cfg)
    _emit(args, report, [f"gamma >= {report.gamma_lower:.10g}", f"theta ~ {report.theta_estimate:.10g}",
                         f"ratio ~ {report.ratio_estimate:.10g} (bound {report.finite_n_bound:.10g})"])
    return EXIT_OK


def _identities(args, cfg):
    rng = RngStream(args.seed)
    u, v = sample_sphere(args.n, args.field, rng.spawn(0)), sample_sphere(args.n, args.field, rng.spawn(1))
    report = mc_identities(u, v, args.samples, rng.spawn(2))
    lines = [f"<u, v> = {report.inner_product:.6g}"]
    lines += [f"{'PASS' if c.within() else 'FAIL'}  {name}: {c.estimate:.6g} vs {c.expected:.6g} "
              f"(stderr {c.stderr:.2g})" for name, c in report.checks.items()]
    _emit(args, report, lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def _sweep(args, cfg):
    df = sharpness_sweep(args.n, args.ms, args.field, RngStream(args.seed), cfg)
    to_csv_reports(args.out, df)
    _emit(args, to_jsonable(df.to_dict(orient="records")), [df.to_string(index=False), f"written to {args.out}"])
    return EXIT_OK


COMMANDS = {
    "compute": _compute,
    "verify": _verify,
    "constants": _constants,
    "maxcut": _maxcut,
    "cutnorm": _cutnorm,
    "stretch": _stretch,
    "experiment": _sharpness,
    "identities": _identities,
    "sweep": _sweep,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = OptConfig(restarts=args.restarts, seed=args.seed, workers=args.workers)
        return COMMANDS[args.command](args, cfg)
    except (GrothnormError, OSError, ValueError) as e:
        print(f"grothnorm: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
