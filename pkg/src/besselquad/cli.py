"""Batch command-line front end.

Subcommands:
  eval      one point: J, I, a z-derivative of J, or a kernel Fourier
            coefficient; prints a single JSON object.
  table     grid of (mu, z) points, JSON-lines or CSV, rows in grid
            order (mu-major) regardless of --jobs.
  selftest  the identity suite (oracle cross-checks + representation
            agreement); human summary plus a JSON report.
  converge  fixed-N node ladder for one evaluation; emits the doubling
            differences behind the spectral-accuracy claim.

Conventions: complex arguments are written RE, or RE+IMi / RE-IMi
(e.g. --z 2+1i); numbers are printed with 17 significant digits so
binary64 values round-trip; the node cap honours BESSELQUAD_NMAX over
--nmax.  Exit codes: 0 ok, 1 evaluation/identity failure, 2 value
produced with warnings, 64 usage error.
"""

import argparse
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bessel, oracles
from .errors import BesselQuadError
from .quadrature import QuadratureSpec

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_WARNINGS = 2
EXIT_USAGE = 64

_FLOAT = r"[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_COMPLEX_RE = re.compile(rf"^(?P<re>{_FLOAT})(?:(?P<im>[-+](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?)i)?$")

CSV_HEADER = "mu_re,mu_im,z_re,z_im,value_re,value_im,err_est,nodes,warnings"


@dataclass(frozen=True)
class EvalRequest:
    function: str
    mu: complex
    z: complex
    k: complex = 0.0 + 0.0j
    n: int = 0
    spec: QuadratureSpec = QuadratureSpec()
    representation: str = "auto"


@dataclass(frozen=True)
class TableRequest:
    function: str
    mu_grid: tuple
    z_grid: tuple
    spec: QuadratureSpec = QuadratureSpec()
    output_format: str = "json_lines"
    k: complex = 0.0 + 0.0j
    n: int = 0
    jobs: int = 1


def parse_complex(text: str) -> complex:
    """Parse RE or RE+IMi / RE-IMi (bare real accepted)."""
    m = _COMPLEX_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(
            f"invalid complex number {text!r} (expected RE or RE+IMi, e.g. 2+1i)"
        )
    re_part = float(m.group("re"))
    im_part = float(m.group("im")) if m.group("im") else 0.0
    return complex(re_part, im_part)


def _parse_grid(text: str):
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise argparse.ArgumentTypeError("grid must be a non-empty comma-separated list")
    return tuple(parse_complex(s) for s in items)


def _parse_n_list(text: str):
    try:
        values = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid node list: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("node list must be non-empty")
    for a, b in zip(values, values[1:]):
        if b <= a:
            raise argparse.ArgumentTypeError("node list must be strictly ascending")
    for v in values:
        if v < 8 or v & (v - 1):
            raise argparse.ArgumentTypeError(f"node counts must be powers of two >= 8, got {v}")
    return values


def _fnum(x: float) -> str:
    # JSON has no nan/inf; both mean "no usable number" here.
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def _csvnum(x: float) -> str:
    return format(float(x), ".17g")


def _warn_json(warnings) -> str:
    return "[" + ", ".join(f'"{w}"' for w in warnings) + "]"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_spec(args) -> QuadratureSpec:
    n_max = args.nmax
    env = os.environ.get("BESSELQUAD_NMAX")
    if env is not None:
        n_max = int(env)
    return QuadratureSpec(n_start=32, n_max=n_max, rtol=args.rtol, atol=args.atol)


def _dispatch(request: EvalRequest) -> bessel.EvalOutput:
    fn = request.function
    if fn == "J":
        if request.n:
            return bessel.bessel_j_shifted(request.mu, request.n, request.z, request.spec)
        rep = request.representation
        if rep in ("auto", "cos_kernel"):
            return bessel.bessel_j(request.mu, request.z, request.spec)
        if rep == "sin_kernel":
            return bessel.bessel_j_sin_kernel(request.mu, request.z, request.spec)
        if rep == "kummer":
            return bessel.bessel_j_kummer(request.mu, request.z, request.spec)
        raise BesselQuadError(f"unknown representation {rep!r}")
    if fn == "I":
        return bessel.bessel_i(request.mu, request.z, request.spec)
    if fn == "Jderiv":
        return bessel.bessel_j_deriv(request.mu, request.k, request.z, request.spec)
    if fn == "kappa":
        return bessel.kappa_fourier_coeff(request.n, request.mu, request.z, request.spec)
    raise BesselQuadError(f"unknown function {fn!r}")


def cmd_eval(request: EvalRequest) -> int:
    try:
        out = _dispatch(request)
    except BesselQuadError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    v = complex(out.value)
    print(
        f'{{"value_re": {_fnum(v.real)}, "value_im": {_fnum(v.imag)}, '
        f'"err_est": {_fnum(out.err_est)}, "nodes": {out.nodes_used}, '
        f'"warnings": {_warn_json(out.warnings)}}}'
    )
    return EXIT_WARNINGS if out.warnings else EXIT_OK


def _table_row(request: TableRequest, mu: complex, z: complex):
    sub = EvalRequest(
        function=request.function, mu=mu, z=z, k=request.k, n=request.n, spec=request.spec
    )
    try:
        out = _dispatch(sub)
        return (mu, z, out, None)
    except BesselQuadError as exc:
        return (mu, z, None, f"Error:{type(exc).__name__}")


def _render_row(row, output_format: str) -> str:
    mu, z, out, err = row
    if out is not None:
        v = complex(out.value)
        fields = (v.real, v.imag, out.err_est)
        nodes = out.nodes_used
        warnings = out.warnings
    else:
        fields = (math.nan, math.nan, math.nan)
        nodes = 0
        warnings = (err,)
    if output_format == "csv":
        nums = ",".join("nan" if math.isnan(x) else _csvnum(x) for x in fields)
        return (
            f"{_csvnum(mu.real)},{_csvnum(mu.imag)},{_csvnum(z.real)},{_csvnum(z.imag)},"
            f"{nums},{nodes},{';'.join(warnings)}"
        )
    return (
        f'{{"mu_re": {_fnum(mu.real)}, "mu_im": {_fnum(mu.imag)}, '
        f'"z_re": {_fnum(z.real)}, "z_im": {_fnum(z.imag)}, '
        f'"value_re": {_fnum(fields[0])}, "value_im": {_fnum(fields[1])}, '
        f'"err_est": {_fnum(fields[2])}, "nodes": {nodes}, '
        f'"warnings": {_warn_json(warnings)}}}'
    )


def cmd_table(request: TableRequest) -> int:
    pairs = [(mu, z) for mu in request.mu_grid for z in request.z_grid]
    if request.jobs > 1:
        with ThreadPoolExecutor(max_workers=request.jobs) as pool:
            rows = list(pool.map(lambda p: _table_row(request, *p), pairs))
    else:
        rows = [_table_row(request, *p) for p in pairs]
    if request.output_format == "csv":
        print(CSV_HEADER)
    for row in rows:
        print(_render_row(row, request.output_format))
    if any(err is not None for *_, err in rows):
        return EXIT_FAILURE
    if any(out is not None and out.warnings for _, _, out, _ in rows):
        return EXIT_WARNINGS
    return EXIT_OK


def cmd_selftest(seed: int, only, spec: QuadratureSpec, verbosity: int = 0) -> int:
    names = set(oracles.IDENTITY_NAMES)
    only = tuple(only or ())
    unknown = [name for name in only if name not in names]
    if unknown:
        print(f"error: unknown identity {unknown[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    config = oracles.SuiteConfig(seed=seed, only=only, spec=spec)
    reports = oracles.run_identity_suite(config)
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        line = (
            f"{status} {rep.identity_id}: max_rel={rep.max_rel_err:.3e} "
            f"max_abs={rep.max_abs_err:.3e} samples={rep.samples}"
        )
        if verbosity > 0:
            line += f" seed={seed}"
        print(line)
    all_pass = all(rep.passed for rep in reports)
    print(f"{'OK' if all_pass else 'FAILED'}: {sum(r.passed for r in reports)}/{len(reports)} identities pass")
    body = ", ".join(
        f'{{"identity_id": "{r.identity_id}", "max_rel_err": {_fnum(r.max_rel_err)}, '
        f'"max_abs_err": {_fnum(r.max_abs_err)}, "samples": {r.samples}, '
        f'"pass": {"true" if r.passed else "false"}}}'
        for r in reports
    )
    print(f'{{"seed": {seed}, "all_pass": {"true" if all_pass else "false"}, "reports": [{body}]}}')
    return EXIT_OK if all_pass else EXIT_FAILURE


def cmd_converge(function: str, mu: complex, z: complex, n_list, k: complex, n: int,
                 output_format: str) -> int:
    try:
        ladder = bessel.fixed_node_values(function, mu, z, n_list, k=k, n=n)
    except BesselQuadError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if output_format == "csv":
        print("n,value_re,value_im,delta")
    prev = None
    for nn, value in ladder:
        delta = abs(value - prev) if prev is not None else math.nan
        if output_format == "csv":
            dtxt = "nan" if math.isnan(delta) else _csvnum(delta)
            print(f"{nn},{_csvnum(value.real)},{_csvnum(value.imag)},{dtxt}")
        else:
            print(
                f'{{"n": {nn}, "value_re": {_fnum(value.real)}, '
                f'"value_im": {_fnum(value.imag)}, "delta": {_fnum(delta)}}}'
            )
        prev = value
    return EXIT_OK


def _make_parser() -> _Parser:
    parser = _Parser(prog="besselquad", description=__doc__.splitlines()[0])
    parser.add_argument("--rtol", type=float, default=1e-12, help="relative tolerance")
    parser.add_argument("--atol", type=float, default=1e-300, help="absolute tolerance")
    parser.add_argument(
        "--nmax", type=int, default=8192,
        help="node cap (power of two; BESSELQUAD_NMAX overrides)",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for the identity suite")
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format for table/converge")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one point")
    p_eval.add_argument("--fn", choices=("J", "I", "Jderiv", "kappa"), default="J")
    p_eval.add_argument("--mu", type=parse_complex, required=True)
    p_eval.add_argument("--z", type=parse_complex, required=True)
    p_eval.add_argument("--k", type=parse_complex, default=0.0 + 0.0j,
                        help="derivative order (Jderiv; Re k > -1)")
    p_eval.add_argument("--n", type=int, default=0,
                        help="order shift (J) or Fourier index (kappa)")
    p_eval.add_argument("--representation",
                        choices=("auto", "cos_kernel", "sin_kernel", "kummer"),
                        default="auto")

    p_table = sub.add_parser("table", help="evaluate a (mu, z) grid")
    p_table.add_argument("--fn", choices=("J", "I", "Jderiv", "kappa"), default="J")
    p_table.add_argument("--mu-grid", type=_parse_grid, required=True)
    p_table.add_argument("--z-grid", type=_parse_grid, required=True)
    p_table.add_argument("--k", type=parse_complex, default=0.0 + 0.0j)
    p_table.add_argument("--n", type=int, default=0)
    p_table.add_argument("--jobs", type=int, default=1,
                         help="row-level threads (output order is unchanged)")

    p_self = sub.add_parser("selftest", help="run the identity suite")
    p_self.add_argument("--only", action="append", default=[],
                        help="run only the named identity (repeatable)")
    p_self.add_argument("-v", "--verbose", action="count", default=0)

    p_conv = sub.add_parser("converge", help="fixed-N convergence ladder")
    p_conv.add_argument("--fn", choices=("J", "I", "Jderiv", "kappa"), default="J")
    p_conv.add_argument("--mu", type=parse_complex, required=True)
    p_conv.add_argument("--z", type=parse_complex, required=True)
    p_conv.add_argument("--k", type=parse_complex, default=0.0 + 0.0j)
    p_conv.add_argument("--n", type=int, default=0)
    p_conv.add_argument("--n-list", type=_parse_n_list, default=(16, 32, 64, 128, 256))
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        spec = _build_spec(args)
    except (ValueError, TypeError) as exc:
        parser.error(str(exc))
    if args.command == "eval":
        request = EvalRequest(
            function=args.fn, mu=args.mu, z=args.z, k=args.k, n=args.n,
            spec=spec, representation=args.representation,
        )
        return cmd_eval(request)
    if args.command == "table":
        if args.jobs < 1:
            parser.error("--jobs must be >= 1")
        request = TableRequest(
            function=args.fn, mu_grid=args.mu_grid, z_grid=args.z_grid, spec=spec,
            output_format="csv" if args.format == "csv" else "json_lines",
            k=args.k, n=args.n, jobs=args.jobs,
        )
        return cmd_table(request)
    if args.command == "selftest":
        return cmd_selftest(args.seed, args.only, spec, args.verbose)
    if args.command == "converge":
        return cmd_converge(args.fn, args.mu, args.z, args.n_list, args.k, args.n,
                            args.format)
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
