"""Command-line interface.

Exit codes: 0 success or predicate passed, 1 predicate failed, 2 usage,
validation or parse error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import bloch, geometry, landau, mapfile, variability

ENV_PRECISION = "PHARMONIC_PRECISION"
TABLE_MS = (1.1296, 2.0, 2.2976, 3.0)
TABLE_PS = {"41": (2, 3, 4), "42": (2, 3)}


class UsageError(Exception):
    pass


def _default_precision() -> int:
    raw = os.environ.get(ENV_PRECISION)
    if raw is None:
        return 6
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PRECISION} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{ENV_PRECISION} must be >= 1")
    return value


def _csv_floats(text):
    return [float(v) for v in text.split(",") if v.strip()]


def _csv_ints(text):
    return [int(v) for v in text.split(",") if v.strip()]


def _emit(text: str, output: str | None):
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _require(cond, message):
    if not cond:
        raise UsageError(message)


def _check_M(M):
    _require(M >= 1, "M must be ≥ 1")


def _check_p(p):
    _require(p >= 1, "p must be ≥ 1")


def _check_tol(tol):
    _require(tol > 0, "tol must be > 0")


def cmd_constants(args):
    c = landau.constants()
    values = {"M0": c.M0, "M1": c.M1, "s0": c.s0, "r0": c.r0}
    if args.format == "csv":
        text = "name,value\n" + "".join(f"{k},{v:.10g}\n" for k, v in values.items())
    else:
        text = _json({k: float(f"{v:.10g}") for k, v in values.items()})
    _emit(text, args.output)
    return 0


def _precision(args):
    return args.precision if args.precision is not None else _default_precision()


def _row_dict(r):
    return {"theorem": r.theorem.value, "M": r.M, "p": r.p, "rho": r.rho, "R": r.R,
            "residual": r.residual, "iterations": r.iterations}


def cmd_landau(args):
    _check_M(args.M)
    _check_p(args.p)
    _check_tol(args.tol)
    r = landau.solve(args.theorem, args.M, args.p, args.tol)
    if args.format == "json":
        text = _json(_row_dict(r))
    else:
        text = landau.format_rows([r], _precision(args)).split("\n", 1)[1]
    _emit(text, args.output)
    return 0


def cmd_landau_table(args):
    Ms = args.M if args.M is not None else list(TABLE_MS)
    ps = args.p if args.p is not None else list(TABLE_PS[args.theorem])
    for M in Ms:
        _check_M(M)
    for p in ps:
        _check_p(p)
    _check_tol(args.tol)
    rows = landau.generate_table(args.theorem, Ms, ps, args.tol)
    if args.format == "json":
        text = _json([_row_dict(r) for r in rows])
    else:
        text = landau.format_rows(rows, _precision(args))
    _emit(text, args.output)
    return 0


def cmd_bloch(args):
    _check_p(args.p)
    _require(args.M > 0, "M must be > 0")
    b = bloch.bloch_upper_bound(args.p, args.M)
    out = {
        "p": b.p,
        "M": b.M,
        "y_star": "degenerate" if b.degenerate else b.y_star,
        "phi_at_star": b.phi_at_star,
        "bound": b.bound,
    }
    if args.p == 2:
        out["note"] = (f"closed form 2M(2/(27 pi^3))(8+36 pi^2+(4+3 pi^2)^(3/2)) = "
                       f"{2 * bloch.P2_CLOSED_FORM_PHI:.6f}M; the published figure "
                       f"{bloch.P2_PUBLISHED_BOUND}M disagrees with this closed form")
    if args.format == "csv":
        text = "p,M,y_star,phi_at_star,bound\n" + ",".join(str(v) for v in list(out.values())[:5]) + "\n"
    else:
        text = _json(out)
    _emit(text, args.output)
    if args.emit_curve:
        n = args.curve_points
        lines = ["y,phi"]
        for i in range(n + 1):
            y = i / n
            lines.append(f"{y!r},{bloch.phi(args.p, y)!r}")
        with open(args.emit_curve, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


PREDICATES = {
    "sense": geometry.sense_preserving_report,
    "starlike": geometry.starlike_report,
    "convex": geometry.convex_report,
}


def cmd_check(args):
    try:
        fmap = mapfile.load(args.map_file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.map_file}: {exc.strerror}") from None
    _require(0 < args.r_max <= 0.999, "r-max must lie in (0, 0.999]")
    _require(args.radii >= 1 and args.angles >= 1, "radii and angles must be positive")
    grid = geometry.SamplingGrid.uniform(args.radii, args.angles, args.r_max)
    report = PREDICATES[args.predicate](fmap, grid)
    _emit(report.to_json() + "\n", args.output)
    if report.reason:
        print(report.reason, file=sys.stderr)
    return 0 if report.passed else 1


def _complex(text):
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def cmd_variability(args):
    _require(args.p >= 2, "p must be ≥ 2")
    _require(abs(args.z0) < 1, "|z0| must be < 1")
    _require(args.samples >= 1, "samples must be positive")
    s = variability.region_sample(args.p, args.z0, args.samples)
    summary = {"p": s.p, "z0": [s.z0.real, s.z0.imag], "n_points": int(s.points.size),
               "coverage_radius": s.coverage_radius, "max_modulus": s.max_modulus()}
    if args.format == "json":
        body = _json({**summary, "points": [[float(v.real), float(v.imag)] for v in s.points]})
        _emit(body, args.output)
        return 0
    lines = ["re,im"] + [f"{float(v.real)!r},{float(v.imag)!r}" for v in s.points]
    tail = f"# coverage_radius={s.coverage_radius!r} n_points={s.points.size}\n"
    if args.output and args.output != "-":
        _emit("\n".join(lines) + "\n", args.output)
        sys.stdout.write(tail)
    else:
        sys.stdout.write("\n".join(lines) + "\n" + tail)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pharmonic", description="p-harmonic mappings of the unit disk")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt):
        sp.add_argument("--format", choices=("csv", "json"), default=fmt)
        sp.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
        sp.add_argument("--config", default=None, help="file of key=value lines, same keys as the flags")

    sp = sub.add_parser("constants", help="print M0, M1, s0, r0")
    common(sp, "json")
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("landau", help="solve one Landau radius equation")
    sp.add_argument("--theorem", choices=("41", "42"), required=True)
    sp.add_argument("--M", type=float, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--precision", type=int, default=None, help="significant digits (default 6)")
    common(sp, "csv")
    sp.set_defaults(func=cmd_landau)

    sp = sub.add_parser("landau-table", help="solve a grid of (M, p)")
    sp.add_argument("--theorem", choices=("41", "42"), required=True)
    sp.add_argument("--M", type=_csv_floats, default=None, help="comma-separated list")
    sp.add_argument("--p", type=_csv_ints, default=None, help="comma-separated list")
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--precision", type=int, default=None)
    common(sp, "csv")
    sp.set_defaults(func=cmd_landau_table)

    sp = sub.add_parser("bloch", help="upper bound 2 M phi_p(y*)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--M", type=float, default=1.0)
    sp.add_argument("--emit-curve", default=None, metavar="PATH", help="write (y, phi_p(y)) samples as CSV")
    sp.add_argument("--curve-points", type=int, default=1000)
    common(sp, "json")
    sp.set_defaults(func=cmd_bloch)

    sp = sub.add_parser("check", help="sampled geometric predicate on a map file")
    sp.add_argument("map_file")
    sp.add_argument("--predicate", choices=tuple(PREDICATES), required=True)
    sp.add_argument("--radii", type=int, default=64)
    sp.add_argument("--angles", type=int, default=256)
    sp.add_argument("--r-max", type=float, default=0.99)
    common(sp, "json")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("variability", help="sample the region of variability")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--z0", type=_complex, required=True, help="e.g. 0.5 or 0.5+0.2j")
    sp.add_argument("--samples", type=int, default=10_000)
    common(sp, "csv")
    sp.set_defaults(func=cmd_variability)
    return parser


def read_config(path) -> list[str]:
    """Turn ``key=value`` lines into ``--key value`` tokens."""
    tokens = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "config":
                raise UsageError(f"{path}:{lineno}: nested config is not allowed")
            tokens += [f"--{key.lstrip('-')}", value]
    return tokens


def _splice_config(argv: list[str]) -> list[str]:
    # config values go right after the subcommand so explicit flags override them
    for i, tok in enumerate(argv):
        path = None
        if tok == "--config" and i + 1 < len(argv):
            path, rest = argv[i + 1], argv[:i] + argv[i + 2:]
        elif tok.startswith("--config="):
            path, rest = tok.split("=", 1)[1], argv[:i] + argv[i + 1:]
        if path is not None:
            try:
                extra = read_config(path)
            except OSError as exc:
                raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
            return rest[:1] + extra + rest[1:]
    return argv


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _splice_config(argv)
        args = build_parser().parse_args(argv)
        return args.func(args)
    except mapfile.MapFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
