"""Command-line experiments emitting CSV or JSON.

Exit codes: 0 success, 2 usage error, 3 arithmetic-range error.
"""

import argparse
import csv
import io
import json
import math
import sys

from . import analysis, generators, pi_stats
from .generators import Algorithm, CostMode, InvalidRadiusError, check_radius
from .lattice import ArithmeticRangeError

DEFAULT_RADII = [10, 100, 1000, 10000, 100000, 1000000]

EXIT_USAGE = 2
EXIT_RANGE = 3


def _f9(v):
    return f"{v:.9f}"


def _e9(v):
    return f"{v:.9e}"


def _f12(v):
    return f"{v:.12f}"


def _cell(value, fmt):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if fmt is not None:
        return fmt(value)
    return str(value)


class Table:
    """Rows plus column formatters; rendered once as CSV or JSON."""

    def __init__(self, command, columns, formats=None):
        self.command = command
        self.columns = list(columns)
        self.formats = formats or {}
        self.rows = []
        self.summary = None

    def add(self, *values):
        self.rows.append(dict(zip(self.columns, values)))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_cell(row[c], self.formats.get(c)) for c in self.columns])
        if self.summary:
            items = " ".join(f"{k}={_cell(v, None)}" for k, v in self.summary.items())
            buf.write(f"# {items}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"command": self.command, "columns": self.columns, "rows": self.rows}
        if self.summary:
            doc["summary"] = self.summary
        return json.dumps(doc, indent=1) + "\n"


def _radii(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid radius list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty radius list")
    return values


def _radius_of(args):
    if args.radius is None:
        raise InvalidRadiusError("--radius is required")
    return check_radius(args.radius)


def cmd_circle(args) -> Table:
    r = _radius_of(args)
    algorithm = Algorithm(args.algorithm)
    table = Table("circle", ["n", "x", "y", "a", "s", "step_valid"])
    if algorithm is Algorithm.SIGNUM:
        q = generators.generate_quarter(r, CostMode(args.cost))
        if args.full:
            coords, signs, closed = generators.expand_full(q).coords, None, True
        else:
            coords, signs, closed = q.coords, q.step_signs, False
    else:
        coords, signs, closed = generators.generate_reference(r, algorithm).coords, None, True

    lengths = generators.step_lengths(coords, closed)
    for n, (x, y) in enumerate(coords.tolist()):
        s = int(signs[n]) if signs is not None and n < len(signs) else None
        ok = bool(lengths[n] == 1) if n < len(lengths) else None
        table.add(n, x, y, abs(x) + abs(y), s, ok)
    valid, first = generators.is_valid_path(coords, closed)
    table.summary = {
        "algorithm": algorithm.value,
        "radius": r,
        "points": len(coords),
        "valid": valid,
        "first_invalid_step": first,
    }
    return table


def _pi_table_rows(table, radii, mode):
    for row in pi_stats.convergence_table(radii, mode).rows:
        table.add(
            row.radius,
            row.arithmetic_mean,
            row.abs_error_to_pi,
            row.harmonic_mean,
            row.reciprocal_mean,
            row.identity_residual,
        )


def cmd_pi_table(args) -> Table:
    radii = [check_radius(r) for r in (args.radii or DEFAULT_RADII)]
    table = Table(
        "pi-table",
        ["r", "arithmetic_mean", "abs_error_to_pi", "harmonic_mean", "reciprocal_mean", "identity_residual"],
        {
            "arithmetic_mean": _f9,
            "abs_error_to_pi": _e9,
            "harmonic_mean": _f9,
            "reciprocal_mean": _f9,
            "identity_residual": _e9,
        },
    )
    _pi_table_rows(table, radii, CostMode(args.cost))
    return table


def cmd_means(args) -> Table:
    r = _radius_of(args)
    rep = pi_stats.mean_report(pi_stats.pi_sequence(generators.generate_quarter(r, CostMode(args.cost))))
    table = Table(
        "means",
        [
            "r",
            "arithmetic_mean",
            "abs_error_to_pi",
            "harmonic_mean",
            "harmonic_limit_error",
            "reciprocal_mean",
            "reciprocal_limit_error",
            "identity_residual",
        ],
        {
            "arithmetic_mean": _f9,
            "abs_error_to_pi": _e9,
            "harmonic_mean": _f9,
            "harmonic_limit_error": _e9,
            "reciprocal_mean": _f9,
            "reciprocal_limit_error": _e9,
            "identity_residual": _e9,
        },
    )
    table.add(
        r,
        rep.arithmetic_mean,
        rep.abs_error_to_pi,
        rep.harmonic_mean,
        abs(rep.harmonic_mean - pi_stats.HARMONIC_LIMIT),
        rep.reciprocal_mean,
        abs(rep.reciprocal_mean - pi_stats.RECIPROCAL_LIMIT),
        rep.identity_residual,
    )
    return table


def cmd_compare(args) -> Table:
    radii = [check_radius(r) for r in (args.radii or ([args.radius] if args.radius else [10, 100, 1000]))]
    table = Table(
        "compare",
        ["r", "algorithm", "points", "expected", "ratio", "valid", "diagonal_steps"],
        {"ratio": _f9},
    )
    mode = CostMode(args.cost)
    for r in radii:
        for algorithm in Algorithm:
            if algorithm is Algorithm.SIGNUM:
                coords = generators.expand_full(generators.generate_quarter(r, mode)).coords
            else:
                coords = generators.generate_reference(r, algorithm).coords
            valid, _ = generators.is_valid_path(coords, closed=True)
            table.add(
                r,
                algorithm.value,
                len(coords),
                8 * r,
                len(coords) / (8 * r),
                valid,
                generators.diagonal_steps(coords, closed=True),
            )
    return table


def cmd_angles(args) -> Table:
    prof = analysis.angle_profile(_radius_of(args))
    table = Table(
        "angles",
        ["n", "phi", "phi_uniform", "deviation"],
        {"phi": _f12, "phi_uniform": _f12, "deviation": _f12},
    )
    for n, (p, u, d) in enumerate(zip(prof.phi.tolist(), prof.phi_uniform.tolist(), prof.deviation.tolist())):
        table.add(n, p, u, d)
    return table


def cmd_sums(args) -> Table:
    r = _radius_of(args)
    sums = analysis.partial_sums(generators.generate_quarter(r, CostMode(args.cost)))
    table = Table(
        "sums",
        ["n", "S", "closed_form", "difference"],
        {"closed_form": _f9, "difference": _f9},
    )
    for n, s in enumerate(sums.values.tolist()):
        cf = analysis.closed_form_S(n, r)
        table.add(n, s, cf, s - cf)
    return table


def cmd_series(args) -> Table:
    if args.kmax is None or args.kmax < 0:
        raise InvalidRadiusError("--kmax must be a nonnegative integer")
    table = Table("series", ["k", "partial_sum", "abs_error"], {"partial_sum": _f12, "abs_error": _e9})
    total = []
    for k, term in enumerate(analysis.arcsin_series_terms(args.kmax)):
        total.append(term)
        partial = math.fsum(total)
        table.add(k, partial, abs(partial - math.pi))
    return table


COMMANDS = {
    "circle": cmd_circle,
    "pi-table": cmd_pi_table,
    "means": cmd_means,
    "compare": cmd_compare,
    "angles": cmd_angles,
    "sums": cmd_sums,
    "series": cmd_series,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", "-r", type=int)
    common.add_argument("--radii", type=_radii, help="comma-separated radii")
    common.add_argument("--algorithm", choices=[a.value for a in Algorithm], default="signum")
    common.add_argument("--cost", choices=[m.value for m in CostMode], default="approx")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--output", "-o", default="-", help="output file (default stdout)")
    common.add_argument("--kmax", type=int, default=50)
    common.add_argument("--full", action="store_true", help="circle: emit the whole 8r-point signum cycle")

    parser = argparse.ArgumentParser(prog="manhattan-pi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "circle": "points of one digital circle",
        "pi-table": "means of pi_n across a radius sweep",
        "means": "all means and limit errors for one radius",
        "compare": "signum vs reference algorithms: counts and validity",
        "angles": "angle discretization along the quarter path",
        "sums": "partial sums of step signs vs their closed form",
        "series": "partial sums of the arcsin series for pi",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table = COMMANDS[args.command](args)
    except ArithmeticRangeError as exc:
        print(f"manhattan-pi: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except ValueError as exc:
        print(f"manhattan-pi: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
