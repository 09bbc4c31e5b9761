"""Command-line front end: count, table, verify, grid, leja.

Counts are printed as exact decimal strings, never scientific notation.
Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource
guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import counting, grid as gridmod, series
from .counting import CountQuery, UnsupportedFamilyError
from .growth import LINEAR, POWER, POWER_PLUS_ONE, GrowthSpec, is_nested_pairing, parse_growth
from .grid import GridSpec, ResourceGuardError, build_grid, export_grid
from .nodes import LEJA_MAX_POINTS, NodeFamily, leja_sequence, parse_family

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_GUARD = 3

QUANTITIES = ("N", "Ndup", "Nsigma")
METHODS = ("closed", "recursion", "genfun", "oracle", "auto")

DEFAULT_VERIFY_GROWTHS = (
    "power_minus_one:2,power_minus_one:3,power:2,power:3,"
    "power_plus_one:2,power_plus_one:3,linear,odd,clenshaw_curtis"
)
DEFAULT_VERIFY_FAMILIES = ",".join(f.value for f in NodeFamily)
#: verify skips grid-oracle cells that would stream more tuples than this.
DEFAULT_ORACLE_BUDGET = 1_000_000


class UsageError(Exception):
    """Bad flags or an unsupported flag combination."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2 for verify
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="smolcount", description="Exact node counting for Smolyak sparse grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print one count for a (d, mu, growth) cell")
    p_count.add_argument("--d", type=int, required=True, help="dimension (>= 1)")
    p_count.add_argument("--mu", type=int, required=True, help="level (>= 0)")
    p_count.add_argument("--growth", required=True, help='growth spec, e.g. "power:3" or "linear"')
    p_count.add_argument("--quantity", choices=QUANTITIES, default="N")
    p_count.add_argument("--method", choices=METHODS, default="auto")
    p_count.add_argument("--family", help="node family (required for --method oracle)")
    p_count.set_defaults(func=cmd_count)

    p_table = sub.add_parser("table", help="emit counts over (d, mu) ranges")
    p_table.add_argument("--d", required=True, help='dimension range "LO:HI" or a single value')
    p_table.add_argument("--mu", required=True, help='level range "LO:HI" or a single value')
    p_table.add_argument("--growth", required=True)
    p_table.add_argument("--quantities", default="N", help="comma list from N,Ndup,Nsigma")
    p_table.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    p_table.add_argument("--out", help="output path (default: stdout)")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="cross-check every counting path cell by cell")
    p_verify.add_argument("--d-max", type=int, default=4)
    p_verify.add_argument("--mu-max", type=int, default=5)
    p_verify.add_argument("--growths", default=DEFAULT_VERIFY_GROWTHS, help="comma list of growth specs")
    p_verify.add_argument("--families", default=DEFAULT_VERIFY_FAMILIES, help="comma list of node families")
    p_verify.add_argument(
        "--oracle-budget",
        type=int,
        default=DEFAULT_ORACLE_BUDGET,
        help="skip grid-oracle cells streaming more tuples than this",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_grid = sub.add_parser("grid", help="build a grid and export it")
    p_grid.add_argument("--d", type=int, required=True)
    p_grid.add_argument("--mu", type=int, required=True)
    p_grid.add_argument("--family", required=True)
    p_grid.add_argument("--growth", required=True)
    p_grid.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p_grid.add_argument("--out", help="output path (default: data to stdout, cardinality to stderr)")
    p_grid.set_defaults(func=cmd_grid)

    p_leja = sub.add_parser("leja", help="print the leading Leja points")
    p_leja.add_argument("--n", type=int, required=True)
    p_leja.add_argument("--seed", type=float, default=1.0, help="first point (ignored with --symmetric)")
    p_leja.add_argument("--symmetric", action="store_true")
    p_leja.set_defaults(func=cmd_leja)

    return parser


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


def _oracle_spec(args, q: CountQuery, nested: bool) -> GridSpec:
    if not args.family:
        raise UsageError("--method oracle needs --family")
    family = parse_family(args.family)
    return GridSpec(q.d, q.mu, family, q.growth, nested_mode=nested)


def _compute_count(args, q: CountQuery) -> int:
    quantity, method = args.quantity, args.method
    if quantity == "N":
        if method == "closed":
            return counting.count_nested_closed(q)
        if method == "recursion":
            return counting.count_nested_recursion(q)
        if method == "genfun":
            return series.count_via_genfun(q.growth, q.d, q.mu, "nested")
        if method == "oracle":
            return gridmod.grid_cardinality_oracle(_oracle_spec(args, q, nested=True))
        try:
            return counting.count_nested_closed(q)
        except UnsupportedFamilyError:
            return counting.count_nested_recursion(q)
    if quantity == "Ndup":
        if method == "closed":
            return counting.count_dup_closed(q)
        if method == "recursion":
            raise UsageError("Ndup has no recursion path; use closed, genfun, oracle, or auto")
        if method == "genfun":
            return series.count_via_genfun(q.growth, q.d, q.mu, "with_duplicates")
        if method == "oracle":
            return gridmod.duplicate_count_oracle(_oracle_spec(args, q, nested=True))
        try:
            return counting.count_dup_closed(q)
        except UnsupportedFamilyError:
            return counting.count_dup_sum(q)
    # Nsigma
    if method == "closed":
        if q.growth.family != LINEAR:
            raise UsageError("Nsigma has a closed form only for linear growth")
        return counting.count_sigma_linear_closed(q.d, q.mu)
    if method == "recursion":
        raise UsageError("Nsigma has no recursion path; use closed, genfun, oracle, or auto")
    if method == "genfun":
        lo = max(0, q.mu + 1 - q.d)
        return sum(
            series.count_via_genfun(q.growth, q.d, k, "with_duplicates")
            for k in range(lo, q.mu + 1)
        )
    if method == "oracle":
        return gridmod.duplicate_count_oracle(_oracle_spec(args, q, nested=False))
    return counting.count_sigma(q)


def cmd_count(args) -> int:
    growth = parse_growth(args.growth)
    q = CountQuery(args.d, args.mu, growth)
    print(_compute_count(args, q))
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _parse_range(text: str, minimum: int, what: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    try:
        lo_v = int(lo)
        hi_v = int(hi) if hi else lo_v
    except ValueError:
        raise UsageError(f'bad {what} range {text!r}; expected "LO:HI" or a single integer') from None
    if lo_v < minimum or hi_v < lo_v:
        raise UsageError(f"{what} range must satisfy {minimum} <= LO <= HI, got {text!r}")
    return lo_v, hi_v


def _auto_counts(q: CountQuery, quantities: tuple[str, ...]) -> dict[str, int]:
    out = {}
    for quantity in quantities:
        if quantity == "N":
            try:
                out[quantity] = counting.count_nested_closed(q)
            except UnsupportedFamilyError:
                out[quantity] = counting.count_nested_recursion(q)
        elif quantity == "Ndup":
            try:
                out[quantity] = counting.count_dup_closed(q)
            except UnsupportedFamilyError:
                out[quantity] = counting.count_dup_sum(q)
        else:
            out[quantity] = counting.count_sigma(q)
    return out


def cmd_table(args) -> int:
    growth = parse_growth(args.growth)
    d_lo, d_hi = _parse_range(args.d, minimum=1, what="dimension")
    mu_lo, mu_hi = _parse_range(args.mu, minimum=0, what="level")
    requested = tuple(s.strip() for s in args.quantities.split(",") if s.strip())
    bad = [s for s in requested if s not in QUANTITIES]
    if bad or not requested:
        raise UsageError(f"quantities must be a comma list from {','.join(QUANTITIES)}")
    quantities = tuple(name for name in QUANTITIES if name in requested)

    rows = []
    for d in range(d_lo, d_hi + 1):
        for mu in range(mu_lo, mu_hi + 1):
            q = CountQuery(d, mu, growth)
            rows.append((d, mu, _auto_counts(q, quantities)))

    text = _render_table(rows, growth, quantities, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _render_table(rows, growth: GrowthSpec, quantities: tuple[str, ...], fmt: str) -> str:
    if fmt == "csv":
        lines = ["d,mu,growth," + ",".join(quantities)]
        for d, mu, counts in rows:
            lines.append(
                f"{d},{mu},{growth}," + ",".join(str(counts[name]) for name in quantities)
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {"d": d, "mu": mu, "growth": str(growth), **{name: str(counts[name]) for name in quantities}}
            for d, mu, counts in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    # pretty
    header = ["d", "mu"] + list(quantities)
    table = [header] + [
        [str(d), str(mu)] + [str(counts[name]) for name in quantities] for d, mu, counts in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = [f"growth = {growth}"]
    for row in table:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@dataclass
class VerificationResult:
    ok: bool = True
    cells_checked: int = 0
    oracle_cells: int = 0
    oracle_skipped: int = 0
    failures: list[str] = field(default_factory=list)
    methods_exercised: set[str] = field(default_factory=set)

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)


def run_verification(
    d_max: int,
    mu_max: int,
    growths: list[GrowthSpec],
    families: list[NodeFamily],
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    echo=print,
) -> VerificationResult:
    """Cross-check every counting path on every cell; report a matrix.

    Covers per-cell method agreement, the literature identities, and the
    grid-construction oracle for every nested (family, growth) pairing that
    fits the streaming budget.
    """
    result = VerificationResult()
    echo(f"cross-method agreement, d <= {d_max}, mu <= {mu_max}")
    for growth in growths:
        echo(f"  growth {growth}:")
        for d in range(1, d_max + 1):
            marks = []
            for mu in range(mu_max + 1):
                report = counting.count_report(CountQuery(d, mu, growth))
                result.cells_checked += 1
                result.methods_exercised |= report.methods
                if report.agreement:
                    marks.append("ok")
                else:
                    marks.append("XX")
                    result.fail(f"disagreement at d={d}, mu={mu}, growth={growth}")
            echo(f"    d={d}: " + " ".join(marks))

    echo("literature identities:")
    for growth in growths:
        if growth.family == POWER and growth.base == 2:
            good = all(
                counting.count_ullrich(d, mu) * 2**d
                == counting.count_nested_closed(CountQuery(d, mu, growth))
                for d in range(1, d_max + 1)
                for mu in range(mu_max + 1)
            )
            result.methods_exercised.add("lit:ullrich")
            echo(f"  halved-doubling identity vs {growth}: {'ok' if good else 'FAIL'}")
            if not good:
                result.fail("halved-doubling identity failed")
        if growth.family == POWER_PLUS_ONE and growth.base == 2:
            good = all(
                counting.count_bungartz(d, mu)
                == counting.count_nested_closed(CountQuery(d, mu, growth))
                for d in range(1, d_max + 1)
                for mu in range(mu_max + 1)
            )
            result.methods_exercised.add("lit:skeleton")
            echo(f"  skeleton-sum identity vs {growth}: {'ok' if good else 'FAIL'}")
            if not good:
                result.fail("skeleton-sum identity failed")

    echo("grid-construction oracle (nested pairings):")
    for family in families:
        for growth in growths:
            if not is_nested_pairing(family, growth):
                continue
            marks = []
            for d in range(1, d_max + 1):
                for mu in range(mu_max + 1):
                    spec = GridSpec(d, mu, family, growth, nested_mode=True)
                    if gridmod.duplicate_count_oracle(spec) > oracle_budget:
                        result.oracle_skipped += 1
                        marks.append(f"d={d},mu={mu}:skip")
                        continue
                    expected = counting.count_nested_recursion(CountQuery(d, mu, growth))
                    got = gridmod.grid_cardinality_oracle(spec)
                    result.oracle_cells += 1
                    result.methods_exercised.add("grid:oracle")
                    if got != expected:
                        marks.append(f"d={d},mu={mu}:FAIL")
                        result.fail(
                            f"grid oracle mismatch for ({family.value}, {growth}) at "
                            f"d={d}, mu={mu}: built {got}, formula {expected}"
                        )
            status = "ok" if not any("FAIL" in m for m in marks) else "FAIL"
            skipped = sum(1 for m in marks if m.endswith("skip"))
            note = f" ({skipped} cells over budget)" if skipped else ""
            echo(f"  ({family.value}, {growth}): {status}{note}")

    if result.ok:
        echo(
            f"all checks agree: {result.cells_checked} cells, "
            f"{result.oracle_cells} oracle cells ({result.oracle_skipped} skipped)"
        )
    else:
        echo(f"FAILED: {result.failures[0]}")
    return result


def cmd_verify(args) -> int:
    growths = [parse_growth(s) for s in args.growths.split(",") if s.strip()]
    families = [parse_family(s) for s in args.families.split(",") if s.strip()]
    if args.d_max < 1 or args.mu_max < 0:
        raise UsageError("need --d-max >= 1 and --mu-max >= 0")
    result = run_verification(
        args.d_max, args.mu_max, growths, families, oracle_budget=args.oracle_budget
    )
    return EXIT_OK if result.ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# grid / leja
# ---------------------------------------------------------------------------


def cmd_grid(args) -> int:
    growth = parse_growth(args.growth)
    family = parse_family(args.family)
    # The general index range collapses to the top shell for nested
    # pairings, so nested_mode is just an optimization here, not a choice.
    nested = is_nested_pairing(family, growth)
    spec = GridSpec(args.d, args.mu, family, growth, nested_mode=nested)
    grid = build_grid(spec)
    data = export_grid(grid, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(grid.cardinality)
    else:
        sys.stdout.buffer.write(data)
        print(grid.cardinality, file=sys.stderr)
    return EXIT_OK


def cmd_leja(args) -> int:
    if args.n < 1 or args.n > LEJA_MAX_POINTS:
        raise UsageError(f"--n must be in 1..{LEJA_MAX_POINTS}")
    points = leja_sequence(args.n, x1=args.seed, symmetric=args.symmetric)
    for x in points:
        print(f"{x:.17g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:  # console-script shim
    sys.exit(main())
