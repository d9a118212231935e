"""Command-line verifier for the hook-length identities.

Subcommands write one JSON object per line (or CSV for ``table``) and a
one-line status summary to stderr. Exit status is 0 when no check failed,
1 when some identity failed, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter
from contextlib import contextmanager
from math import factorial, isqrt
from typing import Iterable, Iterator, Sequence

from . import closed_forms, hook_statistics, rsk, series
from .hook_statistics import Elementary, HookStatistic, PowerSum, PowerSumVector, QProduct
from .partitions import Partition, syt_count
from .reports import ERRATUM, FAIL, INCONCLUSIVE, PASS, CheckReport, format_rational

MAX_PHI_N = 40
MAX_SERIES_ORDER = 12
MOMENT_BRACKET = (1.5, 1.9)  # n = 100, p = 1, finite-size window for E[is(w)/sqrt(n)]


class UsageError(Exception):
    pass


class _Timer:
    def __init__(self, enabled: bool) -> None:
        self.enabled = enabled
        self.ms = 0

    @contextmanager
    def measure(self) -> Iterator[None]:
        start = time.perf_counter()
        yield
        self.ms = int((time.perf_counter() - start) * 1000) if self.enabled else 0


def parse_statistic(text: str) -> HookStatistic:
    """'p2' -> PowerSum(2), 'e3', 'q1', and 'p2,1' -> PowerSumVector((2, 1))."""
    spec = text.strip().lower().replace("_", "")
    if len(spec) < 2 or spec[0] not in "peq":
        raise UsageError(f"bad statistic {text!r}; expected p<k>, e<j>, q<r> or p<mu1>,<mu2>,...")
    kind, rest = spec[0], spec[1:].strip("()[]")
    try:
        values = [int(x) for x in rest.split(",")]
    except ValueError:
        raise UsageError(f"bad statistic {text!r}") from None
    if any(v < 0 for v in values):
        raise UsageError(f"negative parameter in {text!r}")
    if kind == "p" and len(values) > 1:
        try:
            return PowerSumVector(Partition(tuple(values)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if len(values) != 1:
        raise UsageError(f"{kind} takes a single parameter: {text!r}")
    return {"p": PowerSum, "e": Elementary, "q": QProduct}[kind](values[0])


def parse_range(text: str) -> range:
    """'1..8' (inclusive) -> range(1, 9)."""
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    if hi > MAX_PHI_N:
        raise UsageError(f"range end {hi} exceeds cap {MAX_PHI_N}")
    return range(lo, hi + 1)


def expected_degree(F: HookStatistic) -> tuple[int, bool]:
    """(degree, exact) for F; exact=False means the value is only an upper bound."""
    if isinstance(F, PowerSum):
        return F.k + 1, True
    if isinstance(F, QProduct):
        return F.r + 1, True
    if isinstance(F, Elementary):
        # e_j is a combination of p_mu with mu of j, each of degree <= len(mu) + j
        return 2 * F.j, F.j == 0
    parts = F.mu.parts
    if len(parts) == 1:
        return parts[0] + 1, True
    return len(parts) + sum(parts), False


def cmd_verify_okada(max_n: int = 12, max_r: int = 6, timing: bool = False) -> Iterator[CheckReport]:
    timer = _Timer(timing)
    for n in range(1, max_n + 1):
        for r in range(max_r + 1):
            params = {"n": n, "r": r}
            if n > MAX_PHI_N:
                yield CheckReport("okada", params, INCONCLUSIVE, details={"reason": f"n exceeds cap {MAX_PHI_N}"})
                continue
            with timer.measure():
                lhs = hook_statistics.okada_lhs(r, n)
                rhs = closed_forms.okada_rhs(r, n)
            yield CheckReport.compare("okada", params, lhs, rhs, elapsed_ms=timer.ms)


def cmd_verify_series(order: int = 8, variant: str = series.CORRECTED, timing: bool = False) -> CheckReport:
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise UsageError(f"order must be in 0..{MAX_SERIES_ORDER}")
    if variant not in series.VARIANTS:
        raise UsageError(f"variant must be one of {series.VARIANTS}")
    timer = _Timer(timing)
    with timer.measure():
        lhs = series.phi_e_generating_lhs(order)
        rhs = series.phi_e_generating_rhs(order, variant)
        cmp = series.series_equal(lhs, rhs)
    params = {"order": order, "variant": variant}
    if cmp.equal:
        status = PASS if variant == series.CORRECTED else FAIL
        return CheckReport("series_e", params, status, elapsed_ms=timer.ms)
    details = {"first_mismatch": {"y_degree": cmp.outer_degree, "t_degree": cmp.inner_degree}}
    status = ERRATUM if variant == series.AS_PRINTED else FAIL
    if variant == series.AS_PRINTED and order >= 2:
        details["phi_2_e_2"] = {
            "printed_formula": format_rational(closed_forms.phi_ej_paper(2, 2)),
            "brute_force": format_rational(hook_statistics.phi(Elementary(2), 2)),
        }
    return CheckReport(
        "series_e", params, status, format_rational(cmp.left), format_rational(cmp.right),
        elapsed_ms=timer.ms, details=details,
    )


def cmd_degree(F: HookStatistic, n_range: Sequence[int], timing: bool = False) -> CheckReport:
    n_range = list(n_range)
    if any(b - a != 1 for a, b in zip(n_range, n_range[1:])):
        raise UsageError("degree detection needs consecutive n")
    expected, exact = expected_degree(F)
    params = {"statistic": str(F), "n_min": n_range[0], "n_max": n_range[-1]}
    details = {"expected": expected, "relation": "==" if exact else "<="}
    if len(n_range) < expected + 3:
        details["reason"] = f"need at least {expected + 3} points"
        return CheckReport("degree", params, INCONCLUSIVE, details=details)
    timer = _Timer(timing)
    with timer.measure():
        detected = hook_statistics.detect_degree([hook_statistics.phi(F, n) for n in n_range])
    details["detected"] = detected
    if detected == hook_statistics.INCONCLUSIVE:
        return CheckReport("degree", params, INCONCLUSIVE, elapsed_ms=timer.ms, details=details)
    ok = detected == expected if exact else detected <= expected
    return CheckReport("degree", params, PASS if ok else FAIL, str(detected), str(expected), timer.ms, details)


def table_rows(F: HookStatistic, n_range: Iterable[int]) -> list[tuple[int, str]]:
    return [(n, format_rational(hook_statistics.phi(F, n))) for n in n_range]


def cmd_table(F: HookStatistic, n_range: Iterable[int], fmt: str = "csv") -> str:
    rows = table_rows(F, n_range)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["statistic", "n", "phi"])
        for n, value in rows:
            writer.writerow([str(F), n, value])
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps({"statistic": str(F), "n": n, "phi": v}, sort_keys=True) + "\n" for n, v in rows)
    raise UsageError(f"unknown format {fmt!r}")


def cmd_rsk(
    subcommand: str,
    n: int,
    k: int = 1,
    p: int = 1,
    samples: int = 10000,
    seed: int = 0,
    cap: int = rsk.DEFAULT_EXHAUSTIVE_CAP,
    bracket: tuple[float, float] | None = None,
    timing: bool = False,
) -> Iterator[CheckReport]:
    if n < 1:
        raise UsageError("n must be positive")
    if subcommand != "moment" and n > cap:
        raise UsageError(f"exhaustive {subcommand} limited to n <= {cap}")
    timer = _Timer(timing)

    if subcommand == "roundtrip":
        for w in rsk.permutations(n, cap):
            with timer.measure():
                back = rsk.rsk_inverse(rsk.rsk(w))
            status = PASS if back == w else FAIL
            yield CheckReport("rsk_roundtrip", {"n": n, "w": list(w)}, status, elapsed_ms=timer.ms)
    elif subcommand == "schensted":
        with timer.measure():
            agree = sum(rsk.longest_increasing(w) == rsk.rsk(w).shape.first for w in rsk.permutations(n, cap))
            fibers = rsk.shape_fibers(n, cap)
            fiber_ok = all(count == syt_count(shape) ** 2 for shape, count in fibers.items())
        total = sum(fibers.values())
        yield CheckReport.compare("schensted_is_equals_lambda1", {"n": n}, agree, total, elapsed_ms=timer.ms)
        yield CheckReport(
            "rsk_fiber_cardinality", {"n": n}, PASS if fiber_ok else FAIL,
            details={"shapes": len(fibers)},
        )
    elif subcommand == "hooksum":
        with timer.measure():
            lhs = rsk.exact_hookpower_sum(n, k, cap)
            rhs = hook_statistics.r_poly_value(k, n) * factorial(n)
            lower, middle, upper = rsk.hook_bound_sandwich(n, k, cap)
        yield CheckReport.compare("rsk_hookpower_sum", {"n": n, "k": k}, lhs, rhs, elapsed_ms=timer.ms)
        ok = lower <= middle <= upper
        yield CheckReport(
            "hook_bound_sandwich", {"n": n, "k": k}, PASS if ok else FAIL,
            details={"lower": format_rational(lower), "value": format_rational(middle), "upper": format_rational(upper)},
        )
    elif subcommand == "moment":
        if samples < 100:
            raise UsageError("moment needs at least 100 samples")
        with timer.measure():
            est = rsk.monte_carlo_is_moment(n, p, samples, seed)
        params = {"n": n, "p": p, "samples": samples, "seed": seed}
        details = {"mean": est.mean, "std_error": est.std_error}
        if n <= cap:
            moment = rsk.exact_is_moment(n, p, cap)
            root = isqrt(n)
            if root * root == n:
                details["exact_mean_rational"] = format_rational(moment / root**p)
            exact_value = float(moment) / n ** (p / 2)
            details["exact_mean"] = exact_value
            ok = abs(est.mean - exact_value) <= 3 * est.std_error
            details["window"] = "3 standard errors"
        else:
            if bracket is None and p == 1 and n == 100:
                bracket = MOMENT_BRACKET
            if bracket is None:
                details["reason"] = "no exact value or bracket available"
                yield CheckReport("is_moment", params, INCONCLUSIVE, elapsed_ms=timer.ms, details=details)
                return
            details["bracket"] = list(bracket)
            ok = bracket[0] <= est.mean <= bracket[1]
        yield CheckReport("is_moment", params, PASS if ok else FAIL, elapsed_ms=timer.ms, details=details)
    else:
        raise UsageError(f"unknown rsk subcommand {subcommand!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookstats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--timing", action="store_true", help="record elapsed_ms (output is no longer byte-reproducible)")

    p = sub.add_parser("verify-okada", help="P_r(n) against the Okada product formula")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--max-r", type=int, default=6)
    common(p)

    p = sub.add_parser("verify-series", help="generating function for Phi_n(e_j)")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--variant", choices=series.VARIANTS, default=series.CORRECTED)
    common(p)

    p = sub.add_parser("verify-rsk", help="RSK bijection, Schensted, hook sums and moments")
    p.add_argument("suite", choices=["roundtrip", "schensted", "hooksum", "moment"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=1, help="hook exponent 2k for hooksum")
    p.add_argument("--p", type=int, default=1, help="moment exponent")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=rsk.DEFAULT_EXHAUSTIVE_CAP, help="largest n for exhaustive runs")
    p.add_argument("--bracket", type=float, nargs=2, metavar=("LO", "HI"))
    common(p)

    p = sub.add_parser("degree", help="finite-difference degree of n -> Phi_n(F)")
    p.add_argument("statistic", help="p<k>, q<r>, e<j> or p<mu1>,<mu2>,...")
    p.add_argument("--n-range", default="1..8", help="inclusive range A..B")
    common(p)

    p = sub.add_parser("table", help="exact values of Phi_n(F)")
    p.add_argument("statistic")
    p.add_argument("--n-range", default="1..8")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    common(p)
    return parser


def _run(args: argparse.Namespace) -> tuple[str, list[CheckReport]]:
    if args.command == "verify-okada":
        if args.max_n < 1 or args.max_r < 0:
            raise UsageError("--max-n must be >= 1 and --max-r >= 0")
        reports = list(cmd_verify_okada(args.max_n, args.max_r, args.timing))
    elif args.command == "verify-series":
        reports = [cmd_verify_series(args.order, args.variant, args.timing)]
    elif args.command == "verify-rsk":
        bracket = tuple(args.bracket) if args.bracket else None
        reports = list(
            cmd_rsk(args.suite, args.n, args.k, args.p, args.samples, args.seed, args.cap, bracket, args.timing)
        )
    elif args.command == "degree":
        reports = [cmd_degree(parse_statistic(args.statistic), parse_range(args.n_range), args.timing)]
    else:
        return cmd_table(parse_statistic(args.statistic), parse_range(args.n_range), args.format), []
    return "".join(r.to_json() + "\n" for r in reports), reports


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, reports = _run(args)
    except (UsageError, rsk.ResourceLimitError) as exc:
        print(f"hookstats: error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"hookstats: error: cannot write output: {exc}", file=sys.stderr)
        return 2
    if reports:
        counts = Counter(r.status for r in reports)
        print(", ".join(f"{s}: {c}" for s, c in sorted(counts.items())), file=sys.stderr)
    return 1 if any(r.status == FAIL for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
