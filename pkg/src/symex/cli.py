"""Command-line surface: compute, coeffs, verify, bench, specialize.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 failed verification, 2 usage error, 3 domain error (extraction asked
for i > n).  Big integers are printed as decimal strings in JSON to stay
exact past 2**53.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .bigcomb import binomial_first
from .coeffs import coeff_closed_sequence, coeff_recurrence, vandermonde_degeneration_check, verify_convolution
from .esp import (
    ExtractionBreakdown,
    ExtractionDomainError,
    esp_all,
    esp_compare,
    esp_direct,
    esp_extraction,
    esp_loworder,
    specialize,
)
from .polyexpand import monomial_coefficient, verify_layer_decomposition
from .rootset import RootSet
from .series import verify_gf_transformed, verify_gf_untransformed
from .subsets import count_containing_supersets, k_subsets

DEFAULT_SEED = 42
DEFAULT_TRUNCATION = 30
DEFAULT_EXPLAIN_LIMIT = 12
DEFAULT_BENCH_GRID = ((10, 2), (10, 4), (14, 2), (14, 4), (18, 2), (18, 4))
SUITE_NAMES = ("equivalence", "convolution", "vandermonde", "gf", "layers", "multiplicity", "all")


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    passed: bool
    detail: str


def _random_roots(rng: random.Random, n_low: int, n_high: int, m_max: int) -> RootSet:
    n = rng.randint(n_low, n_high)
    return RootSet(tuple(rng.randint(1, m_max) for _ in range(n)))


def suite_equivalence(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    checks = []

    instances = failures = 0
    for n in range(1, 7):
        for tup in product(range(1, 5), repeat=n):
            roots = RootSet(tup)
            per_order = esp_all(roots)
            for i in range(1, n + 1):
                instances += 1
                direct = esp_direct(roots, i)
                sieve = esp_extraction(roots, i, explain_limit=0)[0]
                if not direct == sieve == per_order[i]:
                    failures += 1
    checks.append(SuiteCheck("equivalence exhaustive n<=6 m<=4", failures == 0, f"{instances} instances"))

    instances = failures = 0
    for _ in range(300):
        roots = _random_roots(rng, 1, 10, 9)
        per_order = esp_all(roots)
        for i in range(1, roots.n + 1):
            instances += 1
            direct = esp_direct(roots, i)
            sieve = esp_extraction(roots, i, explain_limit=0)[0]
            if not direct == sieve == per_order[i]:
                failures += 1
    checks.append(SuiteCheck("equivalence 300 random sets n<=10 m<=9", failures == 0, f"{instances} instances"))

    instances = failures = 0
    for _ in range(20):
        roots = _random_roots(rng, 4, 8, 9)
        for i in range(2, 6):
            instances += 1
            if esp_loworder(roots, i) != esp_direct(roots, i):
                failures += 1
    checks.append(
        SuiteCheck("spelled-out e2..e5 forms, 20 random sets n in 4..8", failures == 0, f"{instances} instances")
    )
    return checks


def suite_convolution(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    checks = []
    pairs = route_mismatches = bad_recurrence = bad_closed = 0
    for n in range(1, 21):
        for i in range(1, n + 1):
            pairs += 1
            by_recurrence = coeff_recurrence(n, i, 12)
            by_closed = coeff_closed_sequence(n, i, 12)
            if by_recurrence.values != by_closed.values:
                route_mismatches += 1
            if not verify_convolution(n, i, 12, by_recurrence).ok:
                bad_recurrence += 1
            if not verify_convolution(n, i, 12, by_closed).ok:
                bad_closed += 1
    detail = f"{pairs} (n,i) pairs, h<=12"
    checks.append(SuiteCheck("recurrence equals closed form", route_mismatches == 0, detail))
    checks.append(SuiteCheck("convolution sums = 1 (recurrence route)", bad_recurrence == 0, detail))
    checks.append(SuiteCheck("convolution sums = 1 (closed route)", bad_closed == 0, detail))
    return checks


def suite_vandermonde(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    pairs = failures = 0
    for n in range(1, 21):
        for i in range(1, n + 1):
            pairs += 1
            if not vandermonde_degeneration_check(n, i, 12).ok:
                failures += 1
    return [
        SuiteCheck(
            "vandermonde degeneration sum and term identification",
            failures == 0,
            f"{pairs} (n,i) pairs, h=12",
        )
    ]


def suite_gf(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    pairs = bad_untransformed = bad_transformed = 0
    for n in range(1, 13):
        for i in range(1, n + 1):
            pairs += 1
            if not verify_gf_untransformed(n, i, truncation).ok:
                bad_untransformed += 1
            if not verify_gf_transformed(n, i, truncation).ok:
                bad_transformed += 1
    detail = f"{pairs} (n,i) pairs, T={truncation}"
    return [
        SuiteCheck("series identity in powers of x/(1-x)", bad_untransformed == 0, detail),
        SuiteCheck("substituted series matches closed coefficients", bad_transformed == 0, detail),
    ]


def suite_layers(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    checks = []

    quartet = {
        (1, 1): Fraction(22, 24),
        (2, 1): Fraction(-18, 24),
        (3, 1): Fraction(4, 24),
        (2, 2): Fraction(6, 24),
    }
    quartet_ok = all(monomial_coefficient(4, lam) == want for lam, want in quartet.items())
    checks.append(SuiteCheck("order-4 two-element coefficients 22,18,4,6 over 4!", quartet_ok, "4 values"))

    ones_ok = all(monomial_coefficient(i, (1,) * i) == 1 for i in range(1, 9))
    checks.append(SuiteCheck("all-ones exponent coefficient = 1 for i<=8", ones_ok, "8 values"))

    instances = failures = 0
    for n in range(1, 6):
        for tup in product(range(1, 5), repeat=n):
            roots = RootSet(tup)
            for i in range(1, n + 1):
                instances += 1
                if not verify_layer_decomposition(roots, i).ok:
                    failures += 1
    checks.append(
        SuiteCheck("layer decomposition rebuilds the binomial, n<=5 m<=4", failures == 0, f"{instances} instances")
    )
    return checks


def suite_multiplicity(rng: random.Random, truncation: int) -> list[SuiteCheck]:
    instances = failures = 0
    for n in range(1, 9):
        for s in range(n + 1):
            for t in range(s + 1):
                for fixed in k_subsets(n, t):
                    instances += 1
                    counted = count_containing_supersets(n, fixed, s)
                    if counted != binomial_first(n - t, s - t):
                        failures += 1
    return [
        SuiteCheck(
            "superset counts match C(n-t, s-t), n<=8 exhaustive",
            failures == 0,
            f"{instances} instances",
        )
    ]


SUITES = {
    "equivalence": suite_equivalence,
    "convolution": suite_convolution,
    "vandermonde": suite_vandermonde,
    "gf": suite_gf,
    "layers": suite_layers,
    "multiplicity": suite_multiplicity,
}


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args: argparse.Namespace) -> int:
    roots: RootSet = args.roots
    i: int = args.i
    if i < 0:
        print("error: --i must be >= 0", file=sys.stderr)
        return 2

    if args.method == "all":
        if not 1 <= i <= roots.n:
            print(f"error: method 'all' needs 1 <= i <= n, got i={i}, n={roots.n}", file=sys.stderr)
            return 3
        comparison = esp_compare(roots, i)
        if args.json:
            payload = {
                "value": str(comparison.value),
                "method": "all",
                "values": {entry.method: str(entry.value) for entry in comparison.entries},
                "agree": comparison.agree,
            }
            print(json.dumps(payload))
        else:
            for entry in comparison.entries:
                print(f"{entry.method} {entry.value}")
            print(f"agree {'yes' if comparison.agree else 'no'}")
        return 0 if comparison.agree else 1

    breakdown: ExtractionBreakdown | None = None
    if args.method == "direct":
        value = esp_direct(roots, i)
    elif args.method == "dp":
        per_order = esp_all(roots)
        value = per_order[i] if i <= roots.n else 0
    else:
        try:
            value, breakdown = esp_extraction(roots, i, explain_limit=args.explain_limit)
        except ExtractionDomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3

    if args.json:
        payload: dict = {"value": str(value), "method": args.method}
        if breakdown is not None:
            payload["breakdown"] = {
                "head": str(breakdown.head),
                "terms": [
                    {"h": term.h, "weight": str(term.coefficient), "bracket_total": str(term.bracket_total)}
                    for term in breakdown.terms
                ],
            }
        print(json.dumps(payload))
        return 0

    print(value)
    if args.explain and breakdown is not None:
        print(f"head C({roots.total},{i}) = {breakdown.head}")
        for term in breakdown.terms:
            print(f"h={term.h} weight {term.coefficient} bracket_total {term.bracket_total}")
            if term.bracket is None:
                print(f"  (per-subset detail omitted: n > explain limit {args.explain_limit})")
                continue
            for indices, entry in term.bracket:
                subset_sum = sum(roots.elements[j - 1] for j in indices)
                label = "{" + ",".join(str(j) for j in indices) + "}"
                print(f"  {label} sum={subset_sum} C({subset_sum},{i})={entry}")
        print(f"total {breakdown.total}")
    return 0


def cmd_coeffs(args: argparse.Namespace) -> int:
    n, i = args.n, args.i
    if not 1 <= i <= n:
        print(f"error: need 1 <= i <= n, got i={i}, n={n}", file=sys.stderr)
        return 2
    h_max = args.h_max if args.h_max is not None else i
    if h_max < 1:
        print(f"error: --h-max must be >= 1, got {h_max}", file=sys.stderr)
        return 2

    by_recurrence = coeff_recurrence(n, i, h_max)
    by_closed = coeff_closed_sequence(n, i, h_max)
    convolution = verify_convolution(n, i, h_max, by_closed)
    sums = [check.observed for check in convolution.checks]

    rows = [
        {"h": h, "recurrence": by_recurrence[h], "closed": by_closed[h], "convolution": sums[h - 1]}
        for h in range(1, h_max + 1)
    ]
    consistent = by_recurrence.values == by_closed.values and convolution.ok

    if args.json:
        payload = {
            "n": n,
            "i": i,
            "rows": [
                {key: (row[key] if key == "h" else str(row[key])) for key in ("h", "recurrence", "closed", "convolution")}
                for row in rows
            ],
            "consistent": consistent,
        }
        print(json.dumps(payload))
    else:
        print(f"n={n} i={i}")
        print("h recurrence closed convolution")
        for row in rows:
            print(f"{row['h']} {row['recurrence']} {row['closed']} {row['convolution']}")
    if not consistent:
        print("error: coefficient routes disagree or convolution sum != 1", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rng = random.Random(args.seed)
    checks: list[SuiteCheck] = []
    for name in names:
        checks.extend(SUITES[name](rng, args.truncation))
    passed = sum(1 for check in checks if check.passed)
    all_ok = passed == len(checks)

    if args.json:
        payload = {
            "suite": args.suite,
            "seed": args.seed,
            "truncation": args.truncation,
            "rng": "mersenne-twister",
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            "passed": all_ok,
        }
        print(json.dumps(payload))
    else:
        print(f"verify suite={args.suite} seed={args.seed} truncation={args.truncation} rng=mersenne-twister")
        for check in checks:
            print(f"{'PASS' if check.passed else 'FAIL'} {check.name} ({check.detail})")
        print(f"result: {'PASS' if all_ok else 'FAIL'} ({passed}/{len(checks)} checks)")
    return 0 if all_ok else 1


def cmd_bench(args: argparse.Namespace) -> int:
    methods = tuple(part.strip() for part in args.methods.split(",") if part.strip())
    bad = [m for m in methods if m not in ("direct", "dp", "extraction")]
    if bad or not methods:
        print(f"error: unknown methods {bad}; choose from direct, dp, extraction", file=sys.stderr)
        return 2
    if (args.n is None) != (args.i is None):
        print("error: --n and --i must be given together", file=sys.stderr)
        return 2
    if args.n is not None:
        if not 1 <= args.i <= args.n:
            print(f"error: need 1 <= i <= n, got i={args.i}, n={args.n}", file=sys.stderr)
            return 2
        grid = ((args.n, args.i),)
    else:
        grid = DEFAULT_BENCH_GRID

    rng = random.Random(args.seed)
    records = []
    all_agree = True
    for n, i in grid:
        roots = RootSet(tuple(rng.randint(1, 9) for _ in range(n)))
        comparison = esp_compare(roots, i, methods=methods)
        all_agree = all_agree and comparison.agree
        records.append((n, i, roots, comparison))

    if args.json:
        payload = [
            {
                "n": n,
                "i": i,
                "roots": list(roots.elements),
                "value": str(comparison.value),
                "agree": comparison.agree,
                "timings_ms": {entry.method: entry.seconds * 1000.0 for entry in comparison.entries},
            }
            for n, i, roots, comparison in records
        ]
        print(json.dumps(payload))
    else:
        print(f"bench seed={args.seed} methods={','.join(methods)} repetitions=3")
        for n, i, roots, comparison in records:
            timings = " ".join(f"{entry.method}={entry.seconds * 1000.0:.3f}ms" for entry in comparison.entries)
            print(f"n={n} i={i} value={comparison.value} agree={'yes' if comparison.agree else 'no'} {timings}")
    return 0 if all_agree else 1


def cmd_specialize(args: argparse.Namespace) -> int:
    triangle = specialize(args.family, args.rows)
    if args.json:
        payload = {"family": args.family, "rows": [[str(v) for v in row] for row in triangle]}
        print(json.dumps(payload))
    else:
        for row in triangle:
            print(" ".join(str(v) for v in row))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symex",
        description="Exact elementary symmetric polynomials via binomial-product extraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate e_i of a root set")
    compute.add_argument("--roots", type=RootSet.parse, required=True, help="comma-separated positive integers")
    compute.add_argument("--i", type=int, required=True, help="polynomial order")
    compute.add_argument("--method", choices=("direct", "dp", "extraction", "all"), default="extraction")
    compute.add_argument("--explain", action="store_true", help="print the extraction breakdown")
    compute.add_argument("--explain-limit", type=int, default=DEFAULT_EXPLAIN_LIMIT, help="max n with per-subset detail")
    compute.add_argument("--json", action="store_true")
    compute.set_defaults(func=cmd_compute)

    coeffs = sub.add_parser("coeffs", help="sieve coefficients by both routes plus convolution sums")
    coeffs.add_argument("--n", type=int, required=True)
    coeffs.add_argument("--i", type=int, required=True)
    coeffs.add_argument("--h-max", type=int, default=None, help="how many coefficients (default: i)")
    coeffs.add_argument("--json", action="store_true")
    coeffs.set_defaults(func=cmd_coeffs)

    verify = sub.add_parser("verify", help="run an identity-verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized checks")
    verify.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION, help="series truncation order")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time the methods against each other on a grid")
    bench.add_argument("--n", type=int, default=None, help="single-cell root set size")
    bench.add_argument("--i", type=int, default=None, help="single-cell order")
    bench.add_argument("--methods", type=str, default="dp,extraction", help="comma-separated method names")
    bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(func=cmd_bench)

    special = sub.add_parser("specialize", help="print a number-triangle specialization")
    special.add_argument("--family", choices=("pascal", "stirling1"), required=True)
    special.add_argument("--rows", type=int, required=True)
    special.add_argument("--json", action="store_true")
    special.set_defaults(func=cmd_specialize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExtractionDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
