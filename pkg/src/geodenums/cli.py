"""Command-line surface: coefficient tables, single coefficients, and the
verification suites with machine-readable JSON reports.

Exit codes: 0 all checks passed, 1 any verification failure, 2 usage or I/O
error.  Reports are byte-identical across identical invocations except for
the elapsed_ms fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import geode, identities, wz
from .hypercat import functional_residual, hyper_catalan, solve_S
from .mpoly import (
    TruncatedSeries,
    coeff,
    constant_series,
    mul,
    s1_series,
    series_to_dict,
    sub,
)
from .report import VerifyReport, run_case

DEFAULT_WZ2_A = (2, 3, 4, 5)
DEFAULT_THM3_A = (1, 2, 3)


# ---------------------------------------------------------------------------
# table / coeff


def _series_for_table(kind: str, nvars: int, max_degree: int) -> TruncatedSeries:
    if kind == "S":
        return solve_S(nvars, max_degree)
    return geode.geode_series(nvars, max_degree).series


def _write_table(series: TruncatedSeries, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(series_to_dict(series), indent=2) + "\n")
        return
    header = ",".join(f"m_{i + 1}" for i in range(series.nvars)) + ",coeff"
    out.write(header + "\n")
    for m, c in sorted(series.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        out.write(",".join(str(e) for e in m) + f",{c}\n")


def geode_coefficient(exps: Sequence[int]) -> int:
    """Geode coefficient by closed form when at most two slots are nonzero,
    by the series oracle otherwise."""
    exps = tuple(exps)
    nonzero = [(i + 1, e) for i, e in enumerate(exps) if e]
    if not nonzero:
        return 1
    if len(nonzero) == 1:
        s, p = nonzero[0]
        return geode.geode_closed_two_nonzero(s, s + 1, p + 1, 0)
    if len(nonzero) == 2:
        (s, m_s), (t, m_t) = nonzero
        return geode.geode_closed_two_nonzero(s, t, m_s + m_t + 1, m_t)
    return coeff(geode.geode_series(len(exps), sum(exps)).series, exps)


# ---------------------------------------------------------------------------
# verify suites


def suite_thm1(max_degree: int) -> VerifyReport:
    report = VerifyReport("thm1")
    table = geode.geode_series(2, max_degree)
    for m1 in range(max_degree + 1):
        for m2 in range(max_degree + 1 - m1):
            closed = geode.geode_closed_2var(m1, m2)
            run_case(
                report,
                f"m1={m1:02d},m2={m2:02d}",
                {"m1": m1, "m2": m2},
                str(closed),
                lambda m1=m1, m2=m2, closed=closed: (
                    closed == table.coefficient((m1, m2)),
                    str(table.coefficient((m1, m2))),
                ),
            )
    return report


def suite_thm2(max_sum: int, a_values: Sequence[int] = (2, 3, 4, 5)) -> VerifyReport:
    report = VerifyReport("thm2")
    for a in a_values:
        table = geode.geode_series(a, max_sum)
        for p in range(max_sum + 1):
            for q in range(max_sum + 1 - p):
                exps = [0] * a
                exps[a - 2] = p
                exps[a - 1] = q
                closed = geode.geode_closed_shifted(a, p, q)

                def check(a=a, p=p, q=q, closed=closed, exps=tuple(exps), table=table):
                    oracle = table.coefficient(exps)
                    if closed != oracle:
                        return False, str(oracle)
                    if a == 2 and closed != geode.geode_closed_2var(p, q):
                        return False, f"{closed} != two-variable closed form"
                    return True, str(oracle)

                run_case(
                    report,
                    f"a={a},p={p:02d},q={q:02d}",
                    {"a": a, "m_a": p, "m_a1": q},
                    str(closed),
                    check,
                )
    return report


def suite_thm3(max_order: int, a_values: Sequence[int] = DEFAULT_THM3_A) -> VerifyReport:
    report = VerifyReport("thm3")
    for a in a_values:
        values = geode.eval_alternating(a, max_order)
        for n in range(max_order + 1):
            run_case(
                report,
                f"a={a},n={n:02d}",
                {"a": a, "n": n},
                str(a**n),
                lambda a=a, n=n, values=values: (
                    values.coefficient(n) == a**n,
                    str(values.coefficient(n)),
                ),
            )
    return report


def suite_eq31(max_n: int, max_a: int) -> VerifyReport:
    report = VerifyReport("eq31")
    for n in range(1, max_n + 1):
        for a in range(1, max_a + 1):
            run_case(
                report,
                f"n={n},a={a}",
                {"n": n, "a": a},
                str(a ** (n - 1)),
                lambda n=n, a=a: (
                    identities.partition_sum_main(n, a) == a ** (n - 1),
                    str(identities.partition_sum_main(n, a)),
                ),
            )
    return report


def _eq32_sum(n: int, a: int) -> int:
    total = 0
    for lam in identities.enumerate_mult_vectors(n, 2 * a):
        sign = -1 if lam.size % 2 else 1
        total += (
            sign
            * identities.multinomial(n, lam.mult)
            * identities.binom_general(lam.size + n, lam.size + 1)
        )
    return total


def _eq33_sum(n: int, a: int) -> int:
    total = 0
    for mu in identities.enumerate_mult_vectors(n - 1, 2 * a):
        sign = -1 if mu.size % 2 else 1
        total += (
            sign
            * identities.multinomial(n - 1, mu.mult)
            * identities.binom_general(mu.size + 2 * a + n, mu.size + 2 * a + 1)
        )
    return total


def suite_claims(max_n: int, max_a: int) -> VerifyReport:
    report = VerifyReport("claims")
    for n in range(1, max_n + 1):
        for a in range(1, max_a + 1):
            for x in range(-2, n + 1):
                run_case(
                    report,
                    f"claim1,n={n},a={a},x={x:+d}",
                    {"n": n, "a": a, "x": x},
                    "0",
                    lambda n=n, a=a, x=x: (
                        identities.claim1_sum(n, a, x) == 0,
                        str(identities.claim1_sum(n, a, x)),
                    ),
                )
                run_case(
                    report,
                    f"claim2,n={n},a={a},x={x:+d}",
                    {"n": n, "a": a, "x": x},
                    str(a ** (n - 1)),
                    lambda n=n, a=a, x=x: (
                        identities.claim2_sum(n, a, x) == a ** (n - 1),
                        str(identities.claim2_sum(n, a, x)),
                    ),
                )
            for x in range(0, n + 1):
                run_case(
                    report,
                    f"ct,n={n},a={a},x={x:+d}",
                    {"n": n, "a": a, "x": x},
                    str(identities.claim2_sum(n, a, x)),
                    lambda n=n, a=a, x=x: (
                        identities.claim2_ct(n, a, x) == identities.claim2_sum(n, a, x),
                        str(identities.claim2_ct(n, a, x)),
                    ),
                )
            # The two specialized binomial forms: lower-index C(|l|+n, |l|+1)
            # is claim1 at x = 0; C(|l|+2a+n, |l|+2a+1) is claim2 at x = 2a.
            run_case(
                report,
                f"eq32,n={n},a={a}",
                {"n": n, "a": a},
                "0",
                lambda n=n, a=a: (
                    _eq32_sum(n, a) == 0 == identities.claim1_sum(n, a, 0),
                    str(_eq32_sum(n, a)),
                ),
            )
            run_case(
                report,
                f"eq33,n={n},a={a}",
                {"n": n, "a": a},
                str(a ** (n - 1)),
                lambda n=n, a=a: (
                    _eq33_sum(n, a) == a ** (n - 1) == identities.claim2_sum(n, a, 2 * a),
                    str(_eq33_sum(n, a)),
                ),
            )
    return report


def suite_wz1(max_n: int) -> VerifyReport:
    report = wz.check_wz1(max_n)
    run_case(
        report,
        "negative-control-H",
        {},
        "sign-flipped companion must fail",
        lambda: (
            not wz.check_wz1(2, h=lambda n, k: -wz.H1(n, k)).all_passed(),
            "corrupted companion detected",
        ),
    )
    return report


def suite_wz2(max_n: int, a_values: Sequence[int] = DEFAULT_WZ2_A) -> VerifyReport:
    report = VerifyReport("wz2")
    for a in a_values:
        sub_report = wz.check_wz2(a, max_n)
        for case in sub_report.cases:
            case.id = f"a={a},{case.id}"
            report.cases.append(case)
    return report


def suite_certificate(max_n: int) -> VerifyReport:
    report = wz.check_certificate_R(max_n)
    run_case(
        report,
        "negative-control-R",
        {},
        "sign-flipped certificate must fail",
        lambda: (
            not wz.check_certificate_R(
                3, companion=lambda n, m: -wz.certificate_companion(n, m)
            ).all_passed(),
            "corrupted certificate detected",
        ),
    )
    return report


def suite_recurrence(max_vars: int, max_degree: int) -> VerifyReport:
    report = VerifyReport("recurrence")
    from .mpoly import iter_exponents

    for r in range(1, max_vars + 1):
        table = geode.geode_series(r, max_degree - 1)
        for d in range(1, max_degree + 1):
            def check(r=r, d=d, table=table):
                count = 0
                for m in iter_exponents(r, d):
                    if not geode.geode_recurrence_check(table, m):
                        return False, f"recurrence broken at m={m}"
                    count += 1
                return True, f"all {count} monomials verified"

            run_case(
                report,
                f"r={r},deg={d:02d}",
                {"r": r, "degree": d},
                "sum_k G[m - e_k] = C[m] on the whole layer",
                check,
            )
    return report


def suite_two_nonzero(
    max_n: int, pairs: Sequence[tuple[int, int]] = ((1, 2), (1, 3), (2, 3), (2, 5))
) -> VerifyReport:
    report = VerifyReport("two-nonzero")
    nvars = max(t for _, t in pairs)
    table = geode.geode_series(nvars, max_n - 1)
    for s, t in pairs:
        for n in range(1, max_n + 1):
            def check(s=s, t=t, n=n):
                for i in range(n):
                    closed = geode.geode_closed_two_nonzero(s, t, n, i)
                    exps = [0] * nvars
                    exps[s - 1] = n - 1 - i
                    exps[t - 1] = i
                    if closed != table.coefficient(exps):
                        return False, f"mismatch at i={i}: {closed}"
                    if (s, t) == (1, 2) and closed != geode.geode_closed_2var(n - 1 - i, i):
                        return False, f"two-variable closed form differs at i={i}"
                return True, f"all {n} coefficients match the oracle"

            run_case(
                report,
                f"s={s},t={t},n={n}",
                {"s": s, "t": t, "n": n},
                "closed form equals oracle for every i",
                check,
            )
    return report


def suite_general_eval(max_order: int) -> VerifyReport:
    report = VerifyReport("general-eval")

    def powers_case(a, c, base, order):
        values = geode.eval_general(a, c, order)
        actual = [values.coefficient(n) for n in range(order + 1)]
        return actual == [base**n for n in range(order + 1)], str(actual)

    run_case(
        report,
        "a=1,c=(3)",
        {"a": 1, "c": [3], "max_order": max_order},
        "coefficients 3^n",
        lambda: powers_case(1, (3,), 3, max_order),
    )
    run_case(
        report,
        "a=2,c=(2,3)",
        {"a": 2, "c": [2, 3], "max_order": 6},
        "coefficients 7^n",
        lambda: powers_case(2, (2, 3), 7, 6),
    )
    run_case(
        report,
        "a=2,c=(1,1)",
        {"a": 2, "c": [1, 1], "max_order": max_order},
        "matches the alternating evaluation",
        lambda: (
            geode.eval_general(2, (1, 1), max_order)
            == geode.eval_alternating(2, max_order),
            "series coincide",
        ),
    )
    return report


def suite_oracle(max_vars: int, max_degree: int) -> VerifyReport:
    """Self-consistency of the oracle itself: the defining equation residual
    vanishes and S - 1 = (t_1+...+t_r) G holds through the truncation."""
    report = VerifyReport("oracle")
    for r in range(1, max_vars + 1):
        run_case(
            report,
            f"residual,r={r}",
            {"r": r, "max_degree": max_degree},
            "zero series",
            lambda r=r: (
                functional_residual(solve_S(r, max_degree)).is_zero(),
                "residual is the zero series",
            ),
        )
        run_case(
            report,
            f"factorization,r={r}",
            {"r": r, "max_degree": max_degree},
            "S - 1 = (t_1+...+t_r) G",
            lambda r=r: (
                geode.geode_series(r, max_degree).factorization_holds(),
                "factorization holds",
            ),
        )
    return report


SUITE_NAMES = (
    "thm1",
    "thm2",
    "thm3",
    "eq31",
    "claims",
    "wz1",
    "wz2",
    "certificate",
    "recurrence",
    "two-nonzero",
    "general-eval",
    "oracle",
)


def _run_suite(name: str, args: argparse.Namespace) -> VerifyReport:
    if name == "thm1":
        return suite_thm1(args.max_degree if args.max_degree is not None else 12)
    if name == "thm2":
        return suite_thm2(args.max_sum if args.max_sum is not None else 8)
    if name == "thm3":
        a_values = (args.a,) if args.a is not None else DEFAULT_THM3_A
        return suite_thm3(args.max_order if args.max_order is not None else 8, a_values)
    if name == "eq31":
        return suite_eq31(
            args.max_n if args.max_n is not None else 7,
            args.max_a if args.max_a is not None else 3,
        )
    if name == "claims":
        return suite_claims(
            args.max_n if args.max_n is not None else 7,
            args.max_a if args.max_a is not None else 3,
        )
    if name == "wz1":
        return suite_wz1(args.max_n if args.max_n is not None else 200)
    if name == "wz2":
        a_values = (args.a,) if args.a is not None else DEFAULT_WZ2_A
        return suite_wz2(args.max_n if args.max_n is not None else 100, a_values)
    if name == "certificate":
        return suite_certificate(args.max_n if args.max_n is not None else 100)
    if name == "recurrence":
        return suite_recurrence(
            args.max_vars if args.max_vars is not None else 4,
            args.max_degree if args.max_degree is not None else 8,
        )
    if name == "two-nonzero":
        return suite_two_nonzero(args.max_n if args.max_n is not None else 7)
    if name == "general-eval":
        return suite_general_eval(args.max_order if args.max_order is not None else 8)
    if name == "oracle":
        return suite_oracle(
            args.max_vars if args.max_vars is not None else 4,
            args.max_degree if args.max_degree is not None else 10,
        )
    raise ValueError(f"unknown suite {name!r}")


# ---------------------------------------------------------------------------
# argument parsing and entry points


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodenums",
        description="Exact hyper-Catalan / Geode number kernel and verifier.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="export a coefficient table")
    table.add_argument("--vars", type=int, required=True, help="number of variables r")
    table.add_argument("--max-degree", type=int, required=True, help="truncation order")
    table.add_argument("--kind", choices=("S", "G"), required=True)
    table.add_argument("--format", choices=("json", "csv"), default="json")
    table.add_argument("--out", default="-", help="output path, - for stdout")

    coeff_cmd = commands.add_parser("coeff", help="print a single coefficient")
    coeff_cmd.add_argument("--kind", choices=("C", "G"), required=True)
    coeff_cmd.add_argument(
        "--exps", required=True, help="comma-separated exponent list, e.g. 1,1"
    )

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    verify.add_argument("--report", help="write the JSON report to this path")
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--max-a", type=int, default=None)
    verify.add_argument("--max-degree", type=int, default=None)
    verify.add_argument("--max-order", type=int, default=None)
    verify.add_argument("--max-sum", type=int, default=None)
    verify.add_argument("--max-vars", type=int, default=None)
    verify.add_argument("--a", type=int, default=None)
    return parser


def _cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.vars < 1:
        parser.error(f"--vars must be >= 1, got {args.vars}")
    if args.max_degree < 0:
        parser.error(f"--max-degree must be >= 0, got {args.max_degree}")
    series = _series_for_table(args.kind, args.vars, args.max_degree)
    if args.out == "-":
        _write_table(series, args.format, sys.stdout)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            _write_table(series, args.format, handle)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_coeff(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        exps = tuple(int(part) for part in args.exps.split(","))
    except ValueError:
        parser.error(f"--exps must be a comma-separated integer list, got {args.exps!r}")
    if not exps or any(e < 0 for e in exps):
        parser.error(f"--exps entries must be nonnegative, got {args.exps!r}")
    if args.kind == "C":
        print(hyper_catalan(exps))
    else:
        print(geode_coefficient(exps))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        merged = VerifyReport("all")
        for name in SUITE_NAMES:
            sub_report = _run_suite(name, args)
            for case in sub_report.cases:
                case.id = f"{name}/{case.id}"
                merged.cases.append(case)
        report = merged
    else:
        report = _run_suite(args.suite, args)
    report.cases.sort(key=lambda c: c.id)

    payload = json.dumps(report.to_dict(), indent=2) + "\n"
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.report}: {exc}", file=sys.stderr)
            return 2
        print(f"{report.suite}: {report.passed}/{report.total} passed")
        failure = report.first_failure()
        if failure is not None:
            print(f"first failure: {failure.id}: {failure.actual}")
    else:
        sys.stdout.write(payload)
    return 0 if report.all_passed() else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return _cmd_table(args, parser)
    if args.command == "coeff":
        return _cmd_coeff(args, parser)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
