"""Batch driver: enumerate objects, run verification suites, emit reports.

Reports are line-delimited records followed by a summary block and are
byte-identical across runs with the same parameters and seed.  Exit codes:
0 all checks pass, 1 at least one check failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import __version__
from .compositions import Composition, SpComposition, compositions_of, sp_compositions_of
from .exponents import (
    ResidueContext,
    classify_zero_exponents,
    quadratic_negative_on_range,
    reference_violation,
    regularity_range,
    regularity_violations,
    residue_partitions,
    verify_exponent_shift,
)
from .meromorphy import (
    AnalyticAxioms,
    generic_direction,
    gk_product,
    lambda0_point,
    order_at_point,
    residue_extractor,
    surviving_residue_terms,
)
from .parabolic import enumerate_tables, relevant_parabolics, sigma_of_table
from .rootspace import is_negative_exponent
from .weyl import (
    all_elements,
    circ_reps,
    double_coset_reps,
    length,
    levi_elements,
    right_reduced_reps,
    right_reduced_reps_brute,
    tiles_group_exactly,
)

SCHEMA_VERSION = 1

SCHEMA_FULL = """\
weylcalc report schema v1
  header : '# weylcalc report' schema=<int> version=<semver>
  suite  : 'suite <name>' followed by 'param <key>=<value>' lines
  check  : 'check <suite> <instance-id> <pass|fail>[ <detail>]'
  axioms : 'axioms-consumed <comma-separated ids>' (order suites only)
  summary: 'summary suite=<name> checks=<int> failures=<int>'
  footer : 'result <PASS|FAIL> checks=<int> failures=<int>'
"""

SCHEMA_COMPACT = """\
weylcalc report schema v1 (compact)
  header / suite+param / check / axioms / summary / footer
"""


class Report:
    """Accumulates deterministic report lines and the pass/fail tally."""

    def __init__(self, seed: int) -> None:
        self.lines: list[str] = [
            f"# weylcalc report schema={SCHEMA_VERSION} version={__version__}"
        ]
        self.checks = 0
        self.failures = 0
        self.seed = seed

    def suite(self, name: str, **params) -> None:
        self.lines.append(f"suite {name}")
        for key in sorted(params):
            self.lines.append(f"param {key}={params[key]}")
        self.lines.append(f"param seed={self.seed}")

    def check(self, suite: str, instance: str, ok: bool, detail: str = "") -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
        tail = f" {detail}" if detail else ""
        self.lines.append(f"check {suite} {instance} {'pass' if ok else 'fail'}{tail}")

    def note(self, line: str) -> None:
        self.lines.append(line)

    def summary(self, name: str, checks: int, failures: int) -> None:
        self.lines.append(f"summary suite={name} checks={checks} failures={failures}")

    def finish(self) -> str:
        verdict = "PASS" if self.failures == 0 else "FAIL"
        self.lines.append(
            f"result {verdict} checks={self.checks} failures={self.failures}"
        )
        return "\n".join(self.lines) + "\n"


def _parse_sp(text: str) -> SpComposition:
    return SpComposition.parse(text)


def _parse_gl(text: str) -> Composition:
    return Composition([int(p) for p in text.split(",") if p.strip() != ""])


# ---------------------------------------------------------------------------
# verification suites


def run_bijections(report: Report, n_weyl: int, n_sp: int, n_gl: int, rng: random.Random) -> None:
    start = report.checks, report.failures
    report.suite("bijections", n_weyl=n_weyl, n_sp=n_sp, n_gl=n_gl)
    for n in range(1, n_weyl + 1):
        levis = sp_compositions_of(n)
        elements = {comp: levi_elements(comp) for comp in levis}
        for comp in levis:
            fast = right_reduced_reps(comp)
            brute = right_reduced_reps_brute(comp)
            report.check(
                "bijections",
                f"reduced:N={n}:M={comp}",
                fast == brute,
                f"count={len(fast)}",
            )
        for left in levis:
            for right in levis:
                ok = tiles_group_exactly(
                    left,
                    right,
                    left_elements=elements[left],
                    right_elements=elements[right],
                )
                report.check("bijections", f"tiling:N={n}:L={left}:M={right}", ok)
    from .matrices import (
        j_embed,
        mat_mul,
        minus_marker,
        random_symplectic,
    )

    for a, b in ((1, 1), (1, 2), (2, 1)):
        ok = True
        marker = minus_marker(a, b)
        for _ in range(10):
            h1 = random_symplectic(a, rng)
            h2 = random_symplectic(b, rng)
            g = j_embed(h1, h2)
            if mat_mul(g, marker) != mat_mul(marker, g):
                ok = False
        report.check("bijections", f"embedding-centralizer:a={a}:b={b}", ok)
    from .parabolic import restriction_bijection_check, verify_relevant_family_matrix

    for kind, bound, standards in (
        ("sp", n_sp, sp_compositions_of),
        ("gl", n_gl, compositions_of),
    ):
        for n in range(1, bound + 1):
            for a in range(0, n + 1):
                b = n - a
                for comp in standards(n):
                    try:
                        counts = verify_relevant_family_matrix(a, b, comp)
                        ok, detail = True, (
                            f"members={counts['members']} excluded={counts['excluded']}"
                        )
                    except AssertionError as err:
                        ok, detail = False, str(err)
                    report.check(
                        "bijections",
                        f"tables-{kind}:N={n}:a={a}:b={b}:P={comp}",
                        ok,
                        detail,
                    )
                family = relevant_parabolics(a, b, kind)
                ok = all(restriction_bijection_check(p, a, b) for p in family)
                report.check(
                    "bijections",
                    f"restriction-{kind}:N={n}:a={a}:b={b}",
                    ok,
                    f"family={len(family)}",
                )
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("bijections", checks, failures)


def run_exponent_shift(report: Report, m: int, n: int) -> None:
    start = report.checks, report.failures
    report.suite("expexp", m=m, n=n)
    ctx = ResidueContext(m, n)
    for q in sp_compositions_of(ctx.rank):
        if q.is_full_group:
            continue
        for dp in residue_partitions(ctx, q):
            ok = verify_exponent_shift(ctx, q, dp)
            report.check("expexp", f"Q={q}:w={dp}", ok)
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("expexp", checks, failures)


def run_zero_classification(report: Report, m: int, n: int) -> None:
    start = report.checks, report.failures
    report.suite("exp-zeros", m=m, n=n)
    ctx = ResidueContext(m, n)
    try:
        records = classify_zero_exponents(ctx)
        for record in records:
            signs = ",".join(str(p) for p in record.pairings)
            report.check(
                "exp-zeros",
                f"Q={record.q}:w={record.dp}",
                True,
                f"pairings=({signs})",
            )
        zeros = sum(1 for r in records if r.is_global_zero)
        report.note(f"note exp-zeros global-zero-terms={zeros}")
    except AssertionError as err:
        report.check("exp-zeros", "classification", False, str(err))
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("exp-zeros", checks, failures)


def run_regularity(report: Report, m: int, n: int) -> None:
    start = report.checks, report.failures
    report.suite("regularity", m=m, n=n)
    ctx = ResidueContext(m, n)
    rng_desc = f"[{regularity_range(ctx).start},{regularity_range(ctx).stop - 1}]"
    report.check(
        "regularity",
        f"quadratic-negative:{rng_desc}",
        quadratic_negative_on_range(ctx),
    )
    violations = regularity_violations(ctx)
    if m == 0:
        report.check(
            "regularity", "no-violation", not violations, f"found={len(violations)}"
        )
    else:
        q, table = reference_violation(ctx)
        hit = any(
            v.q == q and v.table == table and v.slot == m for v in violations
        )
        report.check(
            "regularity", f"witness:Q={q}", hit, f"violations={len(violations)}"
        )
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("regularity", checks, failures)


def run_survivors(report: Report, m: int, n: int) -> None:
    start = report.checks, report.failures
    report.suite("survivors", m=m, n=n)
    ctx = ResidueContext(m, n)
    for i in range(0, m + 1):
        q = ctx.slotted_levi(i)
        try:
            terms = surviving_residue_terms(ctx, q)
            exponent = terms[0].element.act(ctx.lambda0())
            negative = is_negative_exponent(exponent, q)
            report.check(
                "survivors",
                f"slot={i}:Q={q}",
                negative,
                f"exponent=({','.join(str(x) for x in exponent)})",
            )
        except AssertionError as err:
            report.check("survivors", f"slot={i}:Q={q}", False, str(err))
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("survivors", checks, failures)


def run_gk_order(report: Report, m: int, n: int, axioms: AnalyticAxioms) -> None:
    start = report.checks, report.failures
    report.suite("gk-order", m=m, n=n)
    ctx = ResidueContext(m, n)
    point = lambda0_point(ctx)
    direction = generic_direction(ctx.nvars)
    q = residue_extractor(ctx)
    augmented = q.times(gk_product(ctx, augmented=True))
    result = order_at_point(augmented, point, direction, axioms)
    report.check(
        "gk-order",
        "augmented-recipe",
        result.order == 0,
        f"order={result.order}",
    )
    report.note(
        "axioms-consumed " + ",".join(sorted(result.consumed))
    )
    displayed = q.times(gk_product(ctx, augmented=False))
    displayed_result = order_at_point(displayed, point, direction, axioms)
    report.note(
        f"note gk-order displayed-recipe order={displayed_result.order}"
        f" (reported, not asserted)"
    )
    checks, failures = report.checks - start[0], report.failures - start[1]
    report.summary("gk-order", checks, failures)


def run_all(report: Report, axioms: AnalyticAxioms, rng: random.Random) -> None:
    run_bijections(report, 3, 3, 3, rng)
    for m in (0, 1, 2):
        for n in (1, 2):
            run_exponent_shift(report, m, n)
            run_zero_classification(report, m, n)
            run_regularity(report, m, n)
            run_survivors(report, m, n)
            run_gk_order(report, m, n, axioms)


# ---------------------------------------------------------------------------
# enumeration commands


def cmd_enumerate(args) -> int:
    out = []
    if args.kind == "weyl":
        if args.N is None:
            print("enumerate weyl needs --N", file=sys.stderr)
            return 2
        for idx, w in enumerate(all_elements(args.N)):
            out.append(f"{idx} {w} length={length(w)}")
    elif args.kind == "cosets":
        if args.N is None or args.M is None:
            print("enumerate cosets needs --N and --M", file=sys.stderr)
            return 2
        right = _parse_sp(args.M)
        if args.coset_kind == "right":
            reps = right_reduced_reps(right)
        else:
            if args.L is None:
                print("double/circ cosets need --L", file=sys.stderr)
                return 2
            left = _parse_sp(args.L)
            reps = (
                double_coset_reps(left, right)
                if args.coset_kind == "double"
                else circ_reps(left, right)
            )
        for idx, w in enumerate(reps):
            out.append(f"{idx} {w} length={length(w)}")
    elif args.kind == "tables":
        if args.alpha is None or args.a is None or args.b is None:
            print("enumerate tables needs --alpha, --a, --b", file=sys.stderr)
            return 2
        alpha = _parse_sp(args.alpha) if args.group == "sp" else _parse_gl(args.alpha)
        for idx, table in enumerate(enumerate_tables(args.a, args.b, alpha)):
            sigma = sigma_of_table(table)
            out.append(f"{idx} {table} sigma={sigma}")
    elif args.kind == "parabolics":
        if args.a is None or args.b is None:
            print("enumerate parabolics needs --a and --b", file=sys.stderr)
            return 2
        for idx, p in enumerate(relevant_parabolics(args.a, args.b, args.group)):
            out.append(f"{idx} base={p.base} sigma={p.conjugator}")
    elif args.kind == "dpartitions":
        if args.m is None or args.n is None or args.Q is None:
            print("enumerate dpartitions needs --m, --n, --Q", file=sys.stderr)
            return 2
        ctx = ResidueContext(args.m, args.n)
        for idx, dp in enumerate(residue_partitions(ctx, _parse_sp(args.Q))):
            out.append(f"{idx} {dp}")
    text = "\n".join(out) + ("\n" if out else "")
    _write(args.out, text)
    return 0


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_axioms(args) -> AnalyticAxioms:
    path = args.axioms or os.environ.get("WEYL_AXIOMS")
    if path:
        return AnalyticAxioms.load(path)
    return AnalyticAxioms.default()


def cmd_verify(args) -> int:
    report = Report(args.seed)
    axioms = _load_axioms(args)
    rng = random.Random(args.seed)
    m = args.m if args.m is not None else 1
    n = args.n if args.n is not None else 1
    if args.suite == "bijections":
        n = args.N or 3
        run_bijections(report, n, min(n, 3), min(n, 4), rng)
    elif args.suite == "expexp":
        run_exponent_shift(report, m, n)
    elif args.suite == "exp-zeros":
        run_zero_classification(report, m, n)
    elif args.suite == "regularity":
        run_regularity(report, m, n)
    elif args.suite == "survivors":
        run_survivors(report, m, n)
    elif args.suite == "gk-order":
        run_gk_order(report, m, n, axioms)
    elif args.suite == "all":
        run_all(report, axioms, rng)
    _write(args.out, report.finish())
    return 0 if report.failures == 0 else 1


def cmd_report_schema(args) -> int:
    if args.format == "full":
        sys.stdout.write(SCHEMA_FULL)
    else:
        sys.stdout.write(SCHEMA_COMPACT)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcalc",
        description="exact coset, table and pole-order computations for Sp_N/GL_N",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="dump objects, one record per line")
    enum.add_argument("kind", choices=["weyl", "cosets", "tables", "parabolics", "dpartitions"])
    enum.add_argument("--N", type=int)
    enum.add_argument("--m", type=int)
    enum.add_argument("--n", type=int)
    enum.add_argument("--a", type=int)
    enum.add_argument("--b", type=int)
    enum.add_argument("--L", type=str)
    enum.add_argument("--M", type=str)
    enum.add_argument("--Q", type=str)
    enum.add_argument("--alpha", type=str)
    enum.add_argument("--group", choices=["gl", "sp"], default="sp")
    enum.add_argument("--kind", dest="coset_kind", choices=["right", "double", "circ"], default="double")
    enum.add_argument("--out", type=str)
    enum.set_defaults(func=cmd_enumerate)

    verify = sub.add_parser("verify", help="run a verification suite and emit a report")
    verify.add_argument(
        "suite",
        choices=["bijections", "expexp", "exp-zeros", "regularity", "survivors", "gk-order", "all"],
    )
    verify.add_argument("--m", type=int)
    verify.add_argument("--n", type=int)
    verify.add_argument("--N", type=int)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--axioms", type=str)
    verify.add_argument("--out", type=str)
    verify.set_defaults(func=cmd_verify)

    schema = sub.add_parser("report-schema", help="print the report schema")
    schema.add_argument("--format", choices=["full", "compact"], default="full")
    schema.set_defaults(func=cmd_report_schema)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
