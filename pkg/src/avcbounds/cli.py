"""Command-line front end.

Subcommands mirror the library surface: table/bound computation, code
reports, improved-code construction, the reproduction harness, and the
brute-force verifier.  Reports funnel through report.Table so CSV/JSON
bytes are deterministic; figures are optional side outputs.

Exit codes: 0 success, 1 reproduction/soundness mismatch, 2 usage or
config errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .bounds import (
    BoundMethod,
    advisory_bound,
    code_bound,
    feng_rao,
    fim_bound,
    improved_code,
    max_mu_set,
    resolve_v,
)
from .codes import CodeSpec, standard_code
from .curve import CurveConfigError, CurveSpec, Monomial, load_curve
from .oracle import (
    MESSAGE_SWEEP_CAP,
    SUBSPACE_CAP,
    gaussian_binomial,
    true_ghw,
    true_min_distance,
)
from .report import Table, bound_table, format_members
from .rho import rho_table_algebraic, rho_table_generic, BasisTriple
from .search import ExactSearchUnavailable

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_SEARCH_METHODS = (BoundMethod.ADVISORY, BoundMethod.FIM)


class UsageError(Exception):
    """Bad command parameters; reported on stderr with exit code 2."""


# --- small parsers -----------------------------------------------------------


def _parse_methods(text: str) -> list[BoundMethod]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            out.append(BoundMethod.from_token(token))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if not out:
        raise UsageError("need at least one method")
    return out


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        out = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad {what} list {text!r}") from exc
    if not out:
        raise UsageError(f"need at least one {what}")
    return out


def _parse_span(text: str, what: str) -> range:
    """'25..31' or a single integer; inclusive on both ends."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        single = int(text)
        return range(single, single + 1)
    except ValueError as exc:
        raise UsageError(f"bad {what} range {text!r}") from exc


def _parse_v(text: str):
    if text == "auto":
        return "auto"
    try:
        v = int(text)
    except ValueError as exc:
        raise UsageError(f"--v must be 'auto' or an integer, got {text!r}") from exc
    if v < 0:
        raise UsageError("--v must be nonnegative")
    return v


def monomial_label(m: Monomial) -> str:
    if m.alpha == 0 and m.beta == 0:
        return "1"
    part_x = "" if m.alpha == 0 else ("X" if m.alpha == 1 else f"X^{m.alpha}")
    part_y = "" if m.beta == 0 else ("Y" if m.beta == 1 else f"Y^{m.beta}")
    return part_x + part_y


def _pmap(fn, items, threads: int) -> list:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _emit(table: Table, args) -> None:
    text = table.render(args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------


def cmd_curve_info(args) -> int:
    curve = load_curve(args.curve)
    table = Table(("monomial", "weight", "index"), title=f"{curve.name}: n={curve.n}")
    for i in range(1, curve.n + 1):
        m = curve.monomial(i)
        table.add(monomial_label(m), int(curve.weights[i]), i)
    _emit(table, args)
    if args.figure:
        from . import figures

        figures.save_footprint_grid(curve, args.figure)
    return EXIT_OK


def cmd_rho_table(args) -> int:
    curve = load_curve(args.curve)
    if args.route == "generic":
        rho = rho_table_generic(BasisTriple.from_curve(curve))
    else:
        rho = rho_table_algebraic(curve)
    table = Table(("i", "j", "value"), title=f"{curve.name}: product order table")
    for i in range(1, rho.n + 1):
        for j in range(1, rho.n + 1):
            table.add(i, j, int(rho.rho[i, j]))
    _emit(table, args)
    if args.figure:
        from . import figures

        figures.save_table_heatmap(rho, args.figure, name=curve.name)
    return EXIT_OK


def _bound_row(table, l: int, method: BoundMethod, v_policy, exact: bool):
    """(value, certificate) of one method at one first-hit index."""
    if method in (BoundMethod.FR_WB, BoundMethod.FR_WWB, BoundMethod.FR_OWB):
        return feng_rao(table, l, method), ""
    if method is BoundMethod.ADVISORY:
        note = ""
        if exact:
            try:
                result = max_mu_set(table, (l,), exact=True)
                note = " exact"
            except ExactSearchUnavailable:
                result = max_mu_set(table, (l,))
                note = " heuristic (exact cap exceeded)"
        else:
            result = max_mu_set(table, (l,))
        return result.size, format_members(result.witness) + note
    v = resolve_v(table, l, v_policy)
    try:
        fr = fim_bound(table, l, v, exact=exact)
        note = " exact" if exact else ""
    except ExactSearchUnavailable:
        fr = fim_bound(table, l, v)
        note = " heuristic (exact cap exceeded)"
    low = next(c for c in fr.cases if c.size == fr.value)
    case = "zero" if low.pivot is None else f"pivot={low.pivot}"
    return fr.value, f"v={v} case={case} witness={format_members(low.witness)}{note}"


def cmd_bound(args) -> int:
    curve = load_curve(args.curve)
    if not 1 <= args.l <= curve.n:
        raise UsageError(f"--l must lie in 1..{curve.n}")
    methods = _parse_methods(args.methods)
    v_policy = _parse_v(args.v)
    rho = rho_table_algebraic(curve)
    table = bound_table(title=f"{curve.name}: bounds at first hit {args.l}")
    for method in methods:
        value, cert = _bound_row(rho, args.l, method, v_policy, args.exact)
        table.add(f"l={args.l}", method.token, value, cert)
    _emit(table, args)
    return EXIT_OK


def _resolve_code(curve: CurveSpec, args) -> CodeSpec:
    if args.parity is not None:
        if args.s is not None:
            raise UsageError("--s and --parity are mutually exclusive")
        return CodeSpec(curve, tuple(_parse_int_list(args.parity, "parity index")))
    if args.s is None:
        raise UsageError("need --s or --parity")
    if not 0 <= args.s <= curve.n:
        raise UsageError(f"--s must lie in 0..{curve.n}")
    return standard_code(curve, args.s)


def cmd_code(args) -> int:
    curve = load_curve(args.curve)
    code = _resolve_code(curve, args)
    if code.k == 0:
        raise UsageError("the code has dimension 0; nothing to bound")
    methods = _parse_methods(args.methods)
    weights = _parse_int_list(args.t, "weight order")
    for t in weights:
        if not 1 <= t <= code.k:
            raise UsageError(f"t={t} outside 1..k={code.k}")
    v_policy = _parse_v(args.v)
    table = bound_table(title=f"{curve.name}: {code.describe()}")
    table.add("dimension", "", code.k, format_members(code.parity))

    def job(item):
        t, method = item
        cb = code_bound(code, method, t, v_policy=v_policy)
        cert = f"at={format_members(cb.at)}"
        if cb.witness:
            cert += f" witness={format_members(cb.witness)}"
        return t, method, cb.value, cert

    jobs = [(t, method) for t in weights for method in methods]
    for t, method, value, cert in _pmap(job, jobs, args.threads):
        table.add(f"d_{t}", method.token, value, cert)
    _emit(table, args)
    return EXIT_OK


def cmd_improved(args) -> int:
    curve = load_curve(args.curve)
    if args.delta < 1:
        raise UsageError("--delta must be >= 1")
    try:
        method = BoundMethod.from_token(args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if method not in _SEARCH_METHODS:
        raise UsageError("--method must be adv or fim")
    v_policy = _parse_v(args.v)
    code = improved_code(curve, args.delta, method, v_policy=v_policy)
    table = bound_table(
        title=f"{curve.name}: improved code, delta={args.delta}, method={method.token}"
    )
    table.add("dimension", method.token, code.k, format_members(code.parity))
    for t in range(2, min(6, code.k) + 1):
        cb = code_bound(code, method, t, v_policy=v_policy)
        cert = f"at={format_members(cb.at)}"
        if cb.witness:
            cert += f" witness={format_members(cb.witness)}"
        table.add(f"d_{t}", method.token, cb.value, cert)
    _emit(table, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    curve = load_curve(args.curve)
    span = _parse_span(args.s, "--s")
    t = args.t
    q = curve.field.q
    table = bound_table(title=f"{curve.name}: oracle verification, t={t}")
    unsound = 0
    for s in span:
        if not 0 <= s <= curve.n:
            raise UsageError(f"s={s} outside 0..{curve.n}")
        code = standard_code(curve, s)
        target = f"C({s}) t={t}"
        if code.k == 0 or t > code.k:
            table.add(target, "", "", "skipped: t exceeds the dimension")
            continue
        if q**code.k > MESSAGE_SWEEP_CAP:
            table.add(target, "", "", "skipped: message space exceeds the sweep cap")
            continue
        if t == 1:
            true = true_min_distance(code)
        else:
            if gaussian_binomial(code.k, t, q) > SUBSPACE_CAP:
                table.add(target, "", "", "skipped: subspace count exceeds the cap")
                continue
            true = true_ghw(code, t)
        for method in BoundMethod:
            value = code_bound(code, method, t).value
            sound = value <= true
            unsound += 0 if sound else 1
            table.add(
                target,
                method.token,
                value,
                f"true={true} {'SOUND' if sound else 'UNSOUND'}",
            )
    _emit(table, args)
    return EXIT_OK if unsound == 0 else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    curve = load_curve(args.curve)
    methods = _parse_methods(args.methods)
    span = _parse_span(args.s, "--s") if args.s else range(0, curve.n)
    for s in span:
        if not 0 <= s < curve.n:
            raise UsageError(f"s={s} outside 0..{curve.n - 1}")
    t = args.t
    v_policy = _parse_v(args.v)

    def job(item):
        s, method = item
        code = standard_code(curve, s)
        if t > code.k:
            return s, code.k, method, None
        return s, code.k, method, code_bound(code, method, t, v_policy=v_policy).value

    jobs = [(s, method) for s in span for method in methods]
    results = _pmap(job, jobs, args.threads)
    table = bound_table(title=f"{curve.name}: d_{t} estimates over parity prefixes")
    lines = []
    for s, k, method, value in results:
        if value is None:
            table.add(f"s={s}", method.token, "", f"k={k} skipped: t exceeds k")
        else:
            table.add(f"s={s}", method.token, value, f"k={k}")
            lines.append((s, k, method.token, value))
    _emit(table, args)
    if args.figure:
        from . import figures

        figures.save_sweep_lines(
            lines, args.figure, title=f"{curve.name}: d_{t} lower bounds"
        )
    return EXIT_OK


# --- reproduce ---------------------------------------------------------------

# expected values for the reproduction harness; FR columns are exact, the
# search methods pass at >= with a verifying certificate
_SEC42_PER_L = {
    17: (7, 7, 8, 9, 10),
    21: (8, 8, 10, 12, 13),
}
_TABLE1 = {1: (7, 7, 8, 9, 10), 2: (8, 8, 10, 12, 13)}
_TABLE2 = {
    (10, "adv"): (16, (12, 14, 15, 16, 20)),
    (10, "fim"): (17, (12, 13, 14, 15, 16)),
    (13, "adv"): (11, (16, 20, 22, 24, 26)),
    (13, "fim"): (12, (15, 16, 21, 22, 24)),
}
_TABLE3 = {
    75: (168, (15, 15, 21, 29, 33), (16, 16, 24, 34, 38)),
    76: (167, (15, 15, 21, 33, 36), (16, 16, 24, 38, 39)),
    83: (160, (16, 16, 24, 34, 38), (17, 17, 27, 39, 41)),
}
_METHOD_ORDER = tuple(BoundMethod)


class _Harness:
    """Collects expected-vs-computed comparisons into a report table."""

    def __init__(self, title: str):
        self.table = bound_table(title=title)
        self.failures = 0

    def check(self, target: str, method: str, computed, expected, *, rule: str = "exact", note: str = ""):
        if rule == "exact":
            ok = computed == expected
            want = f"expected={expected}"
        else:
            ok = computed >= expected
            want = f"expected>={expected}" + (" (=)" if computed == expected else "")
        self.failures += 0 if ok else 1
        cert = f"{want} {'PASS' if ok else 'FAIL'}"
        if note:
            cert += f" {note}"
        self.table.add(target, method, computed, cert)

    def exit_code(self) -> int:
        return EXIT_OK if self.failures == 0 else EXIT_MISMATCH


def _rule_for(method: BoundMethod) -> str:
    return "atleast" if method in _SEARCH_METHODS else "exact"


def _reproduce_sec42(h: _Harness) -> None:
    curve = load_curve("f8")
    rho = rho_table_algebraic(curve)
    for l, expected in _SEC42_PER_L.items():
        for method, exp in zip(_METHOD_ORDER, expected):
            value, _ = _bound_row(rho, l, method, "auto", False)
            h.check(f"l={l}", method.token, value, exp, rule=_rule_for(method))
    for l, wb_exp, wwb_exp in ((28, 21, 22), (30, 24, 26)):
        h.check(f"l={l}", "wb", feng_rao(rho, l, BoundMethod.FR_WB), wb_exp)
        h.check(f"l={l}", "wwb", feng_rao(rho, l, BoundMethod.FR_WWB), wwb_exp)
    # window of length zero collapses to the plain search bound
    h.check(
        "l=17 v=0",
        "fim",
        fim_bound(rho, 17, 0).value,
        advisory_bound(rho, 17),
    )
    # six-weight prose values for the tiny code; the WB expectation is the
    # paper's weaker printed estimate and is kept verbatim (see README)
    code4 = standard_code(curve, 4)
    h.check(
        "C(4) d_6",
        "wb",
        code_bound(code4, BoundMethod.FR_WB, 6).value,
        8,
        note="printed estimate; direct subset minimum is larger",
    )
    h.check(
        "C(4) d_6",
        "adv",
        code_bound(code4, BoundMethod.ADVISORY, 6).value,
        9,
        rule="atleast",
    )


def _reproduce_table1(h: _Harness) -> None:
    code = standard_code(load_curve("f8"), 16)
    for t, expected in _TABLE1.items():
        for method, exp in zip(_METHOD_ORDER, expected):
            value = code_bound(code, method, t).value
            h.check(f"C(16) d_{t}", method.token, value, exp, rule=_rule_for(method))


def _reproduce_table2(h: _Harness) -> None:
    curve = load_curve("f8")
    for (delta, token), (k_exp, row_exp) in _TABLE2.items():
        method = BoundMethod.from_token(token)
        code = improved_code(curve, delta, method)
        h.check(f"improved delta={delta}", token, code.k, k_exp)
        for t, exp in zip(range(2, 7), row_exp):
            value = code_bound(code, method, t).value
            h.check(f"improved delta={delta} d_{t}", token, value, exp, rule="atleast")


def _reproduce_table3(h: _Harness) -> None:
    curve = load_curve("f27")
    printed = (
        (BoundMethod.FR_WB, "wb/wwb"),
        (BoundMethod.FR_OWB, "owb"),
        (BoundMethod.ADVISORY, "adv"),
        (BoundMethod.FIM, "fim"),
    )
    for s, (k_exp, d1_exp, d2_exp) in _TABLE3.items():
        code = standard_code(curve, s)
        h.check(f"C({s})", "dimension", code.k, k_exp)
        for method, label in printed:
            idx = _METHOD_ORDER.index(method)
            d1 = code_bound(code, method, 1).value
            d2 = code_bound(code, method, 2).value
            if method is BoundMethod.FR_WB:
                # printed merged with the wwb column; both must agree
                d1b = code_bound(code, BoundMethod.FR_WWB, 1).value
                d2b = code_bound(code, BoundMethod.FR_WWB, 2).value
                computed = f"{d1}/{d2},{d1b}/{d2b}"
                expected = (
                    f"{d1_exp[0]}/{d2_exp[0]},{d1_exp[1]}/{d2_exp[1]}"
                )
                h.check(f"C({s})", label, computed, expected)
            elif method in _SEARCH_METHODS:
                # componentwise >= with equality reported
                ok = d1 >= d1_exp[idx] and d2 >= d2_exp[idx]
                tag = " (=)" if (d1, d2) == (d1_exp[idx], d2_exp[idx]) else ""
                h.failures += 0 if ok else 1
                h.table.add(
                    f"C({s})",
                    label,
                    f"{d1}/{d2}",
                    f"expected>={d1_exp[idx]}/{d2_exp[idx]} {'PASS' if ok else 'FAIL'}{tag}",
                )
            else:
                h.check(f"C({s})", label, f"{d1}/{d2}", f"{d1_exp[idx]}/{d2_exp[idx]}")


def _reproduce_props(h: _Harness) -> None:
    from . import props

    f8 = load_curve("f8")
    f27 = load_curve("f27")
    for name in props.ALL_SUITES:
        for result in props.run_suite(name, f8, f27):
            h.failures += 0 if result.ok else 1
            h.table.add(
                result.name, "", "PASS" if result.ok else "FAIL", result.detail
            )


_REPRODUCE_TARGETS = {
    "sec42": _reproduce_sec42,
    "table1": _reproduce_table1,
    "table2": _reproduce_table2,
    "table3": _reproduce_table3,
    "props": _reproduce_props,
}


def cmd_reproduce(args) -> int:
    runner = _REPRODUCE_TARGETS.get(args.target)
    if runner is None:
        raise UsageError(
            f"unknown target {args.target!r}; have {sorted(_REPRODUCE_TARGETS)}"
        )
    h = _Harness(title=f"reproduce {args.target}")
    runner(h)
    _emit(h.table, args)
    if h.failures:
        print(f"{h.failures} comparison(s) failed", file=sys.stderr)
    return h.exit_code()


# --- entry point -------------------------------------------------------------


def _add_common(sub, *, curve=True, figure=False):
    if curve:
        sub.add_argument("curve", help="preset name (f8, f27) or JSON config path")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", help="write the report here instead of stdout")
    if figure:
        sub.add_argument("--figure", help="also render a figure to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avcbounds",
        description="Bounds and constructions for dual codes from plane curves",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("curve-info", help="basis monomials with weights and indexes")
    _add_common(sub, figure=True)
    sub.set_defaults(fn=cmd_curve_info)

    sub = subs.add_parser("rho-table", help="full product order table")
    _add_common(sub, figure=True)
    sub.add_argument("--route", choices=("algebraic", "generic"), default="algebraic")
    sub.set_defaults(fn=cmd_rho_table)

    sub = subs.add_parser("bound", help="per-method values at one first-hit index")
    _add_common(sub)
    sub.add_argument("--l", type=int, required=True)
    sub.add_argument("--methods", default="wb,wwb,owb,adv,fim")
    sub.add_argument("--v", default="auto", help="'auto' or a fixed window length")
    sub.add_argument("--exact", action="store_true", help="exact search where the cap allows")
    sub.set_defaults(fn=cmd_bound)

    sub = subs.add_parser("code", help="dimension and weight bounds of one code")
    _add_common(sub)
    sub.add_argument("--s", type=int, help="parity prefix size")
    sub.add_argument("--parity", help="explicit comma-separated parity indexes")
    sub.add_argument("--t", default="1", help="comma-separated weight orders")
    sub.add_argument("--methods", default="wb,wwb,owb,adv,fim")
    sub.add_argument("--v", default="auto")
    sub.add_argument("--threads", type=int, default=1)
    sub.set_defaults(fn=cmd_code)

    sub = subs.add_parser("improved", help="puncture the parity set by a design value")
    _add_common(sub)
    sub.add_argument("--delta", type=int, required=True)
    sub.add_argument("--method", default="adv", help="adv or fim")
    sub.add_argument("--v", default="auto")
    sub.set_defaults(fn=cmd_improved)

    sub = subs.add_parser("reproduce", help="compare computed values against the references")
    sub.add_argument("target", help="sec42 | table1 | table2 | table3 | props")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output")
    sub.set_defaults(fn=cmd_reproduce)

    sub = subs.add_parser("verify", help="check bounds against brute-force truth")
    _add_common(sub)
    sub.add_argument("--s", required=True, help="range A..B or single size")
    sub.add_argument("--t", type=int, default=1)
    sub.set_defaults(fn=cmd_verify)

    sub = subs.add_parser("sweep", help="bound curves over all parity prefixes")
    _add_common(sub, figure=True)
    sub.add_argument("--s", help="range A..B (default: the whole ladder)")
    sub.add_argument("--t", type=int, default=1)
    sub.add_argument("--methods", default="wb,wwb,owb,adv,fim")
    sub.add_argument("--v", default="auto")
    sub.add_argument("--threads", type=int, default=1)
    sub.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, CurveConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
