"""Registry of named exact identity checks, scanned over index ranges.

Each check produces records with exact left/right sides; a scan passes
only if every record does.  The KLM grid check is summarized per index
(one record counting mismatches over all coefficient triples) and
supports an off-by-one fault injection for exercising the failure path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .qfield import (
    INV_PHI,
    INV_PHI_CUBED,
    INV_PHI_SQ,
    INV_SQRT5,
    LAMBDA_SPLIT,
    ONE,
    ONE_HALF,
    PHI,
    PHI_CUBED,
    PHI_SQ,
    QuadraticReal,
    ZERO,
    fib,
    phi_pow,
)
from .three_set import col_c, col_d, frac_col_c, frac_col_d, frac_col_s
from .wythoff import (
    BREAK_HIGH,
    c_half,
    d_cubed,
    fib_shift_converse,
    frac_d_interval,
    frac_lower,
    frac_phi,
    frac_upper,
    klm,
    lower,
    phi_pow_ext,
    strict_compare,
    upper,
)


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    n: int
    case: str
    lhs: object
    rhs: object
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "case": self.case,
            "lhs": _json_value(self.lhs),
            "rhs": _json_value(self.rhs),
            "pass": self.passed,
        }


def _json_value(v) -> object:
    if isinstance(v, QuadraticReal):
        return v.to_json_dict()
    if isinstance(v, int):
        return str(v)
    return str(v)


@dataclass(frozen=True)
class CheckOptions:
    rs: tuple[int, ...] = (1, 3, 5, 7)
    converse_rs: tuple[int, ...] = (1, 3)
    bound: int | None = None
    fault_offset: int = 0


def _record(identity: str, n: int, case: str, lhs, rhs) -> IdentityCheck:
    return IdentityCheck(identity, n, case, lhs, rhs, lhs == rhs)


def _check_frac_lower(n, opts):
    return [_record("frac-lower", n, "", frac_lower(n), frac_phi(lower(n)))]


def _check_frac_upper(n, opts):
    return [_record("frac-upper", n, "", frac_upper(n), frac_phi(upper(n)))]


def _check_nested_floors(n, opts):
    an, bn = lower(n), upper(n)
    return [
        _record("nested-floors", n, "a(a(n))", lower(an), an + n - 1),
        _record("nested-floors", n, "a(a(n))=b(n)-1", lower(an), bn - 1),
        _record("nested-floors", n, "a(b(n))", lower(bn), an + bn),
    ]


def _check_upper_gap(n, opts):
    return [_record("upper-gap", n, "", upper(n) - PHI * lower(n), frac_phi(n) * INV_PHI)]


def _check_frac_sum(n, opts):
    return [_record("frac-sum", n, "", frac_lower(n) + PHI * frac_upper(n), ONE)]


def _check_summary_lower(n, opts):
    lhs = PHI * frac_phi(lower(n)) + frac_phi(n)
    return [_record("summary-lower", n, "", lhs, PHI)]


def _check_summary_upper(n, opts):
    lhs = PHI_SQ * frac_phi(upper(n)) - frac_phi(n)
    return [_record("summary-upper", n, "", lhs, ZERO)]


def _check_summary_d(n, opts):
    fn = frac_phi(n)
    lhs = frac_phi(d_cubed(n)) + INV_PHI_CUBED * fn
    if strict_compare(fn, ONE_HALF) < 0:
        return [_record("summary-d", n, "below-half", lhs, ONE)]
    return [_record("summary-d", n, "above-half", lhs, INV_PHI)]


def _check_summary_c(n, opts):
    out = [
        _record(
            "summary-c",
            n,
            "m=2n",
            PHI_CUBED * frac_phi(c_half(2 * n)) - PHI * frac_phi(n),
            ZERO,
        )
    ]
    lhs = PHI_CUBED * frac_phi(c_half(2 * n + 1)) - PHI * frac_phi(n)
    if strict_compare(frac_phi(n), LAMBDA_SPLIT) < 0:
        out.append(_record("summary-c", n, "m=2n+1,low", lhs, PHI_SQ))
    else:
        out.append(_record("summary-c", n, "m=2n+1,high", lhs, ONE))
    return out


def _check_d_interval(n, opts):
    try:
        case, value = frac_d_interval(n)
    except ArithmeticError as exc:
        return [IdentityCheck("d-interval", n, "membership", str(exc), "", False)]
    return [_record("d-interval", n, case, value, frac_phi(d_cubed(n)))]


def _check_c_interval(n, opts):
    even = frac_phi(c_half(2 * n))
    odd = frac_phi(c_half(2 * n + 1))
    return [
        IdentityCheck(
            "c-interval", n, "even", even, "(0, (3-sqrt5)/2)", ZERO < even < INV_PHI_SQ
        ),
        IdentityCheck(
            "c-interval", n, "odd", odd, "(1/2, (4-sqrt5)/2)", ONE_HALF < odd < BREAK_HIGH
        ),
    ]


def _check_d_case(n, opts):
    fn = frac_phi(n)
    if strict_compare(fn, ONE_HALF) < 0:
        return [_record("d-case", n, "below-half", d_cubed(n), 2 * lower(n) + n)]
    return [_record("d-case", n, "above-half", d_cubed(n), 2 * lower(n) + n + 1)]


def _check_c_odd_case(n, opts):
    e = 1 if strict_compare(frac_phi(n), LAMBDA_SPLIT) < 0 else 2
    return [_record("c-odd-case", n, f"e={e}", c_half(2 * n + 1), upper(n) + e)]


def _check_fib_floor(n, opts):
    shifted = frac_phi(n) * INV_PHI
    out = []
    for r in opts.rs:
        lhs = (PHI * fib(r) + INV_PHI * shifted).floor()
        out.append(_record("fib-floor", n, f"r={r}", lhs, fib(r + 1)))
    return out


def _check_phi_power(n, opts):
    prod = ONE
    for _ in range(n):
        prod = prod * PHI
    return [
        _record("phi-power", n, "vs-iterated-product", phi_pow(n), prod),
        _record("phi-power", n, "vs-fib-form", phi_pow(n), PHI * fib(n) + fib(n - 1)),
    ]


def _check_cassini(n, opts):
    lhs = fib(n + 1) * fib(n - 1) - fib(n) ** 2
    return [_record("cassini", n, "", lhs, (-1) ** n)]


def _check_klm_grid(n, opts):
    an = lower(n)
    mismatches = 0
    first = ""
    for K, L, M in product(range(-5, 6), repeat=3):
        arg = K * an + L * n + M
        if arg < 1:
            continue
        if klm(K, L, M, n) != lower(arg) + opts.fault_offset:
            mismatches += 1
            if not first:
                first = f"first=({K},{L},{M})"
    case = first or "grid [-5,5]^3"
    return [_record("klm-grid", n, case, mismatches, 0)]


def _check_fib_shift(n, opts):
    fn = frac_phi(n)
    out = []
    for r in opts.rs:
        m = lower(n) + n + fib(r)
        lhs = phi_pow(r) * frac_phi(m) - phi_pow_ext(r - 2) * fn
        out.append(_record("fib-shift", n, f"r={r},m={m}", lhs, ONE))
    return out


def _check_fib_shift_converse(n, opts):
    out = []
    for r in opts.converse_rs:
        expected = lower(n) + n + fib(r)
        bound = opts.bound if opts.bound is not None else max(400, 2 * expected)
        found = sorted(fib_shift_converse(r, n, bound))
        want = [expected] if expected <= bound else []
        out.append(_record("fib-shift-converse", n, f"r={r},bound={bound}", found, want))
    return out


def _check_col_d_frac(n, opts):
    return [_record("col-d-frac", n, "", frac_col_d(n), frac_phi(col_d(n)))]


def _check_col_c_frac(n, opts):
    case, closed = frac_col_c(n)
    return [_record("col-c-frac", n, case, closed, frac_phi(col_c(n)))]


def _check_col_s_frac(n, opts):
    try:
        offset, value = frac_col_s(n)
    except ArithmeticError as exc:
        return [IdentityCheck("col-s-frac", n, "offset", str(exc), "", False)]
    case = "even" if n % 2 == 0 else "odd"
    return [IdentityCheck("col-s-frac", n, case, offset, "parity candidate set", True)]


def _check_col_sum(n, opts):
    lhs = frac_col_c(n)[1] + PHI * frac_col_d(n)
    if strict_compare(frac_phi(n), INV_SQRT5) > 0:
        return [_record("col-sum", n, "above-inv-sqrt5", lhs, ONE)]
    return [_record("col-sum", n, "below-inv-sqrt5", lhs, QuadraticReal(2))]


@dataclass(frozen=True)
class IdentityDef:
    name: str
    description: str
    checker: Callable[[int, CheckOptions], list[IdentityCheck]]
    index_cap: int | None = None


IDENTITY_DEFS: tuple[IdentityDef, ...] = (
    IdentityDef("frac-lower", "{a(n)phi} = 1 - {n phi}/phi", _check_frac_lower),
    IdentityDef("frac-upper", "{b(n)phi} = {n phi}/phi^2", _check_frac_upper),
    IdentityDef("nested-floors", "a(a(n)) = a(n)+n-1 = b(n)-1; a(b(n)) = a(n)+b(n)", _check_nested_floors),
    IdentityDef("upper-gap", "b(n) - phi*a(n) = {n phi}/phi", _check_upper_gap),
    IdentityDef("frac-sum", "{a(n)phi} + phi*{b(n)phi} = 1", _check_frac_sum),
    IdentityDef("summary-lower", "phi*{a(n)phi} + {n phi} = phi", _check_summary_lower),
    IdentityDef("summary-upper", "phi^2*{b(n)phi} - {n phi} = 0", _check_summary_upper),
    IdentityDef("summary-d", "{d(n)phi} + (sqrt5-2)*{n phi} = 1 or 1/phi", _check_summary_d),
    IdentityDef("summary-c", "phi^3*{c(m)phi} - phi*{n phi} = 0, phi^2 or 1", _check_summary_c),
    IdentityDef("d-interval", "{d(n)phi} lies in the half-split interval", _check_d_interval),
    IdentityDef("c-interval", "{c(m)phi} lies in the parity interval", _check_c_interval),
    IdentityDef("d-case", "d(n) = 2a(n)+n (+1 above half)", _check_d_case),
    IdentityDef("c-odd-case", "c(2n+1) = b(n) + e(n), e split at (5-sqrt5)/4", _check_c_odd_case),
    IdentityDef("fib-floor", "floor(F(r)phi + (phi-1){n phi}/phi) = F(r+1)", _check_fib_floor),
    IdentityDef("phi-power", "phi^k = F(k)phi + F(k-1)", _check_phi_power, index_cap=200),
    IdentityDef("cassini", "F(n+1)F(n-1) - F(n)^2 = (-1)^n", _check_cassini, index_cap=200),
    IdentityDef("klm-grid", "a(K a(n)+L n+M) closed form over the coefficient grid", _check_klm_grid),
    IdentityDef("fib-shift", "phi^r {m phi} - phi^(r-2) {n phi} = 1 at m = a(n)+n+F(r)", _check_fib_shift),
    IdentityDef(
        "fib-shift-converse",
        "brute-force solution set of the shift identity",
        _check_fib_shift_converse,
        index_cap=50,
    ),
    IdentityDef("col-d-frac", "{d(k)phi} closed form, 3-column d", _check_col_d_frac),
    IdentityDef("col-c-frac", "{c(k)phi} closed form, 3-column c", _check_col_c_frac),
    IdentityDef("col-s-frac", "{s(k)phi} realized offset in the parity set", _check_col_s_frac),
    IdentityDef("col-sum", "{c(k)phi} + phi*{d(k)phi} = 1 or 2", _check_col_sum),
)

IDENTITIES: dict[str, IdentityDef] = {d.name: d for d in IDENTITY_DEFS}


def identity_names() -> list[str]:
    return [d.name for d in IDENTITY_DEFS]


def iter_identity_checks(
    name: str, limit: int, opts: CheckOptions = CheckOptions()
) -> Iterator[IdentityCheck]:
    """All check records for one identity over indices 1..limit (capped)."""
    definition = IDENTITIES[name]
    top = limit if definition.index_cap is None else min(limit, definition.index_cap)
    for n in range(1, top + 1):
        yield from definition.checker(n, opts)


@dataclass(frozen=True)
class IdentitySummary:
    name: str
    checks: int
    failures: int
    first_failure: IdentityCheck | None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def summarize_identity(name: str, limit: int, opts: CheckOptions = CheckOptions()) -> IdentitySummary:
    checks = 0
    failures = 0
    first: IdentityCheck | None = None
    for record in iter_identity_checks(name, limit, opts):
        checks += 1
        if not record.passed:
            failures += 1
            if first is None:
                first = record
    return IdentitySummary(name, checks, failures, first)
