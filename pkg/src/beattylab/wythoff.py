"""Golden-ratio Beatty sequences and their fractional-part identities.

The lower and upper Wythoff sequences floor(n*phi) and floor(n*phi^2)
partition the positive integers, as do the complementary Beatty pair
floor(n*phi^2/2) and floor(n*phi^3).  This module computes all four
exactly, classifies integers by membership, evaluates the KLM closed
form for floor((K*a(n) + L*n + M)*phi), and exposes the exact
fractional-part identities and interval decompositions that relate the
two partitions, including the Fibonacci-shift family.

Every breakpoint comparison is exact; a fractional part can never equal
a breakpoint (all are irrational combinations ruled out by the closed
forms), so hitting one raises ArithmeticError instead of tie-breaking.
"""

from __future__ import annotations

from enum import Enum
from math import isqrt
from typing import NamedTuple

from .qfield import (
    INV_PHI,
    INV_PHI_CUBED,
    INV_PHI_SQ,
    LAMBDA_SPLIT,
    ONE,
    ONE_HALF,
    PHI,
    PHI_SQ,
    QuadraticReal,
    ZERO,
    fib,
    phi_pow,
)

# interior breakpoints of the unit interval used by the classifications:
# 1/phi^2 = (3 - sqrt5)/2, 1/2, and (4 - sqrt5)/2
BREAK_HIGH = QuadraticReal(4, -1, 2)

# interval endpoints for the fractional parts of the phi^2/2 and phi^3 pair
D_FRAC_ABOVE_HALF = (INV_PHI_SQ, ONE_HALF)
D_FRAC_BELOW_HALF = (BREAK_HIGH, ONE)
C_FRAC_EVEN = (ZERO, INV_PHI_SQ)
C_FRAC_ODD = (ONE_HALF, BREAK_HIGH)


class ABLabel(Enum):
    """Membership among the lower (A) / upper (B) Wythoff values."""

    A = "A"
    B = "B"


class CDLabel(Enum):
    """Membership among the floor(n*phi^2/2) (C) / floor(n*phi^3) (D) values."""

    C = "C"
    D = "D"


class ABMembership(NamedTuple):
    label: ABLabel
    witness: int


class CDMembership(NamedTuple):
    label: CDLabel
    witness: int


class IntervalLabel(Enum):
    """Quarters of (0,1) cut at 1/phi^2, 1/2 and (4-sqrt5)/2."""

    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"


UNIT_INTERVALS: dict[IntervalLabel, tuple[QuadraticReal, QuadraticReal]] = {
    IntervalLabel.I1: (ZERO, INV_PHI_SQ),
    IntervalLabel.I2: (INV_PHI_SQ, ONE_HALF),
    IntervalLabel.I3: (ONE_HALF, BREAK_HIGH),
    IntervalLabel.I4: (BREAK_HIGH, ONE),
}


def strict_compare(x: QuadraticReal, y: QuadraticReal) -> int:
    """Exact comparison that treats equality as a defect, never a tie-break."""
    c = x.compare(y)
    if c == 0:
        raise ArithmeticError(
            f"fractional part equals breakpoint {y} exactly; this is impossible "
            "and signals an arithmetic bug"
        )
    return c


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def lower(n: int) -> int:
    """Lower Wythoff value floor(n*phi), exactly."""
    _require_positive(n)
    return (n + isqrt(5 * n * n)) // 2


def upper(n: int) -> int:
    """Upper Wythoff value floor(n*phi^2) = floor(n*phi) + n."""
    _require_positive(n)
    return (n + isqrt(5 * n * n)) // 2 + n


def c_half(n: int) -> int:
    """floor(n*phi^2/2) = floor(n*(3+sqrt5)/4), exactly."""
    _require_positive(n)
    return (3 * n + isqrt(5 * n * n)) // 4


def d_cubed(n: int) -> int:
    """floor(n*phi^3) = 2n + floor(n*sqrt5), exactly."""
    _require_positive(n)
    return 2 * n + isqrt(5 * n * n)


def frac_phi(n: int) -> QuadraticReal:
    """Fractional part of n*phi as an exact field element."""
    _require_positive(n)
    return QuadraticReal(n - 2 * lower(n), n, 2)


def beatty_term(alpha: QuadraticReal, k: int) -> int:
    """k-th Beatty value floor(k*alpha) for a positive exact alpha."""
    _require_positive(k, "k")
    if alpha.sign() <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (alpha * k).floor()


def klm(K: int, L: int, M: int, n: int) -> int:
    """Closed form for floor((K*a(n) + L*n + M)*phi) with a = lower Wythoff.

    Returns K*b(n) + L*a(n) + floor(M*phi + (L*phi - K)*{n*phi}/phi); the
    argument K*a(n) + L*n + M must itself be a positive integer.
    """
    _require_positive(n)
    an = lower(n)
    bn = an + n
    arg = K * an + L * n + M
    if arg < 1:
        raise ValueError(f"argument K*a(n)+L*n+M = {arg} must be positive")
    correction = (PHI * M + (PHI * L - K) * (frac_phi(n) * INV_PHI)).floor()
    return K * bn + L * an + correction


def frac_lower(n: int) -> QuadraticReal:
    """{a(n)*phi} in closed form: 1 - {n*phi}/phi."""
    return ONE - frac_phi(n) * INV_PHI


def frac_upper(n: int) -> QuadraticReal:
    """{b(n)*phi} in closed form: {n*phi}/phi^2."""
    return frac_phi(n) * INV_PHI_SQ


def _witness_search(m: int, candidate: int, term) -> int:
    for i in (candidate, candidate - 1, candidate + 1):
        if i >= 1 and term(i) == m:
            return i
    raise ArithmeticError(f"no witness index found for {m}; arithmetic bug")


def ab_label(m: int) -> ABLabel:
    """A/B label of m alone: A exactly when {m*phi} > 1/phi^2."""
    _require_positive(m, "m")
    return ABLabel.A if strict_compare(frac_phi(m), INV_PHI_SQ) > 0 else ABLabel.B


def classify_ab(m: int) -> ABMembership:
    """A/B membership of m with a witness index i (a(i) = m or b(i) = m).

    m is a lower Wythoff value exactly when {m*phi} > 1/phi^2.  The witness
    is recovered by inverting the floor, i = floor((m+1)/phi) resp.
    floor((m+1)/phi^2), validated by recomputation with a +-1 fallback.
    """
    if ab_label(m) is ABLabel.A:
        i = (INV_PHI * (m + 1)).floor()
        return ABMembership(ABLabel.A, _witness_search(m, i, lower))
    i = (INV_PHI_SQ * (m + 1)).floor()
    return ABMembership(ABLabel.B, _witness_search(m, i, upper))


def classify_cd(m: int) -> CDMembership:
    """C/D membership of m (C: floor(i*phi^2/2) values, D: floor(i*phi^3)).

    m lies in C exactly when {m*phi} falls in I1 or I3.
    """
    _require_positive(m, "m")
    if unit_interval_label(m) in (IntervalLabel.I1, IntervalLabel.I3):
        i = ((ONE - INV_PHI_CUBED) * (m + 1)).floor()  # (m+1) * 2/phi^2
        return CDMembership(CDLabel.C, _witness_search(m, i, c_half))
    i = (INV_PHI_CUBED * (m + 1)).floor()  # (m+1) / phi^3
    return CDMembership(CDLabel.D, _witness_search(m, i, d_cubed))


def unit_interval_label(m: int) -> IntervalLabel:
    """Which quarter of (0,1) contains {m*phi}."""
    f = frac_phi(m)
    if strict_compare(f, INV_PHI_SQ) < 0:
        return IntervalLabel.I1
    if strict_compare(f, ONE_HALF) < 0:
        return IntervalLabel.I2
    if strict_compare(f, BREAK_HIGH) < 0:
        return IntervalLabel.I3
    return IntervalLabel.I4


def cd_pair_class(n: int) -> tuple[ABLabel, ABLabel]:
    """A/B labels of the pair (floor(n*phi^2/2), floor(n*phi^3))."""
    return (classify_ab(c_half(n)).label, classify_ab(d_cubed(n)).label)


def ab_pair_class(n: int) -> tuple[CDLabel, CDLabel]:
    """C/D labels of the Wythoff pair (a(n), b(n))."""
    return (classify_cd(lower(n)).label, classify_cd(upper(n)).label)


def frac_d_interval(n: int) -> tuple[str, QuadraticReal]:
    """Exact {d(n)*phi} with its interval case, d(n) = floor(n*phi^3).

    {d(n)*phi} = 1/phi - (sqrt5-2)*{n*phi} in ((3-sqrt5)/2, 1/2) when
    {n*phi} > 1/2, and 1 - (sqrt5-2)*{n*phi} in ((4-sqrt5)/2, 1) when
    {n*phi} < 1/2.  Interval membership is re-checked on every call.
    """
    fn = frac_phi(n)
    if strict_compare(fn, ONE_HALF) > 0:
        case, value = "above-half", INV_PHI - INV_PHI_CUBED * fn
        lo, hi = D_FRAC_ABOVE_HALF
    else:
        case, value = "below-half", ONE - INV_PHI_CUBED * fn
        lo, hi = D_FRAC_BELOW_HALF
    if not (lo < value < hi):
        raise ArithmeticError(f"{{d({n})*phi}} = {value} escaped ({lo}, {hi})")
    return case, value


def frac_c_cases(m: int) -> tuple[str, QuadraticReal]:
    """Exact {c(m)*phi} with its case tag, c(m) = floor(m*phi^2/2).

    Even m = 2n: phi^3*{c(m)*phi} - phi*{n*phi} = 0.  Odd m = 2n+1 with
    n >= 1: the difference is phi^2 when {n*phi} < (5-sqrt5)/4 and 1 when
    {n*phi} > (5-sqrt5)/4.  m = 1 has no such decomposition and is
    rejected.
    """
    _require_positive(m, "m")
    if m == 1:
        raise ValueError("m = 1 is outside the odd-index identity (needs m = 2n+1 with n >= 1)")
    if m % 2 == 0:
        n = m // 2
        case, value = "even", frac_upper(n)
        expected = ZERO
    else:
        n = (m - 1) // 2
        fn = frac_phi(n)
        if strict_compare(fn, LAMBDA_SPLIT) < 0:
            case, value = "odd-low", fn * INV_PHI_SQ + INV_PHI
            expected = PHI_SQ
        else:
            case, value = "odd-high", fn * INV_PHI_SQ + INV_PHI + INV_PHI - ONE
            expected = ONE
    if PHI * PHI_SQ * value - PHI * frac_phi(n) != expected:
        raise ArithmeticError(f"fractional identity for c({m}) violated")
    return case, value


def phi_pow_ext(e: int) -> QuadraticReal:
    """phi**e for e >= 1, plus the one negative exponent -1 (exactly phi - 1)."""
    if e == -1:
        return INV_PHI
    return phi_pow(e)


def fib_shift(r: int, n: int) -> int:
    """The unique m with phi^r*{m*phi} - phi^(r-2)*{n*phi} = 1, r odd.

    Returns m = a(n) + n + F(r) and verifies the identity exactly, along
    with the companion floor identity
    floor(F(r)*phi + (phi-1)*{n*phi}/phi) = F(r+1).
    """
    if r < 1 or r % 2 == 0:
        raise ValueError(f"shift index must be an odd positive integer, got {r}")
    _require_positive(n)
    fn = frac_phi(n)
    if (PHI * fib(r) + INV_PHI * (fn * INV_PHI)).floor() != fib(r + 1):
        raise ArithmeticError(f"floor(F({r})*phi + (phi-1)*{{n*phi}}/phi) != F({r + 1})")
    m = lower(n) + n + fib(r)
    if phi_pow(r) * frac_phi(m) - phi_pow_ext(r - 2) * fn != ONE:
        raise ArithmeticError(f"shift identity failed at r={r}, n={n}, m={m}")
    return m


def fib_shift_converse(r: int, n: int, search_bound: int) -> set[int]:
    """All m <= search_bound with phi^r*{m*phi} - phi^(r-2)*{n*phi} = 1.

    Brute force over the full range; the result should be exactly
    {a(n) + n + F(r)} whenever that value lies within the bound.
    """
    if r < 1 or r % 2 == 0:
        raise ValueError(f"shift index must be an odd positive integer, got {r}")
    _require_positive(n)
    _require_positive(search_bound, "search_bound")
    pr = phi_pow(r)
    offset = phi_pow_ext(r - 2) * frac_phi(n)
    target = ONE + offset
    return {m for m in range(1, search_bound + 1) if pr * frac_phi(m) == target}
