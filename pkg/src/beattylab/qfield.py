"""Exact arithmetic in real quadratic fields Q(sqrt(r)).

Every value is a triple of arbitrary-precision integers (p, q, d) with
d > 0 and gcd(p, q, d) = 1, representing (p + q*sqrt(r))/d for a fixed
non-square radicand r (5 by default, 2 for the sqrt(2) constructions).
All operations -- field arithmetic, ordering, floor, fractional part --
are exact; no floating point is ever consulted for a result.
"""

from __future__ import annotations

from math import gcd, isqrt

DEFAULT_RADICAND = 5


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign_of(p: int, q: int, r: int) -> int:
    """Exact sign of p + q*sqrt(r).

    When p and q disagree in sign the dominant term is decided by
    comparing p^2 with r*q^2; equality is impossible for q != 0 because
    r is not a perfect square.
    """
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    if p > 0:  # q < 0
        return 1 if p * p > r * q * q else -1
    return -1 if p * p > r * q * q else 1


class QuadraticReal:
    """An exact element (p + q*sqrt(radicand))/d of Q(sqrt(radicand))."""

    __slots__ = ("_p", "_q", "_d", "_r")

    def __init__(self, p: int, q: int = 0, d: int = 1, radicand: int = DEFAULT_RADICAND):
        if d == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if radicand < 2 or _is_square(radicand):
            raise ValueError(f"radicand must be a non-square integer >= 2, got {radicand}")
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(p, q, d)
        if g > 1:
            p, q, d = p // g, q // g, d // g
        self._p = p
        self._q = q
        # rational values live in every quadratic field; tag them uniformly
        self._d = d
        self._r = DEFAULT_RADICAND if q == 0 else radicand

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def d(self) -> int:
        return self._d

    @property
    def radicand(self) -> int:
        return self._r

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_int(cls, x: int, radicand: int = DEFAULT_RADICAND) -> QuadraticReal:
        return cls(x, 0, 1, radicand)

    @classmethod
    def from_json_dict(cls, obj: dict) -> QuadraticReal:
        radicand = int(obj.get("radicand", DEFAULT_RADICAND))
        return cls(int(obj["p"]), int(obj["q"]), int(obj["d"]), radicand)

    def to_json_dict(self) -> dict:
        """JSON form with decimal digit strings, bit-exact across platforms."""
        obj = {"p": str(self._p), "q": str(self._q), "d": str(self._d)}
        if self._r != DEFAULT_RADICAND:
            obj["radicand"] = str(self._r)
        return obj

    def _coerce(self, other: int | QuadraticReal) -> QuadraticReal | None:
        if isinstance(other, int):
            return QuadraticReal(other, 0, 1, self._r)
        if isinstance(other, QuadraticReal):
            if self._r == other._r or self._q == 0 or other._q == 0:
                return other
            raise ValueError(f"mixed radicands {self._r} and {other._r}")
        return None

    def _field(self, other: QuadraticReal) -> int:
        return other._r if self._q == 0 else self._r

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: int | QuadraticReal) -> QuadraticReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticReal(
            self._p * o._d + o._p * self._d,
            self._q * o._d + o._q * self._d,
            self._d * o._d,
            self._field(o),
        )

    __radd__ = __add__

    def __sub__(self, other: int | QuadraticReal) -> QuadraticReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticReal(
            self._p * o._d - o._p * self._d,
            self._q * o._d - o._q * self._d,
            self._d * o._d,
            self._field(o),
        )

    def __rsub__(self, other: int | QuadraticReal) -> QuadraticReal:
        return (-self) + other

    def __neg__(self) -> QuadraticReal:
        return QuadraticReal(-self._p, -self._q, self._d, self._r)

    def __mul__(self, other: int | QuadraticReal) -> QuadraticReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = self._field(o)
        return QuadraticReal(
            self._p * o._p + r * self._q * o._q,
            self._p * o._q + self._q * o._p,
            self._d * o._d,
            r,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticReal:
        return QuadraticReal(self._p, -self._q, self._d, self._r)

    def inverse(self) -> QuadraticReal:
        """Field inverse: d*(p - q*sqrt(r)) / (p^2 - r*q^2)."""
        norm = self._p * self._p - self._r * self._q * self._q
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticReal(self._d * self._p, -self._d * self._q, norm, self._r)

    def __truediv__(self, other: int | QuadraticReal) -> QuadraticReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: int | QuadraticReal) -> QuadraticReal:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> QuadraticReal:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticReal(1, 0, 1, self._r)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering ------------------------------------------------------------

    def sign(self) -> int:
        return _sign_of(self._p, self._q, self._r)

    def compare(self, other: int | QuadraticReal) -> int:
        """Exact sign of self - other: -1, 0, or +1."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadraticReal with {type(other).__name__}")
        return _sign_of(
            self._p * o._d - o._p * self._d,
            self._q * o._d - o._q * self._d,
            self._field(o),
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QuadraticReal(other)
        if not isinstance(other, QuadraticReal):
            return NotImplemented
        return (
            self._p == other._p
            and self._q == other._q
            and self._d == other._d
            and self._r == other._r
        )

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._d, self._r))

    def __lt__(self, other: int | QuadraticReal) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: int | QuadraticReal) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: int | QuadraticReal) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: int | QuadraticReal) -> bool:
        return self.compare(other) >= 0

    def __bool__(self) -> bool:
        return self._p != 0 or self._q != 0

    # -- floor and fractional part -------------------------------------------

    def floor(self) -> int:
        """Greatest integer <= value, via integer square roots only.

        floor(q*sqrt(r)) is isqrt(q^2 r) for q >= 0 and -isqrt(q^2 r) - 1
        for q < 0 (q^2 r is never a perfect square for q != 0).  Adding p
        and flooring the division by d then gives the result, because the
        value lies strictly between consecutive integers p + floor(q*sqrt(r))
        and p + floor(q*sqrt(r)) + 1.
        """
        q = self._q
        if q == 0:
            return self._p // self._d
        m = isqrt(q * q * self._r)
        if q < 0:
            m = -m - 1
        return (self._p + m) // self._d

    def frac(self) -> QuadraticReal:
        """Fractional part, exactly self - floor(self); in [0, 1)."""
        return self - self.floor()

    # -- rendering -----------------------------------------------------------

    def __repr__(self) -> str:
        if self._r == DEFAULT_RADICAND:
            return f"QuadraticReal({self._p}, {self._q}, {self._d})"
        return f"QuadraticReal({self._p}, {self._q}, {self._d}, radicand={self._r})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p) if self._d == 1 else f"{self._p}/{self._d}"
        if self._p == 0:
            num = f"{self._q}*sqrt{self._r}" if self._q != 1 else f"sqrt{self._r}"
            wrapped = num
        else:
            qpart = f"{self._q:+}*sqrt{self._r}"
            if self._q == 1:
                qpart = f"+sqrt{self._r}"
            elif self._q == -1:
                qpart = f"-sqrt{self._r}"
            num = f"{self._p}{qpart}"
            wrapped = f"({num})"
        if self._d == 1:
            return num
        return f"{wrapped}/{self._d}"

    def __float__(self) -> float:
        """Approximate float value. Debug/rendering only, never used in results."""
        return (self._p + self._q * self._r**0.5) / self._d


# -- Fibonacci numbers and golden-ratio powers --------------------------------


def fib(k: int) -> int:
    """k-th Fibonacci number: F(0) = 0, F(1) = 1, F(k+2) = F(k+1) + F(k)."""
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def phi_pow(k: int) -> QuadraticReal:
    """phi**k for k >= 1 through the identity phi**k = F(k)*phi + F(k-1)."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    fk = fib(k)
    fk1 = fib(k - 1)
    return QuadraticReal(fk + 2 * fk1, fk, 2)


# -- frequently used constants -------------------------------------------------

ZERO = QuadraticReal(0)
ONE = QuadraticReal(1)
ONE_HALF = QuadraticReal(1, 0, 2)
SQRT5 = QuadraticReal(0, 1)
PHI = QuadraticReal(1, 1, 2)  # golden ratio (1 + sqrt5)/2
PHI_SQ = QuadraticReal(3, 1, 2)  # phi + 1
PHI_CUBED = QuadraticReal(2, 1, 1)  # 2*phi + 1 = 2 + sqrt5
HALF_PHI_SQ = QuadraticReal(3, 1, 4)  # phi^2 / 2
INV_PHI = QuadraticReal(-1, 1, 2)  # 1/phi = phi - 1
INV_PHI_SQ = QuadraticReal(3, -1, 2)  # 1/phi^2 = 2 - phi
INV_PHI_CUBED = QuadraticReal(-2, 1, 1)  # 1/phi^3 = sqrt5 - 2
INV_SQRT5 = QuadraticReal(0, 1, 5)  # 1/sqrt5 = sqrt5/5
LAMBDA_SPLIT = QuadraticReal(5, -1, 4)  # (5 - sqrt5)/4, the odd-index split point
SQRT2 = QuadraticReal(0, 1, 1, radicand=2)
