"""Partitions of the positive integers into n dyadic-offset columns.

A generator sequence l with l(1) = 2**(n-1) and consecutive gaps drawn
from {2**(n-1), 2**(n-1) + 2**(n-2), ..., 2**n - 1} spawns n columns:
column 1 is l itself and column j collects l(k) shifted by every signed
sum eps*2**(n-2) + ... + eps*2**(n-j); together the columns cover every
positive integer and no integer lands in two different columns.  This
module materializes the columns, inverts the construction (decompose),
and verifies cover/disjointness by brute force.

An integer inside the overlap of two consecutive generator intervals has
two valid (index, signs) representations; they always agree on the
column.  decompose returns the smallest-index one and decompositions
returns all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .qfield import ONE, PHI, QuadraticReal
from .sharding import index_blocks
from .wythoff import lower


def gap_set(n: int) -> set[int]:
    """Allowed consecutive generator gaps {2**n - 2**(n-b) : 1 <= b <= n}."""
    _require_columns(n)
    return {2**n - 2 ** (n - b) for b in range(1, n + 1)}


def _require_columns(n: int) -> None:
    if n < 2:
        raise ValueError(f"need at least 2 columns, got {n}")


@dataclass(frozen=True)
class IdentityH:
    """Step sequence h(k) = k; the columns become arithmetic progressions."""

    def h(self, k: int) -> int:
        return k

    def describe(self) -> str:
        return "h=identity"


@dataclass(frozen=True)
class AlphaH:
    """Step sequence h(k) = floor(k*alpha) for an exact alpha in [1, 2).

    The gap condition holds automatically because consecutive Beatty
    differences for such alpha are 1 or 2.
    """

    alpha: QuadraticReal

    def __post_init__(self):
        if not (ONE <= self.alpha and self.alpha < 2):
            raise ValueError(f"alpha must satisfy 1 <= alpha < 2, got {self.alpha}")

    def h(self, k: int) -> int:
        if self.alpha == PHI:
            return lower(k)
        return (self.alpha * k).floor()

    def describe(self) -> str:
        if self.alpha == PHI:
            return "h=phi"
        return f"alpha={self.alpha}"


@dataclass(frozen=True)
class ExplicitColumn:
    """First column given literally as a finite list of values."""

    values: tuple[int, ...]

    def describe(self) -> str:
        head = ",".join(str(v) for v in self.values[:6])
        tail = ",..." if len(self.values) > 6 else ""
        return f"explicit[{head}{tail}]"


Generator = IdentityH | AlphaH | ExplicitColumn


@dataclass(frozen=True)
class PartitionSpec:
    """Number of columns plus the first-column generator."""

    n: int
    generator: Generator

    def __post_init__(self):
        _require_columns(self.n)

    @property
    def half_width(self) -> int:
        """Half-width 2**(n-1) - 1 of the interval a generator term fills."""
        return 2 ** (self.n - 1) - 1

    def term(self, k: int) -> int | None:
        """Generator value l(k); None when an explicit list is exhausted."""
        if k < 1:
            raise ValueError(f"index must be positive, got {k}")
        g = self.generator
        if isinstance(g, ExplicitColumn):
            return g.values[k - 1] if k <= len(g.values) else None
        return (2 ** (self.n - 1) - 1) * g.h(k) + k

    def describe(self) -> str:
        return self.generator.describe()


def identity_spec(n: int) -> PartitionSpec:
    return PartitionSpec(n, IdentityH())


def phi_spec(n: int) -> PartitionSpec:
    return PartitionSpec(n, AlphaH(PHI))


def alpha_spec(n: int, alpha: QuadraticReal) -> PartitionSpec:
    return PartitionSpec(n, AlphaH(alpha))


def explicit_spec(n: int, values: Iterable[int]) -> PartitionSpec:
    return PartitionSpec(n, ExplicitColumn(tuple(values)))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation_index: int | None = None
    message: str = ""


class GeneratorError(ValueError):
    """A generator violated its start or gap constraints."""

    def __init__(self, report: ValidationReport):
        super().__init__(report.message)
        self.report = report


def _term_violation(spec: PartitionSpec, k: int, t: int, prev: int | None, allowed: set[int]) -> str | None:
    if k == 1 and t != 2 ** (spec.n - 1):
        return f"l(1) = {t}, expected {2 ** (spec.n - 1)}"
    if prev is not None and t - prev not in allowed:
        return f"gap l({k}) - l({k - 1}) = {t - prev} not in {sorted(allowed)}"
    return None


def validate_generator(spec: PartitionSpec, count: int) -> ValidationReport:
    """Materialize l(1..count) and check the start value and every gap.

    Violations are data, not exceptions; the report carries the first
    offending index.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    allowed = gap_set(spec.n)
    prev = None
    for k in range(1, count + 1):
        t = spec.term(k)
        if t is None:
            return ValidationReport(False, k, f"generator exhausted before k={k}")
        message = _term_violation(spec, k, t, prev, allowed)
        if message is not None:
            return ValidationReport(False, k, message)
        prev = t
    return ValidationReport(True)


def linear_form(n: int, t: int, j: int, signs: tuple[int, ...]) -> int:
    """t + signs[0]*2**(n-2) + ... + signs[j-1]*2**(n-j-1); j = 0 gives t."""
    _require_columns(n)
    if not 0 <= j <= n - 1:
        raise ValueError(f"form index must be in [0, {n - 1}], got {j}")
    if len(signs) != j:
        raise ValueError(f"sign prefix has length {len(signs)}, form index {j} needs exactly {j}")
    total = t
    for i, eps in enumerate(signs):
        if eps not in (-1, 1):
            raise ValueError(f"signs must be +-1, got {eps}")
        total += eps * 2 ** (n - 2 - i)
    return total


def column_offsets(n: int, column: int) -> tuple[int, ...]:
    """All signed-sum offsets of one column, ascending.

    Column 1 only contains the generator itself; column j >= 2 shifts by
    2**(n-j) times every odd u with |u| <= 2**(j-1) - 1, which is exactly
    the value set of the corresponding signed sums.
    """
    _require_columns(n)
    if not 1 <= column <= n:
        raise ValueError(f"column must be in [1, {n}], got {column}")
    if column == 1:
        return (0,)
    w = 2 ** (n - column)
    top = 2 ** (column - 1) - 1
    return tuple(w * u for u in range(-top, top + 1, 2))


@dataclass(frozen=True)
class Decomposition:
    """One realization of an integer as (column, generator index, signs)."""

    column: int
    index: int
    signs: tuple[int, ...]


def _sign_expansion(n: int, delta: int) -> tuple[int, tuple[int, ...]] | None:
    """Column and sign prefix whose offset sum equals delta, if any.

    The offset of column c is an odd multiple of 2**(n-c), so the 2-adic
    valuation of delta pins the column and a straight greedy walk over the
    weights recovers the signs.
    """
    if delta == 0:
        return 1, ()
    valuation = (delta & -delta).bit_length() - 1
    if valuation > n - 2:
        return None
    column = n - valuation
    if abs(delta >> valuation) > 2 ** (column - 1) - 1:
        return None
    signs = []
    rest = delta
    for i in range(column - 1):
        eps = 1 if rest > 0 else -1
        signs.append(eps)
        rest -= eps * 2 ** (n - 2 - i)
    if rest != 0:
        return None
    return column, tuple(signs)


def _first_index_at_least(spec: PartitionSpec, target: int) -> int:
    """Smallest k with l(k) >= target, assuming l non-decreasing."""
    hi = 1
    while True:
        t = spec.term(hi)
        if t is None:
            hi = len(spec.generator.values)  # type: ignore[union-attr]
            break
        if t >= target:
            break
        hi *= 2
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        t = spec.term(mid)
        if t is None or t >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def decompositions(m: int, spec: PartitionSpec) -> list[Decomposition]:
    """Every (column, index, signs) realizing m, ascending by index.

    At most two generator intervals contain m and when both do the two
    realizations share one column; a mismatch would contradict
    disjointness and raises.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    width = spec.half_width
    out: list[Decomposition] = []
    k = _first_index_at_least(spec, m - width)
    while True:
        t = spec.term(k)
        if t is None or t > m + width:
            break
        if t >= m - width:
            expansion = _sign_expansion(spec.n, m - t)
            if expansion is not None:
                out.append(Decomposition(expansion[0], k, expansion[1]))
        k += 1
    if len({dec.column for dec in out}) > 1:
        raise ArithmeticError(f"{m} realized in two different columns: {out}")
    return out


def decompose(m: int, spec: PartitionSpec) -> Decomposition:
    """The smallest-index realization of m (the column is unique)."""
    found = decompositions(m, spec)
    if not found:
        raise ArithmeticError(f"{m} not covered; generator does not satisfy the hypotheses")
    return found[0]


def build_columns(spec: PartitionSpec, limit: int) -> list[list[int]]:
    """All n columns restricted to [1, limit], each strictly increasing.

    Enumerates generator terms until their whole offset interval lies
    beyond the limit.  Raises GeneratorError as soon as a materialized
    term violates the start or gap constraints.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    allowed = gap_set(spec.n)
    offsets = [column_offsets(spec.n, j) for j in range(1, spec.n + 1)]
    columns: list[set[int]] = [set() for _ in range(spec.n)]
    prev = None
    k = 1
    while True:
        t = spec.term(k)
        if t is None:
            break
        message = _term_violation(spec, k, t, prev, allowed)
        if message is not None:
            raise GeneratorError(ValidationReport(False, k, message))
        if t - spec.half_width > limit:
            break
        for holder, offs in zip(columns, offsets):
            for off in offs:
                v = t + off
                if 1 <= v <= limit:
                    holder.add(v)
        prev = t
        k += 1
    return [sorted(s) for s in columns]


def _build_single_column(spec: PartitionSpec, column: int, limit: int) -> list[int]:
    offs = column_offsets(spec.n, column)
    values: set[int] = set()
    k = 1
    while True:
        t = spec.term(k)
        if t is None or t - spec.half_width > limit:
            break
        for off in offs:
            v = t + off
            if 1 <= v <= limit:
                values.add(v)
        k += 1
    return sorted(values)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    generator: str
    limit: int
    covered: bool
    disjoint: bool
    first_defect: int | None

    @property
    def ok(self) -> bool:
        return self.covered and self.disjoint

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "generator": self.generator,
            "limit": self.limit,
            "covered": self.covered,
            "disjoint": self.disjoint,
            "first_defect": self.first_defect,
        }


def _verify_block(spec: PartitionSpec, offsets, lo: int, hi: int) -> tuple[int | None, int | None]:
    """(first uncovered, first column conflict) within the value block [lo, hi].

    Explicit generators are scanned in full so that even non-monotone
    (invalid) data is measured faithfully; the infinite generators are
    strictly increasing by construction, allowing the index search and
    the early cutoff.
    """
    width = spec.half_width
    labels = bytearray(hi - lo + 1)
    conflict: int | None = None
    explicit = isinstance(spec.generator, ExplicitColumn)
    k = 1 if explicit else _first_index_at_least(spec, lo - width)
    while True:
        t = spec.term(k)
        if t is None or (not explicit and t - width > hi):
            break
        for j, offs in enumerate(offsets, start=1):
            for off in offs:
                v = t + off
                if lo <= v <= hi:
                    seen = labels[v - lo]
                    if seen == 0:
                        labels[v - lo] = j
                    elif seen != j and (conflict is None or v < conflict):
                        conflict = v
        k += 1
    try:
        uncovered = lo + labels.index(0)
    except ValueError:
        uncovered = None
    return uncovered, conflict


def verify_partition(spec: PartitionSpec, limit: int, shards: int = 1) -> VerifyReport:
    """Brute-force check that [1, limit] is covered exactly once.

    The value range is cut into shard blocks whose scans are independent
    (every generator interval touching a block is enumerated for it) and
    whose defect reports merge by taking minima, so the outcome does not
    depend on the shard count.  Duplicate realizations inside a single
    column are legitimate and do not count as defects.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    offsets = [column_offsets(spec.n, j) for j in range(1, spec.n + 1)]
    uncovered: int | None = None
    conflict: int | None = None
    for lo, hi in index_blocks(1, limit, shards):
        block_uncovered, block_conflict = _verify_block(spec, offsets, lo, hi)
        if block_uncovered is not None and (uncovered is None or block_uncovered < uncovered):
            uncovered = block_uncovered
        if block_conflict is not None and (conflict is None or block_conflict < conflict):
            conflict = block_conflict
    defects = [v for v in (uncovered, conflict) if v is not None]
    return VerifyReport(
        n=spec.n,
        generator=spec.describe(),
        limit=limit,
        covered=uncovered is None,
        disjoint=conflict is None,
        first_defect=min(defects) if defects else None,
    )


def d2_closed_form(n: int, k: int, spec: PartitionSpec | None = None) -> int:
    """k-th smallest element of column 2: a(k) + (2**(n-1)-2)*k - (2**(n-2)-1).

    Proved only for the lower-Wythoff step sequence; any other generator
    is rejected.
    """
    _require_columns(n)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if spec is not None:
        if spec.n != n or not (isinstance(spec.generator, AlphaH) and spec.generator.alpha == PHI):
            raise ValueError(f"closed form unsupported for generator {spec.describe()}")
    return lower(k) + (2 ** (n - 1) - 2) * k - (2 ** (n - 2) - 1)


def limiting_prefix_check(n: int, e: int, spec: PartitionSpec | None = None) -> bool:
    """Whether column n-e starts with 2**e * (1, 3, 5, ..., 2**(n-e) - 1).

    The prefix claim only uses l(1) = 2**(n-1), so any valid spec for the
    given n may be passed; the identity-step spec is the default.
    """
    _require_columns(n)
    if not 0 <= e <= n - 1:
        raise ValueError(f"e must be in [0, {n - 1}], got {e}")
    if spec is None:
        spec = identity_spec(n)
    elif spec.n != n:
        raise ValueError(f"spec has {spec.n} columns, expected {n}")
    expected = [2**e * u for u in range(1, 2 ** (n - e), 2)]
    column = _build_single_column(spec, n - e, expected[-1])
    return column[: len(expected)] == expected
