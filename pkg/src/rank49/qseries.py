"""Exact truncated q-expansions over Q, and the rational linear algebra
(span membership, constrained kernels) used for Kohnen projection and
theta decompositions.

A QSeries knows its coefficients for every exponent n <= trunc; beyond the
truncation a coefficient is *unknown*, not zero, and asking for it raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

Rational = Fraction | int


class TruncationError(ValueError):
    """Raised when an operation needs coefficients past a truncation."""


class QSeries:
    __slots__ = ("_coeffs", "trunc")

    def __init__(self, coeffs: Mapping[int, Rational], trunc: int):
        if trunc < 1:
            raise ValueError("truncation must be >= 1")
        store: dict[int, Fraction] = {}
        for n, c in coeffs.items():
            if n < 0:
                raise ValueError(f"negative exponent {n}")
            if n > trunc:
                raise ValueError(f"exponent {n} exceeds truncation {trunc}")
            c = Fraction(c)
            if c:
                store[n] = c
        self._coeffs = store
        self.trunc = trunc

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Rational]], trunc: int) -> "QSeries":
        acc: dict[int, Fraction] = {}
        for n, c in terms:
            acc[n] = acc.get(n, Fraction(0)) + Fraction(c)
        return cls(acc, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls({}, trunc)

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"negative exponent {n}")
        if n > self.trunc:
            raise TruncationError(
                f"coefficient {n} is beyond truncation {self.trunc} (unknown, not zero)"
            )
        return self._coeffs.get(n, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._coeffs.items())

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def __add__(self, other: "QSeries") -> "QSeries":
        trunc = min(self.trunc, other.trunc)
        acc = {n: c for n, c in self._coeffs.items() if n <= trunc}
        for n, c in other._coeffs.items():
            if n <= trunc:
                acc[n] = acc.get(n, Fraction(0)) + c
        return QSeries(acc, trunc)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries({n: -c for n, c in self._coeffs.items()}, self.trunc)

    def scale(self, c: Rational) -> "QSeries":
        c = Fraction(c)
        if not c:
            return QSeries.zero(self.trunc)
        return QSeries({n: c * v for n, v in self._coeffs.items()}, self.trunc)

    def __rmul__(self, c: Rational) -> "QSeries":
        return self.scale(c)

    def truncate(self, trunc: int) -> "QSeries":
        if trunc > self.trunc:
            raise TruncationError(f"cannot extend truncation {self.trunc} to {trunc}")
        return QSeries({n: c for n, c in self._coeffs.items() if n <= trunc}, trunc)

    def agrees_through(self, other: "QSeries", upto: int) -> bool:
        """Exact coefficient agreement for all n <= upto."""
        if upto > self.trunc or upto > other.trunc:
            raise TruncationError(
                f"cannot compare through {upto}: truncations are "
                f"{self.trunc} and {other.trunc}"
            )
        for n in set(self._coeffs) | set(other._coeffs):
            if n <= upto and self._coeffs.get(n, 0) != other._coeffs.get(n, 0):
                return False
        return True

    def is_zero_through(self, upto: int) -> bool:
        return self.agrees_through(QSeries.zero(upto), upto)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.trunc, tuple(sorted(self._coeffs.items()))))

    def __repr__(self) -> str:
        head = " + ".join(f"{c}*q^{n}" for n, c in self.items()[:6]) or "0"
        return f"QSeries({head} ... , trunc={self.trunc})"


def add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def scale(c: Rational, a: QSeries) -> QSeries:
    return a.scale(c)


def coeff(a: QSeries, n: int) -> Fraction:
    return a.coeff(n)


@dataclass(frozen=True)
class SpanSolution:
    coefficients: list[Fraction]
    unique: bool


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_in_span(
    target: QSeries, generators: Sequence[QSeries], upto: int
) -> SpanSolution | None:
    """Rationals c_i with target = sum c_i * g_i on all exponents <= upto.

    Returns None when no combination matches.  When the solution is not
    unique, free variables are set to 0 and the result is flagged.
    """
    if not generators:
        raise ValueError("generators must be nonempty")
    for s in (target, *generators):
        if upto > s.trunc:
            raise TruncationError(f"upto={upto} exceeds truncation {s.trunc}")
    k = len(generators)
    exponents = sorted(
        {n for g in generators for n in g.support() if n <= upto}
        | {n for n in target.support() if n <= upto}
    )
    rows = [
        [g.coeff(n) for g in generators] + [target.coeff(n)] for n in exponents
    ]
    rows, pivots = _rref(rows, k)
    # Inconsistent iff some row is (0 ... 0 | nonzero).
    for row in rows:
        if row[k] and not any(row[:k]):
            return None
    solution = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        solution[col] = rows[r][k]
    return SpanSolution(solution, unique=(len(pivots) == k))


def constrained_combinations(
    generators: Sequence[QSeries],
    forbidden: Callable[[int], bool],
    upto: int,
) -> list[list[Fraction]]:
    """Reduced-echelon basis (pivot coefficient 1) of the coefficient vectors
    c with sum c_i*g_i vanishing at every forbidden exponent <= upto."""
    for g in generators:
        if upto > g.trunc:
            raise TruncationError(f"upto={upto} exceeds truncation {g.trunc}")
    k = len(generators)
    constraints = [
        [g.coeff(n) for g in generators]
        for n in range(upto + 1)
        if forbidden(n)
    ]
    if not constraints:
        basis = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        return basis
    rows, pivots = _rref([row[:] for row in constraints], k)
    free = [j for j in range(k) if j not in pivots]
    kernel: list[list[Fraction]] = []
    rows = rows[: len(pivots)]
    for j in free:
        vec = [Fraction(0)] * k
        vec[j] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -rows[r][j]
        kernel.append(vec)
    kernel_rref, _ = _rref([v[:] for v in kernel], k)
    return [row for row in kernel_rref if any(row)]


def constrained_subspace(
    generators: Sequence[QSeries],
    forbidden: Callable[[int], bool],
    upto: int,
) -> list[QSeries]:
    """Basis of the subspace of the generators' span whose members vanish at
    every forbidden exponent <= upto."""
    basis = []
    for combo in constrained_combinations(generators, forbidden, upto):
        acc = QSeries.zero(min(g.trunc for g in generators))
        for c, g in zip(combo, generators):
            if c:
                acc = acc + g.scale(c)
        basis.append(acc)
    return basis
