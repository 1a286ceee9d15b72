"""Positive-definite ternary quadratic forms: validation, exact lattice-point
counting, theta series, and level/character data.

A form is a symmetric integer Gram matrix A with even diagonal; the quadratic
form is Q(v) = (1/2) v^T A v, integer-valued on Z^3.  All enumeration bounds
are derived by exact completion of squares in integer arithmetic; no bound is
ever computed in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm
from typing import NamedTuple, Sequence

from .arith import squarefree_decompose
from .qseries import QSeries

Matrix = Sequence[Sequence[int]]


class FormValidationError(ValueError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class TernaryForm:
    gram: tuple[tuple[int, int, int], ...]

    @property
    def entries(self) -> tuple[int, int, int, int, int, int]:
        """Upper triangle (a, b, c, d, e, f) of [[a,b,c],[b,d,e],[c,e,f]]."""
        g = self.gram
        return (g[0][0], g[0][1], g[0][2], g[1][1], g[1][2], g[2][2])

    def value(self, v: Sequence[int]) -> int:
        """Q(v) = (1/2) v^T A v, exact integer."""
        x, y, z = v
        a, b, c, d, e, f = self.entries
        return (a * x * x + d * y * y + f * z * z) // 2 + b * x * y + c * x * z + e * y * z

    def determinant(self) -> int:
        a, b, c, d, e, f = self.entries
        return a * (d * f - e * e) - b * (b * f - c * e) + c * (b * e - c * d)

    def adjugate(self) -> tuple[tuple[int, int, int], ...]:
        a, b, c, d, e, f = self.entries
        return (
            (d * f - e * e, c * e - b * f, b * e - c * d),
            (c * e - b * f, a * f - c * c, b * c - a * e),
            (b * e - c * d, b * c - a * e, a * d - b * b),
        )

    def __repr__(self) -> str:
        return f"TernaryForm{self.gram}"


def validate(matrix: Matrix) -> TernaryForm:
    """Check symmetry, even diagonal and positive definiteness.

    Each violated property raises a FormValidationError with a distinct
    `reason` tag so callers can tell rejections apart.
    """
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise FormValidationError("shape", f"expected a 3x3 matrix, got {rows!r}")
    for i in range(3):
        for j in range(i + 1, 3):
            if rows[i][j] != rows[j][i]:
                raise FormValidationError(
                    "asymmetric", f"entries ({i},{j}) and ({j},{i}) differ"
                )
    for i in range(3):
        if rows[i][i] % 2:
            raise FormValidationError(
                "odd-diagonal", f"diagonal entry {rows[i][i]} at ({i},{i}) is odd"
            )
    a, b, _c, d, _e, _f = (
        rows[0][0],
        rows[0][1],
        rows[0][2],
        rows[1][1],
        rows[1][2],
        rows[2][2],
    )
    form = TernaryForm(rows)
    minors = (a, a * d - b * b, form.determinant())
    if any(m <= 0 for m in minors):
        raise FormValidationError(
            "not-positive-definite",
            f"leading principal minors {minors} must all be positive",
        )
    return form


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def representation_count(form: TernaryForm, n: int) -> int:
    """Exact count of v in Z^3 with Q(v) = n.

    Independent of the theta_series sweep: the outer two coordinates range
    over exact Schur-complement bounds and the innermost coordinate is
    recovered by solving the quadratic equation through its discriminant.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    a, b, c, d, e, f = form.entries
    det = form.determinant()
    delta = a * d - b * b
    g = a * e - b * c
    count = 0
    zmax = isqrt(2 * n * delta // det)
    for z in range(-zmax, zmax + 1):
        # (delta*y + g*z)^2 <= 2*a*delta*n - a*det*z^2
        s_bound = 2 * a * delta * n - a * det * z * z
        if s_bound < 0:
            continue
        w_max = isqrt(s_bound)
        y_lo = _ceil_div(-w_max - g * z, delta)
        y_hi = (w_max - g * z) // delta
        for y in range(y_lo, y_hi + 1):
            # a*x^2 + 2(by+cz)x + (dy^2 + 2eyz + fz^2 - 2n) = 0
            t = b * y + c * z
            disc = t * t - a * (d * y * y + 2 * e * y * z + f * z * z - 2 * n)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            if s == 0:
                if t % a == 0:
                    count += 1
            else:
                if (-t + s) % a == 0:
                    count += 1
                if (-t - s) % a == 0:
                    count += 1
    return count


def theta_series(form: TernaryForm, limit: int) -> QSeries:
    """Theta series sum r_Q(n) q^n through q^limit.

    Single sweep over the ellipsoid Q(v) <= limit; every enumerated point is
    histogrammed, so the cost is one enumeration regardless of limit.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    a, b, c, d, e, f = form.entries
    det = form.determinant()
    delta = a * d - b * b
    g = a * e - b * c
    counts = [0] * (limit + 1)
    zmax = isqrt(2 * limit * delta // det)
    for z in range(-zmax, zmax + 1):
        r_y = 2 * a * delta * limit - a * det * z * z
        if r_y < 0:
            continue
        w_max = isqrt(r_y)
        y_lo = _ceil_div(-w_max - g * z, delta)
        y_hi = (w_max - g * z) // delta
        for y in range(y_lo, y_hi + 1):
            w = delta * y + g * z
            rem = r_y - w * w
            u_max = isqrt(rem // delta)
            t = b * y + c * z
            x_lo = _ceil_div(-u_max - t, a)
            x_hi = (u_max - t) // a
            base = (d * y * y + f * z * z) // 2 + e * y * z
            for x in range(x_lo, x_hi + 1):
                q = (a * x * x) // 2 + x * t + base
                counts[q] += 1
    return QSeries({n: v for n, v in enumerate(counts) if v}, limit)


class LevelCharacter(NamedTuple):
    level: int
    character_label: int
    character_kernel: int


def level_and_character(form: TernaryForm) -> LevelCharacter:
    """Smallest N with N*A^(-1) integral and even-diagonal, plus the character
    data: the raw label det(2A) = |2A| and its squarefree part.

    The character is chi_{|2A|}; labels are compared by evaluation (the raw
    integer is kept, no fundamental-discriminant normalisation).
    """
    det = form.determinant()
    adj = form.adjugate()
    N = 1
    for i in range(3):
        for j in range(3):
            entry = adj[i][j]
            if entry == 0:
                continue
            q = det // gcd(det, entry)
            if i == j:
                p = entry // gcd(det, entry)
                # N * p / q must be an even integer
                N = lcm(N, q if p % 2 == 0 else 2 * q)
            else:
                N = lcm(N, q)
    label = 8 * det
    kernel, _ = squarefree_decompose(label)
    return LevelCharacter(N, label, kernel)


def transform(form: TernaryForm, U: Matrix) -> TernaryForm:
    """Change of basis U^T A U for integer U (unimodular U preserves theta)."""
    A = form.gram
    UT_A = [
        [sum(U[k][i] * A[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    new = [
        [sum(UT_A[i][k] * U[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    return validate(new)
