"""Numeric central L-values of the level-49 newform and its quadratic twists,
functional-equation signs, the Euler-factor correction C(d), the square-twist
Euler identity, and the Waldspurger ratio residual.

For a twist with functional-equation sign +1 and conductor N the central
value is the exactly convergent series

    L(F_d, 1) = 2 * sum_{n >= 1} (a_n(F_d) / n) * exp(-2 pi n / sqrt(N)),

truncated once the divisor-bound tail majorant drops below the tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import cmform
from .arith import (
    chi28,
    chi_twist,
    fundamental_discriminant,
    is_prime,
    is_squarefree,
    kronecker,
    same_padic_square_class,
)
from .halfint import extend_fixture

TOL_FLOOR = 1e-8  # double-precision floor for the series evaluation


@dataclass(frozen=True)
class LValueResult:
    value: float
    terms_used: int
    tail_bound: float
    declared_zero: bool
    sign: int


def _check_twist_argument(d: int) -> None:
    if d == 0 or not is_squarefree(d):
        raise ValueError(f"{d} is not a nonzero squarefree integer")
    if d % 7 == 0:
        raise ValueError(f"{d} is divisible by 7; reduce the discriminant first")


def conductor_twist(d: int) -> int:
    """Conductor 49 * D^2 of the twisted form, D the fundamental discriminant."""
    _check_twist_argument(d)
    D = fundamental_discriminant(d)
    return 49 * D * D


def sign_twist(d: int) -> int:
    """Sign of the functional equation of the twist: +1 for d > 0, -1 for d < 0.

    This is -w_49 * chi_d(-49) with Fricke eigenvalue w_49 = -1 and
    chi_d(-49) = (d/-1); validated numerically against the nonvanishing
    central values for d > 0.
    """
    _check_twist_argument(d)
    return 1 if d > 0 else -1


def _tail_majorant(c: float, M: int) -> float:
    """Bound for 2 * sum_{n > M} sigma_0(n) sqrt(n)/n * exp(-c n) via the
    divisor bound sigma_0(n) <= sqrt(3 n), summed as a geometric series."""
    return 2.0 * math.sqrt(3.0) * math.exp(-c * (M + 1)) / (1.0 - math.exp(-c))


def l_value(d: int, tol: float = 1e-6) -> LValueResult:
    """Central value L(F_d, 1) with certified series tail below tol.

    A negative d has sign -1, so the value is declared exactly zero.  The
    twisted coefficients are a_n * chi_D(n) for the fundamental discriminant
    D of d (the newform attached to the twisted curve).
    """
    if tol < TOL_FLOOR:
        raise ValueError(f"tolerance {tol} below the double-precision floor {TOL_FLOOR}")
    sign = sign_twist(d)
    if sign == -1:
        return LValueResult(0.0, 0, 0.0, True, -1)
    D = fundamental_discriminant(d)
    sqrt_n = 7 * abs(D)  # sqrt(49 D^2), exact
    c = 2.0 * math.pi / sqrt_n
    M = max(1, math.ceil(math.log(2.0 * math.sqrt(3.0) / (tol * (1.0 - math.exp(-c)))) / c))
    while _tail_majorant(c, M) >= tol:
        M += 1
    an = cmform.an_list(M)
    chi = chi_twist(d)
    total = 0.0
    for n in range(M, 0, -1):
        a = an[n]
        if a:
            k = chi(n)
            if k:
                total += a * k / n * math.exp(-c * n)
    return LValueResult(2.0 * total, M, _tail_majorant(c, M), False, 1)


def c_factor(d: int) -> int:
    """Correction C(d) relating L(F x chi_{-28d}, 1) to L(F_d, 1):
    2 when (d/2) = -1, else 1."""
    return 2 if kronecker(d, 2) == -1 else 1


def euler_factor_identity(p: int, limit: int) -> bool:
    """Exact coefficient identity for the twist by chi_{p^2}: the n-th
    coefficient of F x chi_{p^2} equals

        a_n - a_p a_{n/p} [p | n] + chi(p) p a_{n/p^2} [p^2 | n]

    with chi the trivial character mod 49, checked for all n <= limit.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if limit < p * p:
        raise ValueError("limit must be at least p^2")
    an = cmform.an_list(limit)
    ap = cmform.ap(p)
    chi_p = 0 if p == 7 else 1
    for n in range(1, limit + 1):
        lhs = an[n] * kronecker(p * p, n)
        rhs = an[n]
        if n % p == 0:
            rhs -= ap * an[n // p]
        if n % (p * p) == 0:
            rhs += chi_p * p * an[n // (p * p)]
        if lhs != rhs:
            return False
    return True


def waldspurger_ratio_residual(d1: int, d2: int, i: int, tol: float = 1e-3) -> float:
    """Residual of the rearranged Waldspurger identity

        c_{d1}(f_i)^2 C(d2) L(F_{d2},1) chi28(d2/d1) sqrt(d2)
            = c_{d2}(f_i)^2 C(d1) L(F_{d1},1) sqrt(d1)

    for positive squarefree d1, d2 in the same 2-adic and 7-adic square
    class.  Coefficients come from the theta-extended fixtures; L-values are
    evaluated at tol/10.
    """
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    for d in (d1, d2):
        _check_twist_argument(d)
        if d < 0:
            raise ValueError("positive discriminants required")
    if not (same_padic_square_class(d1, d2, 2) and same_padic_square_class(d1, d2, 7)):
        raise ValueError(
            f"{d1} and {d2} are not in the same square class in Q_2 and Q_7"
        )
    f = extend_fixture(f"f{i}", max(d1, d2, 42))
    c1 = int(f.series.coeff(d1))
    c2 = int(f.series.coeff(d2))
    L1 = l_value(d1, tol / 10)
    L2 = l_value(d2, tol / 10)
    chi = chi28()
    ratio_char = chi.ratio(d2, d1)
    lhs = c1 * c1 * c_factor(d2) * L2.value * ratio_char * math.sqrt(d2)
    rhs = c2 * c2 * c_factor(d1) * L1.value * math.sqrt(d1)
    return abs(lhs - rhs)
