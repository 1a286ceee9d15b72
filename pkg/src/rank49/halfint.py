"""Half-integral weight machinery: Sturm bounds, Kohnen plus projection,
odd-character unary theta series, Hecke operators T(p^2) and T(p), and the
coefficient-level Shimura lift."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import fixtures
from .arith import (
    Character,
    is_prime,
    kronecker,
    odd_real_primitive_characters,
)
from .qseries import QSeries, constrained_subspace
from .theta import theta_series


@dataclass(frozen=True)
class HalfIntegralForm:
    """A form of weight weight_num/2 on Gamma_0(level) with real character."""

    series: QSeries
    weight_num: int  # odd; weight 3/2 has weight_num = 3
    level: int
    character: Character

    def __post_init__(self):
        if self.weight_num % 2 == 0 or self.weight_num < 1:
            raise ValueError("weight numerator must be odd and positive")
        if self.level % 4:
            raise ValueError("level of a half-integral form must be divisible by 4")

    @property
    def lam(self) -> int:
        """lambda = (weight_num - 1) / 2; weight 3/2 has lambda = 1."""
        return (self.weight_num - 1) // 2


def index_gamma0(N: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): N * prod_{p | N} (1 + 1/p), exact."""
    if N < 1:
        raise ValueError("N must be positive")
    result = N
    m, p = N, 2
    while p * p <= m:
        if m % p == 0:
            result = result // p * (p + 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result = result // m * (m + 1)
    return result


STURM_KINDS = ("integer-weight", "half-integral", "kohnen")


def sturm_bound(weight: Fraction | int, N: int, kind: str) -> int:
    """Coefficient count that determines a form of the given weight and level.

    Integer weight k: ceil(k/12 * index).  Half-integral weight k/2:
    ceil(k/24 * index).  The "kohnen" kind uses the same bound; there only
    the exponents in the two allowed residue classes mod 4 need checking.
    """
    if kind not in STURM_KINDS:
        raise ValueError(f"kind must be one of {STURM_KINDS}")
    w = Fraction(weight)
    index = index_gamma0(N)
    if kind == "integer-weight":
        if w.denominator != 1:
            raise ValueError("integer-weight kind needs an integral weight")
        bound = Fraction(w * index, 12)
    else:
        if w.denominator != 2:
            raise ValueError(f"{kind} kind needs a half-integral weight")
        bound = Fraction(w * index, 12)
    return -((-bound.numerator) // bound.denominator)


def kohnen_forbidden_classes(weight_num: int, epsilon: int) -> frozenset[int]:
    """Residues mod 4 where plus-space coefficients vanish: 2 and
    (-1)^(lambda+1) * epsilon (for weight 3/2 and epsilon = -1 this is {2, 3})."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +-1")
    lam = (weight_num - 1) // 2
    cls = ((-1) ** (lam + 1)) * epsilon % 4
    return frozenset((2, cls))


def kohnen_project(
    basis: list[HalfIntegralForm], epsilon: int
) -> list[HalfIntegralForm]:
    """Basis of the plus subspace of the span of the given forms.

    Exact rational elimination on the coefficients in the forbidden residue
    classes up to the Sturm bound.
    """
    if not basis:
        return []
    level = basis[0].level
    weight_num = basis[0].weight_num
    char = basis[0].character
    for f in basis:
        if f.level != level or f.weight_num != weight_num or f.character != char:
            raise ValueError("mixed levels, weights or characters")
    bound = sturm_bound(Fraction(weight_num, 2), level, "kohnen")
    short = [f for f in basis if f.series.trunc < bound]
    if short:
        raise ValueError(
            f"truncations {[f.series.trunc for f in short]} below Sturm bound {bound}"
        )
    forbidden = kohnen_forbidden_classes(weight_num, epsilon)
    members = constrained_subspace(
        [f.series for f in basis], lambda n: n % 4 in forbidden, bound
    )
    return [HalfIntegralForm(s, weight_num, level, char) for s in members]


def omega_set(N: int, chi: Character) -> list[tuple[int, int]]:
    """All pairs (phi, t): phi an odd primitive real character mod r, t >= 1,
    4*t*r^2 | 4*N, and chi = (-t/.) * phi as characters mod 4N.

    phi is returned as its Kronecker label.  Character equality is tested by
    evaluation at every n <= 8N coprime to 4*N*r*t.  Only real characters
    exist in this artifact, so no complex case arises.
    """
    results: list[tuple[int, int]] = []
    r = 1
    while r * r <= N:
        if N % (r * r) == 0:
            for phi in odd_real_primitive_characters(r):
                divisor = N // (r * r)
                t = 1
                while t <= divisor:
                    if divisor % t == 0:
                        modulus = 4 * N * r * t
                        ok = all(
                            chi(n) == kronecker(-t, n) * phi(n)
                            for n in range(1, 8 * N + 1)
                            if gcd(n, modulus) == 1
                        )
                        if ok:
                            results.append((phi.label, t))
                    t += 1
        r += 1
    return sorted(results, key=lambda pair: (pair[1], pair[0]))


def unary_theta(phi_label: int, t: int, limit: int) -> HalfIntegralForm:
    """Weight-3/2 unary theta sum_{m>=1} phi(m) m q^(t m^2) for odd real phi."""
    if kronecker(phi_label, -1) != -1:
        raise ValueError("phi must be odd: phi(-1) = -1")
    if t < 1:
        raise ValueError("t must be positive")
    coeffs: dict[int, int] = {}
    m = 1
    while t * m * m <= limit:
        v = kronecker(phi_label, m) * m
        if v:
            coeffs[t * m * m] = v
        m += 1
    r = abs(phi_label) if phi_label % 4 == 1 else 4 * abs(phi_label)
    level = 4 * t * r * r
    return HalfIntegralForm(
        QSeries(coeffs, limit), 3, level, Character(-t * phi_label, level)
    )


def hecke_Tp2(f: HalfIntegralForm, p: int) -> HalfIntegralForm:
    """Hecke operator T(p^2) on weight lambda + 1/2 forms, odd p not dividing
    the level:

        b(n) = a(p^2 n) + chi(p) ((-1)^lambda n / p) p^(lambda-1) a(n)
                        + chi(p^2) p^(2 lambda - 1) a(n / p^2).

    The output truncation shrinks to floor(trunc / p^2).
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if f.level % p == 0:
        raise ValueError(f"p = {p} divides the level {f.level}")
    if f.series.trunc < p * p:
        raise ValueError(f"truncation {f.series.trunc} is smaller than p^2 = {p*p}")
    lam = f.lam
    chi = f.character
    trunc = f.series.trunc // (p * p)
    sign = (-1) ** lam
    coeffs: dict[int, Fraction] = {}
    for n in range(1, trunc + 1):
        b = f.series.coeff(p * p * n)
        b += chi(p) * kronecker(sign * n, p) * p ** (lam - 1) * f.series.coeff(n)
        if n % (p * p) == 0:
            b += chi(p * p) * p ** (2 * lam - 1) * f.series.coeff(n // (p * p))
        if b:
            coeffs[n] = b
    return HalfIntegralForm(QSeries(coeffs, trunc), f.weight_num, f.level, chi)


def hecke_Tp_integer(F: QSeries, p: int, k: int, chi: Character) -> QSeries:
    """Integer-weight T(p): b(n) = a(np) + chi(p) p^(k-1) a(n/p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if F.trunc < p:
        raise ValueError("truncation too small")
    trunc = F.trunc // p
    coeffs: dict[int, Fraction] = {}
    for n in range(0, trunc + 1):
        b = F.coeff(n * p)
        if n % p == 0:
            b += chi(p) * p ** (k - 1) * F.coeff(n // p)
        if b:
            coeffs[n] = b
    return QSeries(coeffs, trunc) if coeffs else QSeries.zero(trunc)


def shimura_lift(f: HalfIntegralForm, t: int, limit: int) -> QSeries:
    """Shimura lift Sh_t at squarefree t for weight 3/2 (lambda = 1) input:
    coefficient n is sum over divisors v | n of chi(v) (-t/v) c(t (n/v)^2),
    landing in weight 2.  Requires coefficients of f through t * limit^2.
    """
    if f.weight_num != 3:
        raise ValueError("only the weight 3/2 lift is implemented")
    if t < 1:
        raise ValueError("t must be a positive squarefree integer")
    if f.series.trunc < t * limit * limit:
        raise ValueError(
            f"need coefficients through {t * limit * limit}, have {f.series.trunc}"
        )
    chi = f.character
    coeffs: dict[int, Fraction] = {}
    for n in range(1, limit + 1):
        total = Fraction(0)
        for v in range(1, n + 1):
            if n % v == 0:
                chival = chi(v) * kronecker(-t, v)
                if chival:
                    m = n // v
                    total += chival * f.series.coeff(t * m * m)
        if total:
            coeffs[n] = total
    return QSeries(coeffs, limit) if coeffs else QSeries.zero(limit)


class FixtureMismatchError(RuntimeError):
    """A theta-decomposition extension disagrees with the bundled fixture."""


EXTENDABLE = ("f1", "f2", "f3", "g1")
_extension_cache: dict[str, HalfIntegralForm] = {}


def extend_fixture(name: str, limit: int) -> HalfIntegralForm:
    """The fixture form recomputed from its theta decomposition at any
    truncation.  The first 42 coefficients must agree with the bundled data;
    disagreement is a hard failure, never a fallback.
    """
    if name not in EXTENDABLE:
        raise ValueError(f"no theta decomposition for {name!r}; have {EXTENDABLE}")
    cached = _extension_cache.get(name)
    if cached is None or cached.series.trunc < limit:
        target = max(limit, 42)
        acc = QSeries.zero(target)
        for mat, coeff in fixtures.decomposition(name):
            acc = acc + theta_series(mat, target).scale(coeff)
        reference = fixtures.series(name)
        if not acc.agrees_through(reference, 42):
            raise FixtureMismatchError(
                f"theta extension of {name} disagrees with the fixture through q^42"
            )
        rec = fixtures.record(name)
        cached = HalfIntegralForm(
            acc, 3, rec.level, Character(rec.character, rec.character)
        )
        _extension_cache[name] = cached
    if cached.series.trunc == limit:
        return cached
    return HalfIntegralForm(
        cached.series.truncate(limit), 3, cached.level, cached.character
    )
