"""Exact integer arithmetic: Kronecker symbol, squarefree decomposition,
fundamental discriminants, p-adic square classes, real Dirichlet characters."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), totally multiplicative extension of Jacobi.

    Conventions: (a/0) = 1 iff a = +-1 else 0; (a/-1) = 1 for a >= 0 else -1;
    (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0 by reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = s*f^2 with s squarefree and sign(s) = sign(n). Returns (s, f)."""
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    sign = 1 if n > 0 else -1
    m = abs(n)
    s, f = 1, 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            f *= d ** (e // 2)
            if e % 2:
                s *= d
        d += 1 if d == 2 else 2
    return sign * s * m, f


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return squarefree_decompose(n)[1] == 1


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(d)) for squarefree d: d if d = 1 mod 4, else 4d."""
    if d == 0 or not is_squarefree(d):
        raise ValueError(f"{d} is not squarefree")
    return d if d % 4 == 1 else 4 * d


def _padic_split(n: int, p: int) -> tuple[int, int]:
    """n = p^m * u with p not dividing u; returns (m, u)."""
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return m, n


def same_padic_square_class(d1: int, d2: int, p: int) -> bool:
    """Whether d1/d2 is a nonzero square in the p-adic field Q_p.

    For p = 2 the units must agree mod 8; for odd p the unit ratio must be a
    square mod p.  Valuations must agree mod 2 in both cases.
    """
    if d1 == 0 or d2 == 0:
        raise ValueError("arguments must be nonzero")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m1, u1 = _padic_split(d1, p)
    m2, u2 = _padic_split(d2, p)
    if (m1 - m2) % 2:
        return False
    if p == 2:
        return u1 % 8 == u2 % 8
    return kronecker(u1 * u2, p) == 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a bytearray sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1:
        return True
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


@dataclass(frozen=True)
class Character:
    """Real Dirichlet character given by a Kronecker label: chi(n) = (label/n).

    All characters used here (chi_28, chi_d, chi_{-28d}, rho_p, (-7/.)) are
    real, so a bare integer label carries the whole character; the modulus is
    tracked for level bookkeeping only.
    """

    label: int
    modulus: int

    def __call__(self, n: int) -> int:
        return kronecker(self.label, n)

    def ratio(self, num: int, den: int) -> int:
        """chi evaluated at the rational num/den.

        Quadratic characters satisfy chi(u/v) = chi(u)*chi(v) whenever the
        reduced fraction is coprime to the modulus, so the value is computed
        on the fraction in lowest terms.
        """
        g = gcd(num, den)
        return self(num // g) * self(den // g)

    def is_odd(self) -> bool:
        return self(-1) == -1


def chi28() -> Character:
    return Character(28, 28)


def chi_twist(d: int) -> Character:
    """Character of Q(sqrt(d)): Kronecker symbol of the fundamental discriminant."""
    D = fundamental_discriminant(d)
    return Character(D, abs(D))


def odd_real_primitive_characters(r: int) -> list[Character]:
    """Primitive real characters mod r with chi(-1) = -1.

    These are exactly the Kronecker symbols (D/.) for fundamental
    discriminants D < 0 with |D| = r.
    """
    D = -r
    if is_fundamental_discriminant(D):
        return [Character(D, r)]
    return []
