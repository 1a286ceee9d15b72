"""The weight-2 level-49 CM newform: a_p by point counting on
y^2 + xy = x^3 - x^2 - 2x - 1 over F_p, full coefficients by multiplicativity,
quadratic twists and the old form."""

from __future__ import annotations

import threading

from .arith import is_prime, kronecker, primes_up_to, squarefree_decompose
from .qseries import QSeries

# Long Weierstrass coefficients (a1, a2, a3, a4, a6) of the curve.
CURVE = (1, -1, 0, -2, -1)
BAD_PRIME = 7

_ap_cache: dict[int, int] = {}
_an_cache: list[int] = [0, 1]
_lock = threading.RLock()


def _rhs(x: int) -> int:
    return x * x * x - x * x - 2 * x - 1


def ap(p: int) -> int:
    """Trace of Frobenius p + 1 - #E(F_p), by O(p) enumeration of the model.

    For the bad prime 7 (the unique bad prime at level 49) the newform
    coefficient is 0.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in _ap_cache:
        return _ap_cache[p]
    if p == BAD_PRIME:
        value = 0
    elif p == 2:
        affine = sum(
            1
            for x in range(2)
            for y in range(2)
            if (y * y + x * y - _rhs(x)) % 2 == 0
        )
        value = p + 1 - (affine + 1)
    else:
        # y^2 + xy = f(x)  <=>  (2y + x)^2 = 4 f(x) + x^2; count y per x via
        # the quadratic-residue table, so the whole loop is O(p).
        squares = bytearray(p)
        for i in range(p // 2 + 1):
            squares[i * i % p] = 1
        total = 0
        for x in range(p):
            t = (4 * _rhs(x) + x * x) % p
            if t:
                total += 1 if squares[t] else -1
        value = -total
    _ap_cache[p] = value
    return value


def _ap_batch(ps: list[int]) -> None:
    """Vectorised point counting for many primes; same enumeration, same values."""
    import numpy as np

    for p in ps:
        if p in _ap_cache:
            continue
        if p in (2, BAD_PRIME):
            ap(p)
            continue
        x = np.arange(p, dtype=np.int64)
        t = (4 * (x * x % p * x - x * x - 2 * x - 1) + x * x) % p
        squares = np.zeros(p, dtype=bool)
        squares[x * x % p] = True
        s = int(np.count_nonzero(squares[t] & (t != 0))) - int(
            np.count_nonzero(~squares[t])
        )
        _ap_cache[p] = -s


def prime_coefficients(limit: int) -> dict[int, int]:
    """a_p for every prime p <= limit (batch path)."""
    ps = primes_up_to(limit)
    missing = [p for p in ps if p not in _ap_cache]
    if missing:
        with _lock:
            _ap_batch([p for p in missing if p not in _ap_cache])
    return {p: _ap_cache[p] for p in ps}


def an_list(limit: int) -> list[int]:
    """Coefficients a_0..a_limit (a_0 = 0) of the newform.

    a_1 = 1, a_{p^r} = a_p a_{p^(r-1)} - p a_{p^(r-2)} away from 7,
    a_{7^r} = 0, and a_{mn} = a_m a_n for coprime m, n.
    """
    global _an_cache
    if limit < len(_an_cache):
        return _an_cache[: limit + 1]
    with _lock:
        if limit < len(_an_cache):
            return _an_cache[: limit + 1]
        prime_coefficients(limit)
        spf = list(range(limit + 1))
        for i in range(2, int(limit**0.5) + 1):
            if spf[i] == i:
                for j in range(i * i, limit + 1, i):
                    if spf[j] == j:
                        spf[j] = i
        a = [0] * (limit + 1)
        a[1] = 1
        for n in range(2, limit + 1):
            p = spf[n]
            m, q = n, 1
            while m % p == 0:
                m //= p
                q *= p
            if m > 1:
                a[n] = a[q] * a[m]
            elif p == BAD_PRIME:
                a[n] = 0
            elif q == p:
                a[n] = _ap_cache[p]
            else:
                a[n] = _ap_cache[p] * a[n // p] - p * a[n // p // p]
        _an_cache = a
    return _an_cache[: limit + 1]


def coefficients(limit: int) -> QSeries:
    """q-expansion of the newform through q^limit."""
    a = an_list(limit)
    return QSeries({n: v for n, v in enumerate(a) if v}, limit)


def twist(d: int, limit: int) -> QSeries:
    """Coefficientwise twist: coefficient n is a_n * (d/n) (Kronecker symbol)."""
    _, f = squarefree_decompose(d)
    if f != 1:
        raise ValueError(f"{d} is not squarefree")
    a = an_list(limit)
    return QSeries(
        {n: a[n] * kronecker(d, n) for n in range(1, limit + 1) if a[n]}, limit
    )


def old_form(limit: int) -> QSeries:
    """Old form with coefficient a_{2n} at n."""
    a = an_list(2 * limit)
    return QSeries({n: a[2 * n] for n in range(1, limit + 1) if a[2 * n]}, limit)


def two_torsion_check(d: int) -> bool:
    """(7d, 0) lies on y^2 = x^3 - 35 d^2 x - 98 d^3 (torsion generator)."""
    x = 7 * d
    return x**3 - 35 * d * d * x - 98 * d**3 == 0


def twisted_curve_ap(d: int, p: int) -> int:
    """Trace of Frobenius of the twist y^2 = x^3 - 35 d^2 x - 98 d^3 over F_p,
    by direct enumeration (test helper for good odd primes)."""
    if not is_prime(p) or p == 2:
        raise ValueError("odd prime required")
    squares = bytearray(p)
    for i in range(p // 2 + 1):
        squares[i * i % p] = 1
    A = (-35 * d * d) % p
    B = (-98 * d**3) % p
    total = 0
    for x in range(p):
        t = (x * x * x + A * x + B) % p
        if t:
            total += 1 if squares[t] else -1
    return -total
