"""Search for even positive-definite ternary Gram matrices compatible with a
target level and character kernel, and decompose forms in the resulting theta
span.

The search space (entries bounded, even diagonal, positive definite) is
enumerated completely: for fixed diagonal a <= d <= f, off-diagonal b and an
admissible determinant, the remaining pair (c, e) satisfies a binary
quadratic equation that is solved exactly.  The admissible determinants are
forced by the level: N | L implies det A | L^3, and the required squarefree
kernel of |2A| pins the parity of the prime exponents.  Results are reported
up to coordinate permutations and sign flips, in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .qseries import QSeries, SpanSolution, solve_in_span
from .arith import squarefree_decompose
from .theta import TernaryForm, level_and_character, theta_series, validate


@dataclass(frozen=True)
class SearchConstraints:
    max_entry: int
    level_divides: int = 196
    required_squarefree_kernel: int = 7
    diagonal_only: bool = False
    # The source derivation fixes the exact level (it assumes L is the
    # *smallest* admissible integer); with False any level dividing
    # level_divides is accepted.
    require_full_level: bool = True

    def __post_init__(self):
        if self.max_entry < 2:
            raise ValueError("max_entry must be >= 2")
        if self.max_entry > 500:
            raise ValueError("max_entry above 500 is not supported")
        if self.level_divides % 4:
            raise ValueError("level_divides must be divisible by 4")


def allowed_determinants(level_divides: int, kernel: int) -> list[int]:
    """Determinants possible for a form of level dividing level_divides with
    squarefree part of |2A| equal to kernel: divisors of level^3 with the
    right squarefree residue."""
    cube = level_divides**3
    divisors = set()
    i = 1
    while i * i <= cube:
        if cube % i == 0:
            divisors.add(i)
            divisors.add(cube // i)
        i += 1
    return sorted(d for d in divisors if squarefree_decompose(8 * d)[0] == kernel)


def _search_kernel(max_entry, dets, level):  # pragma: no cover - jitted
    """Complete enumeration with a <= d <= f and b >= 0.

    Emits raw (a, b, c, d, e, f) tuples passing the determinant whitelist and
    the divisibility conditions equivalent to `level(A) | level`; written in
    a numba-compatible subset and also runnable as plain Python.
    """
    half = level // 2
    cap = 1 << 14
    out = np.empty((cap, 6), dtype=np.int64)
    count = 0
    for a in range(2, max_entry + 1, 2):
        for d in range(a, max_entry + 1, 2):
            ad = a * d
            bmax = int(np.sqrt(np.float64(ad - 1)))
            while bmax * bmax > ad - 1:
                bmax -= 1
            while (bmax + 1) * (bmax + 1) <= ad - 1:
                bmax += 1
            if bmax > max_entry:
                bmax = max_entry
            for b in range(0, bmax + 1):
                delta = ad - b * b
                for f in range(d, max_entry + 1, 2):
                    fdelta = f * delta
                    for k in range(len(dets)):
                        det = dets[k]
                        v = fdelta - det
                        if v < 0:
                            break
                        if (half * delta) % det != 0:
                            continue
                        dv = d * v
                        emax = int(np.sqrt(np.float64(dv // delta)))
                        while emax * emax > dv // delta:
                            emax -= 1
                        while (emax + 1) * (emax + 1) <= dv // delta:
                            emax += 1
                        for e in range(-emax, emax + 1):
                            t = dv - delta * e * e
                            s = int(np.sqrt(np.float64(t)))
                            while s * s > t:
                                s -= 1
                            while (s + 1) * (s + 1) <= t:
                                s += 1
                            if s * s != t:
                                continue
                            for branch in range(2):
                                if s == 0 and branch == 1:
                                    continue
                                num = b * e + (s if branch == 0 else -s)
                                if num % d != 0:
                                    continue
                                c = num // d
                                if c > max_entry or c < -max_entry:
                                    continue
                                if a * f - c * c <= 0 or d * f - e * e <= 0:
                                    continue
                                if (half * (d * f - e * e)) % det != 0:
                                    continue
                                if (half * (a * f - c * c)) % det != 0:
                                    continue
                                if (level * (c * e - b * f)) % det != 0:
                                    continue
                                if (level * (b * e - c * d)) % det != 0:
                                    continue
                                if (level * (b * c - a * e)) % det != 0:
                                    continue
                                if count == cap:
                                    cap *= 2
                                    grown = np.empty((cap, 6), dtype=np.int64)
                                    grown[:count] = out[:count]
                                    out = grown
                                out[count, 0] = a
                                out[count, 1] = b
                                out[count, 2] = c
                                out[count, 3] = d
                                out[count, 4] = e
                                out[count, 5] = f
                                count += 1
    return out[:count]


_compiled_kernel = None


def _kernel():
    global _compiled_kernel
    if _compiled_kernel is None:
        try:
            from numba import njit

            _compiled_kernel = njit(cache=True)(_search_kernel)
        except ImportError:  # plain-Python fallback, same algorithm
            _compiled_kernel = _search_kernel
    return _compiled_kernel


# Transform table for the 24 symmetries: permutations x effective sign flips.
_PERMS = list(itertools.permutations(range(3)))
_SIGNS = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
_DIAG_COL = {0: 0, 1: 3, 2: 5}
_OFF_COL = {frozenset((0, 1)): 1, frozenset((0, 2)): 2, frozenset((1, 2)): 4}


def _orbit_variants(arr: np.ndarray) -> np.ndarray:
    """(24, N, 6) array of all symmetric variants of each row of arr."""
    variants = []
    for p in _PERMS:
        for s in _SIGNS:
            cols = np.empty_like(arr)
            cols[:, 0] = arr[:, _DIAG_COL[p[0]]]
            cols[:, 3] = arr[:, _DIAG_COL[p[1]]]
            cols[:, 5] = arr[:, _DIAG_COL[p[2]]]
            cols[:, 1] = s[0] * s[1] * arr[:, _OFF_COL[frozenset((p[0], p[1]))]]
            cols[:, 2] = s[0] * s[2] * arr[:, _OFF_COL[frozenset((p[0], p[2]))]]
            cols[:, 4] = s[1] * s[2] * arr[:, _OFF_COL[frozenset((p[1], p[2]))]]
            variants.append(cols)
    return np.stack(variants)


def _pack(arr: np.ndarray) -> np.ndarray:
    """Pack 6 small entries into one int64 preserving lexicographic order."""
    key = np.zeros(arr.shape[0], dtype=np.int64)
    for col in range(6):
        key = (key << 10) | (arr[:, col] + 512)
    return key


def _unpack(keys: np.ndarray) -> np.ndarray:
    out = np.empty((keys.shape[0], 6), dtype=np.int64)
    for col in range(5, -1, -1):
        out[:, col] = (keys & 1023) - 512
        keys = keys >> 10
    return out


def canonical_tuple(entries: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest (a, b, c, d, e, f) in the orbit under
    coordinate permutations and sign flips."""
    variants = _orbit_variants(np.asarray([entries], dtype=np.int64)).reshape(-1, 6)
    best = variants[np.argmin(_pack(variants))]
    return tuple(int(x) for x in best)


def enumerate_candidates(constraints: SearchConstraints) -> list[TernaryForm]:
    """All qualifying Gram matrices up to permutation/sign symmetry, sorted
    lexicographically on (a, b, c, d, e, f)."""
    dets = allowed_determinants(
        constraints.level_divides, constraints.required_squarefree_kernel
    )
    if not dets:
        return []
    if constraints.diagonal_only:
        raw = [
            (a, 0, 0, d, 0, f)
            for a in range(2, constraints.max_entry + 1, 2)
            for d in range(a, constraints.max_entry + 1, 2)
            for f in range(d, constraints.max_entry + 1, 2)
            if a * d * f in dets
        ]
        arr = np.asarray(raw, dtype=np.int64).reshape(-1, 6)
    else:
        arr = _kernel()(
            constraints.max_entry,
            np.asarray(dets, dtype=np.int64),
            constraints.level_divides,
        )
    if arr.shape[0] == 0:
        return []
    keys = _pack(_orbit_variants(arr).reshape(-1, 6))
    keys = keys.reshape(24, -1).min(axis=0)
    results = []
    for a, b, c, d, e, f in _unpack(np.unique(keys)):
        form = validate([[a, b, c], [b, d, e], [c, e, f]])
        info = level_and_character(form)
        if constraints.level_divides % info.level:
            continue
        if constraints.require_full_level and info.level != constraints.level_divides:
            continue
        if info.character_kernel != constraints.required_squarefree_kernel:
            continue
        results.append(form)
    return results


def decompose_targets(
    targets: Mapping[str, QSeries],
    pool: Sequence[TernaryForm],
    upto: int,
) -> dict[str, SpanSolution | None]:
    """Solve each target in the span of the pool's theta series through
    q^upto; None marks targets outside the span."""
    thetas = [theta_series(form, upto) for form in pool]
    return {
        name: solve_in_span(target, thetas, upto)
        for name, target in targets.items()
    }
