"""Reproduction suite: every identity, table and cross-check behind the rank
criterion, runnable as named checks grouped into suites.

Suites: "theta" (Sturm bounds, theta decompositions, the matrix search),
"ueda" (Kohnen projection, the unary theta subspace, Hecke eigenvalues),
"shimura" (lift identities against point counting), "lfun" (CM coefficient
facts, central values, the Waldspurger ratio, Euler factors) and "criterion"
(count equality against L-value vanishing at desk scale).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import cmform, criterion, fixtures, halfint, latticesearch, lfun, theta
from .arith import chi28, is_squarefree, kronecker
from .qseries import QSeries, solve_in_span


@dataclass(frozen=True)
class CheckResult:
    label: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: list[CheckResult]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check(label: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(label, bool(passed), detail)


# ----------------------------------------------------------------- theta ---


def _theta_checks() -> Iterable[CheckResult]:
    bound = halfint.sturm_bound(Fraction(3, 2), 196, "half-integral")
    yield _check(
        "sturm_bound_halfintegral_level196",
        bound == 42,
        f"sturm_bound(3/2, 196) = {bound}, expected 42",
    )
    index = halfint.index_gamma0(196)
    yield _check(
        "index_gamma0_196", index == 336, f"[SL2(Z):Gamma0(196)] = {index}"
    )

    for name in ("f1", "f2", "f3", "g1"):
        acc = QSeries.zero(42)
        terms = []
        for mat, coeff in fixtures.decomposition(name):
            acc = acc + theta.theta_series(mat, 42).scale(coeff)
            terms.append(str(coeff))
        ok = acc.agrees_through(fixtures.series(name), 42)
        yield _check(
            f"theta_decomposition_{name}",
            ok,
            f"{name} = combination of {len(terms)} theta series through q^42",
        )

    all_ok = True
    for i in range(1, 14):
        info = theta.level_and_character(fixtures.matrix(f"M{i}"))
        if 196 % info.level or info.character_kernel != 7:
            all_ok = False
    yield _check(
        "matrix_levels_divide_196_kernel_7",
        all_ok,
        "levels of M1..M13 divide 196 with squarefree kernel 7",
    )

    diag = latticesearch.enumerate_candidates(
        latticesearch.SearchConstraints(max_entry=98, diagonal_only=True)
    )
    diag_tuples = sorted(f.entries for f in diag)
    expected = [
        (2, 0, 0, 14, 0, 98),
        (14, 0, 0, 98, 0, 98),
    ]
    yield _check(
        "appendix_diagonal_search_two_matrices",
        diag_tuples == expected,
        f"diagonal search found {diag_tuples}",
    )
    a1 = theta.theta_series(fixtures.matrix("A1"), 42)
    a2 = theta.theta_series(fixtures.matrix("A2"), 42)
    yield _check(
        "appendix_theta_A1_A2_displays",
        a1.agrees_through(fixtures.series("theta_A1"), 42)
        and a2.agrees_through(fixtures.series("theta_A2"), 42),
        "theta(A1) = 1 + 2q^7 + 2q^28 and the displayed theta(A2)",
    )

    found = latticesearch.enumerate_candidates(
        latticesearch.SearchConstraints(max_entry=98)
    )
    canon = {latticesearch.canonical_tuple(f.entries) for f in found}
    m4 = latticesearch.canonical_tuple(fixtures.matrix("M4").entries)
    m7 = latticesearch.canonical_tuple(fixtures.matrix("M7").entries)
    yield _check(
        "appendix_general_search_contains_M4_M7",
        m4 in canon and m7 in canon,
        f"search at max_entry 98 found {len(found)} forms, M4 and M7 included",
    )


# ------------------------------------------------------------------ ueda ---


def _fixture_basis() -> list[halfint.HalfIntegralForm]:
    return [
        halfint.HalfIntegralForm(
            fixtures.series(f"h{i}"), 3, 196, chi28()
        )
        for i in range(1, 10)
    ]


def _ueda_checks() -> Iterable[CheckResult]:
    plus = halfint.kohnen_project(_fixture_basis(), epsilon=-1)
    yield _check(
        "kohnen_projection_dimension_3",
        len(plus) == 3,
        f"plus space dimension {len(plus)}",
    )
    expected = [fixtures.series(n) for n in ("g1", "l1", "f1")]
    spans = all(
        solve_in_span(s, [f.series for f in plus], 42) is not None for s in expected
    )
    matches = len(plus) == 3 and all(
        plus[i].series.agrees_through(expected[i], 42) for i in range(3)
    )
    yield _check(
        "kohnen_projection_spans_g1_l1_f1",
        spans and matches,
        "reduced basis is exactly g1 = h1-2h8+h9, l1 = h4+h8-2h9, f1 = h5",
    )

    omega = halfint.omega_set(49, chi28())
    yield _check(
        "omega_set_level196_chi28",
        omega == [(-7, 1)],
        f"omega(4*49, chi28) = {omega}, expected [(-7, 1)]",
    )

    h = halfint.unary_theta(-7, 1, 42)
    h_fix = fixtures.series("h")
    comb = fixtures.series("g1") + fixtures.series("l1").scale(2)
    yield _check(
        "unary_theta_matches_h_display",
        h.series.agrees_through(h_fix, 42),
        "sum phi(m) m q^(m^2) = q + 2q^4 - 3q^9 + 4q^16 - 5q^25 - 6q^36",
    )
    yield _check(
        "h_equals_g1_plus_2l1",
        h.series.agrees_through(comb, 42),
        "unary theta equals g1 + 2*l1 through q^42",
    )

    t9_h = halfint.hecke_Tp2(h, 3)
    minus4 = h.series.truncate(4).scale(-4)
    yield _check(
        "hecke_T9_eigenvalue_h_is_minus4",
        t9_h.series.agrees_through(minus4, 4),
        "T(9) h = -4 h through q^4",
    )
    g1f = halfint.HalfIntegralForm(fixtures.series("g1"), 3, 196, chi28())
    f1f = halfint.HalfIntegralForm(fixtures.series("f1"), 3, 196, chi28())
    zero4 = QSeries.zero(4)
    yield _check(
        "hecke_T9_eigenvalue_g1_f1_is_0",
        halfint.hecke_Tp2(g1f, 3).series.agrees_through(zero4, 4)
        and halfint.hecke_Tp2(f1f, 3).series.agrees_through(zero4, 4),
        "T(9) kills g1 and f1 through q^4",
    )
    split = solve_in_span(h_fix, [fixtures.series("g1"), fixtures.series("f1")], 42)
    yield _check(
        "eigenspaces_independent",
        split is None,
        "h is not in the span of g1 and f1 (eigenvalues -4 vs 0)",
    )

    ok = True
    details = []
    for p in (3, 5, 11, 13):
        a_p = cmform.ap(p)
        for name in ("f1", "f2", "f3"):
            f = halfint.extend_fixture(name, 1000)
            image = halfint.hecke_Tp2(f, p)
            scaled = f.series.truncate(image.series.trunc).scale(a_p)
            if not image.series.agrees_through(scaled, image.series.trunc):
                ok = False
            details.append(f"T({p}^2){name}={a_p}*{name}")
    yield _check(
        "hecke_Tp2_eigenvalues_match_ap",
        ok,
        "; ".join(details[:4]) + " ... (p in {3,5,11,13}, through q^1000)",
    )


# --------------------------------------------------------------- shimura ---


def _shimura_checks() -> Iterable[CheckResult]:
    F = cmform.coefficients(29)
    F_old = cmform.old_form(29)
    yield _check(
        "old_form_matches_fixture",
        F_old.agrees_through(fixtures.series("F_old"), 29),
        "a_{2n} series equals the bundled old-form expansion",
    )

    g1 = halfint.extend_fixture("g1", 841)
    sh1_g1 = halfint.shimura_lift(g1, 1, 29)
    yield _check(
        "shimura_sh1_g1_display",
        sh1_g1.agrees_through(fixtures.series("sh1_g1"), 29),
        "Sh_1(g1) = q - 2q^4 - 2q^8 - 3q^9 + 4q^11 + ... through q^29",
    )
    half_sum = (F + F_old).scale(Fraction(1, 2))
    yield _check(
        "shimura_sh1_g1_is_half_F_plus_Fold",
        sh1_g1.agrees_through(half_sum, 29),
        "Sh_1(g1) = (F + F_old)/2",
    )

    f1 = halfint.extend_fixture("f1", 2523)
    sh3_f1 = halfint.shimura_lift(f1, 3, 29)
    yield _check(
        "shimura_sh3_f1_display",
        sh3_f1.agrees_through(fixtures.series("sh3_f1"), 29),
        "Sh_3(f1) = -2q^2 - 2q^4 + 2q^8 + 6q^16 + 6q^18 - 8q^22 through q^29",
    )
    yield _check(
        "shimura_sh3_f1_is_Fold_minus_F",
        sh3_f1.agrees_through(F_old - F, 29),
        "Sh_3(f1) = F_old - F",
    )

    f2 = halfint.extend_fixture("f2", 2523)
    f3 = halfint.extend_fixture("f3", 2523)
    yield _check(
        "shimura_sh1_f2_is_Fold",
        halfint.shimura_lift(f2, 1, 29).agrees_through(F_old, 29),
        "Sh_1(f2) = F_old",
    )
    two_f_minus_old = F.scale(2) - F_old
    yield _check(
        "shimura_sh3_f3_is_2F_minus_Fold",
        halfint.shimura_lift(f3, 3, 29).agrees_through(two_f_minus_old, 29),
        "Sh_3(f3) = 2F - F_old",
    )
    zero = QSeries.zero(29)
    kernels = (
        halfint.shimura_lift(f1, 1, 29).agrees_through(zero, 29)
        and halfint.shimura_lift(f2, 3, 29).agrees_through(zero, 29)
        and halfint.shimura_lift(f3, 1, 29).agrees_through(zero, 29)
    )
    yield _check(
        "shimura_kernel_identities",
        kernels,
        "Sh_1(f1) = Sh_3(f2) = Sh_1(f3) = 0",
    )


# ------------------------------------------------------------------ lfun ---

WALDSPURGER_PAIRS = [
    (15, 71, 2),
    (5, 13, 1),
    (1, 57, 2),
    (29, 37, 2),
    (3, 59, 3),
    (17, 41, 1),
]


def _lfun_checks() -> Iterable[CheckResult]:
    small = {2: 1, 3: 0, 7: 0, 11: 4}
    got = {p: cmform.ap(p) for p in small}
    yield _check(
        "cm_ap_small_values", got == small, f"a_p spot values {got}"
    )

    aps = cmform.prime_coefficients(10**4)
    hasse = all(a * a <= 4 * p for p, a in aps.items() if p != 7)
    yield _check(
        "cm_hasse_bound_to_1e4",
        hasse,
        f"|a_p| <= 2 sqrt(p) for all {len(aps)} primes p <= 10^4",
    )
    cm_vanish = all(
        (a == 0) == (kronecker(-7, p) == -1)
        for p, a in aps.items()
        if p != 7 and p >= 5
    )
    yield _check(
        "cm_vanishing_iff_minus7_nonresidue",
        cm_vanish,
        "a_p = 0 iff (-7/p) = -1 for primes 5 <= p <= 10^4",
    )

    r = lfun.l_value(1, 1e-5)
    yield _check(
        "lvalue_untwisted",
        abs(r.value - 0.9666558528) < 1e-4,
        f"L(F_1, 1) = {r.value:.10f} using {r.terms_used} terms "
        f"(tail {r.tail_bound:.1e})",
    )

    table_ok = True
    rows = []
    for table in fixtures.companion_tables().values():
        for row in table.values():
            got_val = lfun.l_value(row.d2, 1e-5).value
            rows.append(f"L(F_{row.d2})={got_val:.4f}~{row.l_value}")
            if abs(got_val - row.l_value) > 5e-3:
                table_ok = False
    yield _check(
        "lvalue_companion_tables",
        table_ok,
        f"{len(rows)} table values within 5e-3 of the printed roundings",
    )

    neg = lfun.l_value(-3, 1e-4)
    yield _check(
        "lvalue_negative_d_declared_zero",
        neg.declared_zero and neg.value == 0.0 and neg.sign == -1,
        "d < 0 has functional-equation sign -1, central value 0",
    )

    euler_ok = all(
        lfun.euler_factor_identity(p, 400) for p in (2, 3, 5, 7, 11, 13, 17, 19)
    )
    yield _check(
        "euler_factor_identity_p_to_20",
        euler_ok,
        "square-twist Euler identity exact for p <= 20, coefficients to 400",
    )

    wald_ok = True
    residuals = []
    for d1, d2, idx in WALDSPURGER_PAIRS:
        res = lfun.waldspurger_ratio_residual(d1, d2, idx, 1e-3)
        residuals.append(f"({d1},{d2},f{idx}): {res:.1e}")
        if res > 1e-2:
            wald_ok = False
    yield _check(
        "waldspurger_ratio_pairs",
        wald_ok,
        "; ".join(residuals),
    )


# ------------------------------------------------------------- criterion ---


def _criterion_checks() -> Iterable[CheckResult]:
    mismatches = []
    tested = 0
    for d in range(1, 201):
        if not is_squarefree(d) or d % 7 == 0:
            continue
        tested += 1
        report = criterion.predict(d)
        r = lfun.l_value(d, 1e-4)
        l_zero = abs(r.value) < 1e-3 and r.tail_bound < 1e-4
        if report.predicted_positive_rank != l_zero:
            mismatches.append((d, report.counts, r.value))
    yield _check(
        "criterion_matches_lvalue_to_200",
        not mismatches,
        f"count equality vs |L| < 1e-3 agrees for all {tested} squarefree "
        f"d <= 200 coprime to 7" + (f"; MISMATCHES {mismatches}" if mismatches else ""),
    )

    m1 = fixtures.matrix("M1")
    lit = criterion.case_forms("iii")[0]
    same = all(
        theta.representation_count(lit, n) == theta.representation_count(m1, n)
        for n in range(0, 60)
    )
    yield _check(
        "case_iii_form_matches_M1",
        same,
        "case (iii) first form and M1 have identical counts through 60",
    )


SUITES: dict[str, Callable[[], Iterable[CheckResult]]] = {
    "theta": _theta_checks,
    "ueda": _ueda_checks,
    "shimura": _shimura_checks,
    "lfun": _lfun_checks,
    "criterion": _criterion_checks,
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    start = time.perf_counter()
    checks = list(SUITES[name]())
    return SuiteResult(name, checks, time.perf_counter() - start)


def run_all() -> list[SuiteResult]:
    return [run_suite(name) for name in SUITES]
