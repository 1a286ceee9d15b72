from importlib import resources

from rank49 import fixtures


def test_round_trip_is_bit_exact():
    text = resources.files("rank49.data").joinpath("forms.json").read_text()
    records = fixtures.parse_form_records(text)
    assert fixtures.dump_form_records(records) == text


def test_record_fields():
    rec = fixtures.record("h5")
    assert rec.weight == fixtures.HALF_INTEGRAL_TAG
    assert rec.level == 196
    assert rec.character == 28
    assert rec.series.trunc == 42
    rec2 = fixtures.record("F_old")
    assert rec2.weight == 2
    assert rec2.level == 98
    assert rec2.series.trunc == 29


def test_basis_has_staircase_leading_terms():
    for i in range(1, 10):
        s = fixtures.series(f"h{i}")
        assert s.coeff(i) == 1
        assert all(s.coeff(n) == 0 for n in range(1, i))


def test_distinguished_combinations():
    h = fixtures.series
    g1 = h("h1") + h("h8").scale(-2) + h("h9")
    assert g1.agrees_through(h("g1"), 42)
    l1 = h("h4") + h("h8") + h("h9").scale(-2)
    assert l1.agrees_through(h("l1"), 42)
    assert h("f1").agrees_through(h("h5"), 42)
    comb = h("g1") + h("l1").scale(2)
    assert comb.agrees_through(h("h"), 42)


def test_plus_space_fixtures_have_kohnen_support():
    for name in ("g1", "l1", "f1", "h"):
        s = fixtures.series(name)
        assert all(n % 4 in (0, 1) for n in s.support())


def test_matrices_and_decompositions_present():
    mats = fixtures.matrices()
    assert set(mats) == {f"M{i}" for i in range(1, 14)} | {"A1", "A2"}
    for name in ("f1", "f2", "f3", "g1"):
        combo = fixtures.decomposition(name)
        assert len(combo) in (2, 9)


def test_companion_tables_shape():
    tables = fixtures.companion_tables()
    rows = [row for table in tables.values() for row in table.values()]
    assert len(rows) == 16
    assert all(row.l_value > 0 for row in rows)
    assert all(row.coefficient != 0 for row in rows)
    assert all(row.f_index in (1, 2, 3) for row in rows)
    # table coefficients agree with the bundled series where they overlap
    for row in rows:
        if row.d2 <= 42:
            assert fixtures.series(f"f{row.f_index}").coeff(row.d2) == row.coefficient


def test_unknown_names_raise():
    import pytest

    with pytest.raises(KeyError):
        fixtures.record("h10")
    with pytest.raises(KeyError):
        fixtures.matrix("M14")
    with pytest.raises(KeyError):
        fixtures.decomposition("h1")
