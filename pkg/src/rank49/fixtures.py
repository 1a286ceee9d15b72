"""Bundled data: the nine-form basis with its distinguished combinations, the
thirteen decomposition matrices, theta displays and the companion tables.

Form records use the documented interchange format: one record per form with
name, weight tag ("1/2-integral" or an integer k), level, character label,
truncation, and [exponent, numerator, denominator] triples.  Loading and
dumping round-trips bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import NamedTuple

from .qseries import QSeries
from .theta import TernaryForm, validate

HALF_INTEGRAL_TAG = "1/2-integral"


@dataclass(frozen=True)
class FormRecord:
    name: str
    weight: str | int
    level: int
    character: int
    series: QSeries

    def to_dict(self) -> dict:
        triples = [
            [n, c.numerator, c.denominator] for n, c in self.series.items()
        ]
        return {
            "name": self.name,
            "weight": self.weight,
            "level": self.level,
            "character": self.character,
            "trunc": self.series.trunc,
            "coeffs": triples,
        }

    @classmethod
    def from_dict(cls, record: dict) -> "FormRecord":
        series = QSeries(
            {n: Fraction(num, den) for n, num, den in record["coeffs"]},
            record["trunc"],
        )
        return cls(
            name=record["name"],
            weight=record["weight"],
            level=record["level"],
            character=record["character"],
            series=series,
        )


def dump_form_records(records: list[FormRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=1, sort_keys=True) + "\n"


def parse_form_records(text: str) -> list[FormRecord]:
    return [FormRecord.from_dict(r) for r in json.loads(text)]


def _data_text(filename: str) -> str:
    return resources.files("rank49.data").joinpath(filename).read_text()


_forms_cache: dict[str, FormRecord] | None = None
_matrices_cache: dict[str, TernaryForm] | None = None
_decomp_cache: dict[str, list[tuple[str, Fraction]]] | None = None
_tables_cache: dict | None = None


def form_records() -> dict[str, FormRecord]:
    global _forms_cache
    if _forms_cache is None:
        _forms_cache = {r.name: r for r in parse_form_records(_data_text("forms.json"))}
    return _forms_cache


def record(name: str) -> FormRecord:
    try:
        return form_records()[name]
    except KeyError:
        raise KeyError(f"no bundled form named {name!r}") from None


def series(name: str) -> QSeries:
    return record(name).series


def _load_matrices() -> None:
    global _matrices_cache, _decomp_cache
    data = json.loads(_data_text("matrices.json"))
    _matrices_cache = {k: validate(v) for k, v in data["matrices"].items()}
    _decomp_cache = {
        target: [(mname, Fraction(num, den)) for mname, num, den in combo]
        for target, combo in data["decompositions"].items()
    }


def matrices() -> dict[str, TernaryForm]:
    if _matrices_cache is None:
        _load_matrices()
    return _matrices_cache


def matrix(name: str) -> TernaryForm:
    try:
        return matrices()[name]
    except KeyError:
        raise KeyError(f"no bundled matrix named {name!r}") from None


def decomposition(name: str) -> list[tuple[TernaryForm, Fraction]]:
    """Theta decomposition of a target form as (matrix, coefficient) pairs."""
    if _decomp_cache is None:
        _load_matrices()
    try:
        combo = _decomp_cache[name]
    except KeyError:
        raise KeyError(f"no bundled decomposition for {name!r}") from None
    mats = matrices()
    return [(mats[mname], coeff) for mname, coeff in combo]


class CompanionRow(NamedTuple):
    d2: int
    coefficient: int
    l_value: float
    f_index: int


def companion_tables() -> dict[str, dict[int, CompanionRow]]:
    global _tables_cache
    if _tables_cache is None:
        raw = json.loads(_data_text("tables.json"))
        _tables_cache = {
            table: {int(res): CompanionRow(*row) for res, row in rows.items()}
            for table, rows in raw.items()
        }
    return _tables_cache
