"""JSON series and module files.

A series file is a JSON object::

    {"numerator": [[0, "1"], [1, "-1/2"]], "pole_order": 2}

Each numerator entry is ``[exponent, coefficient]`` with an integer exponent
and the coefficient as a string ``"p"`` or ``"p/q"`` (plain JSON integers are
accepted too). Module files add ``"dim"`` (must equal the canonical pole
order) and ``"cm"`` (the Cohen-Macaulay declaration, default false).
The JSON Schema ships as ``segre_series/series.schema.json``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .cm import GradedCMModule
from .laurent import LaurentPoly, format_coefficient
from .series import RationalGF

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")

SERIES_KEYS = {"numerator", "pole_order", "dim", "cm"}


class ParseError(ValueError):
    """Malformed series, module or coefficient input."""


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {value!r}") from None
    raise ParseError(f"not an exact rational: {value!r}")


def _parse_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def raw_series_from_obj(obj: Any) -> RationalGF:
    """Parse a decoded series object without canceling ``1 - t`` factors."""
    if not isinstance(obj, dict):
        raise ParseError("series must be a JSON object")
    unknown = set(obj) - SERIES_KEYS
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    if "numerator" not in obj or "pole_order" not in obj:
        raise ParseError("series needs 'numerator' and 'pole_order'")
    entries = obj["numerator"]
    if not isinstance(entries, list):
        raise ParseError("'numerator' must be a list of [exponent, coefficient] pairs")
    terms: dict[int, Fraction] = {}
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"numerator entry must be [exponent, coefficient], got {entry!r}")
        e = _parse_int(entry[0], "exponent")
        c = parse_rational(entry[1])
        if e in terms:
            raise ParseError(f"duplicate exponent {e}")
        if c == 0:
            raise ParseError(f"zero coefficient at exponent {e}")
        terms[e] = c
    d = _parse_int(obj["pole_order"], "pole_order")
    if d < 0:
        raise ParseError(f"pole_order must be >= 0, got {d}")
    return RationalGF(LaurentPoly(terms), d)


def series_from_obj(obj: Any) -> tuple[RationalGF, dict]:
    """Parse a decoded series object; returns the canonical series and the extra fields."""
    series = raw_series_from_obj(obj).canonical()
    extra = {}
    if "dim" in obj:
        dim = _parse_int(obj["dim"], "dim")
        if dim != series.pole_order:
            raise ParseError(
                f"dim {dim} differs from the pole order {series.pole_order} after normalization")
        extra["dim"] = dim
    if "cm" in obj:
        if not isinstance(obj["cm"], bool):
            raise ParseError("'cm' must be true or false")
        extra["cm"] = obj["cm"]
    return series, extra


def series_to_obj(a: RationalGF) -> dict:
    return {
        "numerator": [[e, format_coefficient(c)] for e, c in a.numerator.items()],
        "pole_order": a.pole_order,
    }


def module_from_obj(obj: Any) -> GradedCMModule:
    series, extra = series_from_obj(obj)
    if series.is_zero():
        raise ParseError("a module needs a nonzero Hilbert series")
    return GradedCMModule(series, extra.get("dim"), extra.get("cm", False))


def module_to_obj(m: GradedCMModule) -> dict:
    obj = series_to_obj(m.hilbert)
    obj["dim"] = m.dim
    obj["cm"] = m.cm_declared
    return obj


def _load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _reject_float(text: str):
    raise ParseError(f"floating-point literal {text} is not allowed; use a string like \"3/2\"")


def load_raw_series(path: str | Path) -> RationalGF:
    return raw_series_from_obj(_load_json(path))


def load_series(path: str | Path) -> RationalGF:
    return series_from_obj(_load_json(path))[0]


def load_module(path: str | Path) -> GradedCMModule:
    return module_from_obj(_load_json(path))


def load_coefficients(path: str | Path) -> list[Fraction]:
    """A coefficient window: a JSON array of rationals."""
    obj = _load_json(path)
    if not isinstance(obj, list) or not obj:
        raise ParseError("coefficient file must be a nonempty JSON array")
    return [parse_rational(v) for v in obj]


def dump_series(a: RationalGF, path: str | Path) -> None:
    Path(path).write_text(json.dumps(series_to_obj(a)) + "\n")
