"""Coalgebra descriptors: built-in names and the JSON file format.

File format (all indices 0-based, coefficients as exact "p/q" or "p" strings)::

    {
      "name": "k[Z/2]",
      "basis": ["g0", "g1"],
      "delta": [{"on": 0, "terms": [{"left": 0, "right": 0, "coeff": "1"}]},
                {"on": 1, "terms": [{"left": 1, "right": 1, "coeff": "1"}]}],
      "counit": [{"on": 0, "coeff": "1"}, {"on": 1, "coeff": "1"}]
    }

Files are parsed without checking the axioms, so broken input can still be
inspected with ``check``.
"""

from __future__ import annotations

import json
import os
import re

from .coalgebra import Coalgebra, group_coalgebra, matrix_coalgebra, matrix_over, trivial_coalgebra
from .linalg import format_rational, parse_rational


class CoalgebraFormatError(ValueError):
    """Malformed coalgebra file; the message names the offending field."""


class UnknownCoalgebraError(ValueError):
    pass


def _int_field(obj, key, where, dim=None):
    if not isinstance(obj, dict) or key not in obj:
        raise CoalgebraFormatError(f"{where}: missing field '{key}'")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise CoalgebraFormatError(f"{where}.{key}: expected an integer index, got {v!r}")
    if dim is not None and not 0 <= v < dim:
        raise CoalgebraFormatError(f"{where}.{key}: index {v} out of range 0..{dim - 1}")
    return v


def _coeff_field(obj, where):
    if "coeff" not in obj:
        raise CoalgebraFormatError(f"{where}: missing field 'coeff'")
    v = obj["coeff"]
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise CoalgebraFormatError(f"{where}.coeff: expected a 'p/q' string, got {v!r}")
    try:
        return parse_rational(v)
    except ValueError as exc:
        raise CoalgebraFormatError(f"{where}.coeff: {exc}") from None


def coalgebra_from_dict(doc, source: str = "<input>") -> Coalgebra:
    if not isinstance(doc, dict):
        raise CoalgebraFormatError(f"{source}: top level must be an object")
    basis = doc.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis) or not basis:
        raise CoalgebraFormatError(f"{source}: field 'basis' must be a non-empty list of strings")
    dim = len(basis)
    name = doc.get("name", os.path.basename(source))
    if not isinstance(name, str):
        raise CoalgebraFormatError(f"{source}: field 'name' must be a string")
    if not isinstance(doc.get("delta"), list):
        raise CoalgebraFormatError(f"{source}: field 'delta' must be a list")
    delta: dict = {}
    for i, entry in enumerate(doc["delta"]):
        where = f"{source}: delta[{i}]"
        on = _int_field(entry, "on", where, dim)
        terms = entry.get("terms")
        if not isinstance(terms, list):
            raise CoalgebraFormatError(f"{where}.terms: expected a list")
        for j, t in enumerate(terms):
            tw = f"{where}.terms[{j}]"
            left = _int_field(t, "left", tw, dim)
            right = _int_field(t, "right", tw, dim)
            delta.setdefault(on, []).append((left, right, _coeff_field(t, tw)))
    counit = None
    if doc.get("counit") is not None:
        if not isinstance(doc["counit"], list):
            raise CoalgebraFormatError(f"{source}: field 'counit' must be a list")
        counit = {}
        for i, entry in enumerate(doc["counit"]):
            where = f"{source}: counit[{i}]"
            on = _int_field(entry, "on", where, dim)
            counit[on] = counit.get(on, 0) + _coeff_field(entry, where)
    return Coalgebra.create(basis, delta, counit, name=name, check=False)


def load_coalgebra_file(path: str) -> Coalgebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoalgebraFormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return coalgebra_from_dict(doc, path)


def coalgebra_to_dict(C: Coalgebra) -> dict:
    doc = {
        "name": C.name,
        "basis": list(C.basis_names),
        "delta": [
            {"on": i, "terms": [{"left": l, "right": r, "coeff": format_rational(c)} for l, r, c in terms]}
            for i, terms in enumerate(C.delta) if terms
        ],
    }
    if C.counit is not None:
        doc["counit"] = [{"on": i, "coeff": format_rational(c)} for i, c in sorted(C.counit.items())]
    return doc


_BUILTIN = re.compile(r"^(trivial|group:(\d+)|matrix:(\d+)(?::(.+))?)$")


def resolve(spec: str) -> Coalgebra:
    """A built-in name (trivial, group:<n>, matrix:<n>, matrix:<n>:<spec>) or a file path."""
    m = _BUILTIN.match(spec)
    if m:
        if spec == "trivial":
            return trivial_coalgebra()
        if m.group(2) is not None:
            n = int(m.group(2))
            if n < 1:
                raise UnknownCoalgebraError("group order must be at least 1")
            return group_coalgebra(n)
        n = int(m.group(3))
        if n < 1:
            raise UnknownCoalgebraError("matrix size must be at least 1")
        if m.group(4) is None:
            return matrix_coalgebra(n)
        inner = resolve(m.group(4))
        if not inner.counital:
            raise UnknownCoalgebraError(f"{m.group(4)}: matrix coalgebras need a counital inner coalgebra")
        return matrix_over(n, inner)
    if os.path.isfile(spec):
        return load_coalgebra_file(spec)
    raise UnknownCoalgebraError(
        f"unknown coalgebra {spec!r}: expected trivial, group:<n>, matrix:<n>, matrix:<n>:<spec> or a file")
