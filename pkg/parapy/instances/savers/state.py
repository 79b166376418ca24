"""StateFile: exact JSON encoding of a State (rationals as "num/den" strings, never floats)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List

from parapy.framework.errors import StateFileError
from parapy.framework.fock import BasisKet, ModelParams, OrbitalMonomial, SpinState, State
from parapy.framework.saver import write_atomic
from parapy.framework.scalar import Scalar

FORMAT_VERSION = "1"
COEFFICIENT_KEYS = ("re", "im", "re_s2", "im_s2")


def _ket_to_dict(ket: BasisKet, params: ModelParams) -> Dict[str, Any]:
    odd = list(ket.orb.odd) if params.eps else [0] * params.n
    return {"orb": {"plus": [list(row) for row in ket.orb.plus],
                    "minus": [list(row) for row in ket.orb.minus],
                    "odd": odd},
            "spin": list(ket.spin.signs)}


def state_to_dict(v: State) -> Dict[str, Any]:
    params = v.params
    terms = []
    for ket, coefficient in v.sorted_items():
        term = _ket_to_dict(ket, params)
        term["coef"] = dict(zip(COEFFICIENT_KEYS, coefficient.to_strings()))
        terms.append(term)
    return {"header": {"format_version": FORMAT_VERSION, "n": params.n, "p": params.p}, "terms": terms}


def _int_matrix(value: Any, rows: int, columns: int, name: str) -> List[List[int]]:
    if not isinstance(value, list) or len(value) != rows:
        raise StateFileError(f"[StateFile] '{name}' must have {rows} rows")
    for row in value:
        if not isinstance(row, list) or len(row) != columns or \
                any(not isinstance(entry, int) or entry < 0 for entry in row):
            raise StateFileError(f"[StateFile] '{name}' rows must hold {columns} nonnegative integers")
    return value


def _ket_from_dict(term: Dict[str, Any], params: ModelParams) -> BasisKet:
    orb = term.get("orb")
    if not isinstance(orb, dict):
        raise StateFileError("[StateFile] Every term needs an 'orb' object")
    plus = _int_matrix(orb.get("plus"), params.n, params.q, "plus")
    minus = _int_matrix(orb.get("minus"), params.n, params.q, "minus")
    odd = _int_matrix([orb.get("odd")], 1, params.n, "odd")[0]
    if not params.eps and any(odd):
        raise StateFileError(f"[StateFile] Odd modes are only present for odd p, got p={params.p}")
    spin = term.get("spin")
    if not isinstance(spin, list) or len(spin) != params.q or any(sign not in (1, -1) for sign in spin):
        raise StateFileError(f"[StateFile] 'spin' must list {params.q} entries of +1 / -1")
    monomial = OrbitalMonomial(plus=tuple(map(tuple, plus)), minus=tuple(map(tuple, minus)),
                               odd=tuple(odd) if params.eps else ())
    return BasisKet(monomial, SpinState(signs=tuple(spin)))


def state_from_dict(data: Dict[str, Any]) -> State:
    if not isinstance(data, dict) or not isinstance(data.get("header"), dict):
        raise StateFileError("[StateFile] Missing header")
    header = data["header"]
    if header.get("format_version") != FORMAT_VERSION:
        raise StateFileError(f"[StateFile] Unsupported format_version '{header.get('format_version')}'")
    try:
        params = ModelParams(n=header.get("n"), p=header.get("p"))
    except ValueError as error:
        raise StateFileError(f"[StateFile] {error}") from error
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise StateFileError("[StateFile] 'terms' must be a list")
    parsed = []
    for term in terms:
        if not isinstance(term, dict):
            raise StateFileError("[StateFile] Every term must be an object")
        coef = term.get("coef")
        if not isinstance(coef, dict) or any(not isinstance(coef.get(key), str) for key in COEFFICIENT_KEYS):
            raise StateFileError(f"[StateFile] 'coef' needs string entries {COEFFICIENT_KEYS}")
        try:
            coefficient = Scalar.from_strings(*(coef[key] for key in COEFFICIENT_KEYS))
        except (ValueError, ZeroDivisionError) as error:
            raise StateFileError(f"[StateFile] Bad coefficient {coef}: {error}") from error
        parsed.append((_ket_from_dict(term, params), coefficient))
    return State.from_terms(params, parsed)


def dumps_state(v: State) -> str:
    return json.dumps(state_to_dict(v), indent=2) + "\n"


def loads_state(text: str) -> State:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise StateFileError(f"[StateFile] Not valid JSON: {error}") from error
    return state_from_dict(data)


def save_state(v: State, path: str) -> None:
    write_atomic(path, dumps_state(v))


def load_state(path: str) -> State:
    return loads_state(Path(path).read_text(encoding="utf-8"))


@dataclass
class StateFile:
    """A State bound to the file it was read from or will be written to."""
    path: str

    def save(self, v: State) -> None:
        save_state(v, self.path)

    def load(self) -> State:
        return load_state(self.path)
