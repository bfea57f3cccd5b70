"""JSON interchange: exact rationals as "num/den" strings, no float loss.

File schemas:
  message  {"k": int, "coeffs": [[str x m], ...]}      index = power of x
  codeword {"n": int, "symbols": [[str x m], ...]}     one entry per position
  report   {"config": {...}, "per_tau": [...], "solver_agreement": float}
"""

from __future__ import annotations

import json

from gmpy2 import mpq

from .field import FieldElement, FieldTower
from .skew import SkewPoly


def q_to_str(q) -> str:
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


def str_to_q(s: str):
    return mpq(s)


def element_to_json(e: FieldElement) -> list[str]:
    return [q_to_str(c) for c in e.coords]


def element_from_json(tower: FieldTower, arr) -> FieldElement:
    return tower.element([str_to_q(s) for s in arr])


def tower_to_json(tower: FieldTower) -> dict:
    return {"p": tower.p, "g": tower.g}


def poly_to_json(f: SkewPoly) -> list[list[str]]:
    return [element_to_json(c) for c in f.coeffs]


def poly_from_json(tower: FieldTower, arr) -> SkewPoly:
    return SkewPoly(tower, [element_from_json(tower, c) for c in arr])


def message_to_json(k: int, f: SkewPoly) -> dict:
    return {"k": k, "coeffs": poly_to_json(f)}


def message_from_json(tower: FieldTower, obj) -> tuple[int, SkewPoly]:
    return int(obj["k"]), poly_from_json(tower, obj["coeffs"])


def vector_to_json(v) -> dict:
    return {"n": len(v), "symbols": [element_to_json(e) for e in v]}


def vector_from_json(tower: FieldTower, obj) -> list[FieldElement]:
    v = [element_from_json(tower, s) for s in obj["symbols"]]
    if len(v) != int(obj["n"]):
        raise ValueError("symbol count does not match declared n")
    return v


def dump(obj: dict, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


# Published schema for simulation reports (jsonschema draft 2020-12 subset).
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["config", "per_tau", "solver_agreement"],
    "properties": {
        "config": {
            "type": "object",
            "required": ["p", "g", "n", "k", "taus", "trials", "seed", "solver"],
            "properties": {
                "p": {"type": "integer"},
                "g": {"type": "integer"},
                "n": {"type": "integer"},
                "k": {"type": "integer"},
                "taus": {"type": "array", "items": {"type": "integer"}},
                "trials": {"type": "integer"},
                "seed": {"type": "integer"},
                "solver": {"enum": ["popov", "eea", "both"]},
            },
        },
        "per_tau": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tau", "successes", "trials", "mean_ops",
                             "max_coeff_bits"],
                "properties": {
                    "tau": {"type": "integer"},
                    "successes": {"type": "integer"},
                    "trials": {"type": "integer"},
                    "mean_ops": {"type": "number"},
                    "max_coeff_bits": {"type": "integer"},
                },
            },
        },
        "solver_agreement": {"type": "number"},
    },
}
