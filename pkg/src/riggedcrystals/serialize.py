"""JSON wire formats for the five object kinds, plus canonical dumps."""

import json

from .errors import InvalidExponentsError, MalformedInputError
from .forward import ForwardExponents, validate_forward
from .rc import rc_from_json, rc_to_json
from .reverse import ReverseExponents, validate_reverse
from .tableaux import tableau_from_json, tableau_to_json


def canonical_dumps(obj) -> str:
    """Deterministic serialization used for hashing and set ordering."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def x_to_json(x: ForwardExponents) -> dict:
    return {"n": x.n, "x": [list(col) for col in x.cols]}


def x_from_json(obj: dict) -> ForwardExponents:
    try:
        n = int(obj["n"])
        cols = obj["x"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad forward triangle object: {exc}") from exc
    try:
        return validate_forward(cols, n)
    except InvalidExponentsError as exc:
        raise MalformedInputError(str(exc)) from exc


def psi_to_json(psi: ReverseExponents) -> dict:
    return {"n": psi.n, "psi": [list(col) for col in psi.cols]}


def psi_from_json(obj: dict) -> ReverseExponents:
    try:
        n = int(obj["n"])
        cols = obj["psi"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad reverse triangle object: {exc}") from exc
    try:
        return validate_reverse(cols, n)
    except InvalidExponentsError as exc:
        raise MalformedInputError(str(exc)) from exc


def weight_from_json(obj: dict):
    try:
        n = int(obj["n"])
        lam = tuple(int(v) for v in obj["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad weight object: {exc}") from exc
    if n < 1 or len(lam) != n or any(v < 0 for v in lam):
        raise MalformedInputError("weight needs n >= 1 non-negative values")
    return n, lam


def weight_to_json(n: int, lam) -> dict:
    return {"n": n, "lambda": list(lam)}


__all__ = [
    "canonical_dumps",
    "rc_to_json", "rc_from_json",
    "x_to_json", "x_from_json",
    "psi_to_json", "psi_from_json",
    "tableau_to_json", "tableau_from_json",
    "weight_to_json", "weight_from_json",
]
