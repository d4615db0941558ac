"""Reading the documented JSON inputs with locations in error messages."""
from __future__ import annotations

import json
from pathlib import Path

from .lie import LieAlgebra, LieError
from .linalg import Matrix


class InputError(ValueError):
    """Malformed input file; the message carries file and location."""


def load_json(path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror or exc})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _at(path, where, exc):
    return InputError(f"{path}: at {where}: {exc}")


def matrix_from_obj(obj, path="<input>", where="$"):
    try:
        return Matrix.from_json(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise _at(path, where, exc) from None


def read_matrix(path) -> Matrix:
    obj = load_json(path)
    if isinstance(obj, dict) and "matrix" in obj:
        return matrix_from_obj(obj["matrix"], path, "$.matrix")
    return matrix_from_obj(obj, path)


def read_generators(path):
    """{"n": 4, "generators": [matrix, ...]} -> (list of Matrix, n)."""
    obj = load_json(path)
    if not isinstance(obj, dict) or not isinstance(obj.get("generators"), list):
        raise InputError(f"{path}: at $: expected an object with a 'generators' list")
    mats = [matrix_from_obj(m, path, f"$.generators[{k}]") for k, m in enumerate(obj["generators"])]
    if not mats:
        raise InputError(f"{path}: at $.generators: empty list")
    n = obj.get("n", mats[0].rows)
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"{path}: at $.n: must be an integer")
    for k, m in enumerate(mats):
        if m.shape != (n, n):
            raise InputError(f"{path}: at $.generators[{k}]: shape {m.shape}, expected {n}x{n}")
    return mats, n


def algebra_from_obj(obj, path="<input>"):
    try:
        return LieAlgebra.from_json(obj)
    except LieError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise _at(path, "$", exc) from None


def read_algebra(path):
    """Lie algebra JSON, optionally with "generators" (the matrices B of a
    split form B ⋉ K^n, listed in the same order as the first basis vectors)."""
    obj = load_json(path)
    g = algebra_from_obj(obj, path)
    gens = None
    if isinstance(obj, dict) and "generators" in obj:
        if not isinstance(obj["generators"], list):
            raise InputError(f"{path}: at $.generators: must be a list")
        gens = [matrix_from_obj(m, path, f"$.generators[{k}]") for k, m in enumerate(obj["generators"])]
    return g, gens


def dump(obj) -> str:
    return json.dumps(obj, indent=2)


def write_json(path, obj):
    Path(path).write_text(dump(obj) + "\n")
