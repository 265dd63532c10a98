"""JSON tensor files.

Two layouts are accepted, both with 1-based indices::

    {"order": 2, "dim": 2, "format": "dense", "dense": [1, 0, 0, 1]}
    {"order": 4, "dim": 2, "format": "coords", "symmetrize": true,
     "entries": [{"idx": [1, 1, 1, 1], "val": 18}, ...]}

With ``symmetrize`` each coordinate's value is assigned to every
permutation of its index tuple. Two entries that reach the same slot with
different values are an error; values are never averaged.
"""
from __future__ import annotations

import itertools
import json
from importlib import resources
from pathlib import Path

import numpy as np

from .tensor import MAX_ENTRIES, Tensor, TensorSizeError


class TensorFileError(ValueError):
    """Malformed tensor file or conflicting coordinates."""


def _require_int(doc: dict, key: str) -> int:
    val = doc.get(key)
    if not isinstance(val, int) or isinstance(val, bool) or val < 1:
        raise TensorFileError(f"{key!r} must be a positive integer, got {val!r}")
    return val


def tensor_from_dict(doc: dict, max_entries: int | None = None) -> Tensor:
    if not isinstance(doc, dict):
        raise TensorFileError("top level must be a JSON object")
    order, dim = _require_int(doc, "order"), _require_int(doc, "dim")
    limit = MAX_ENTRIES if max_entries is None else max_entries
    if dim**order > limit:
        raise TensorSizeError(f"{dim}**{order} entries exceeds the guard of {limit}")
    fmt = doc.get("format", "dense")
    if fmt == "dense":
        flat = doc.get("dense")
        if not isinstance(flat, list) or len(flat) != dim**order:
            raise TensorFileError(f"'dense' must be a list of {dim**order} numbers")
        try:
            arr = np.array(flat, dtype=float).reshape((dim,) * order)
        except (TypeError, ValueError) as exc:
            raise TensorFileError(f"bad dense entries: {exc}") from None
    elif fmt == "coords":
        arr = _coords_to_array(doc.get("entries"), order, dim, bool(doc.get("symmetrize", False)))
    else:
        raise TensorFileError(f"unknown format {fmt!r}")
    try:
        return Tensor(arr, max_entries=max_entries)
    except TensorSizeError:
        raise
    except ValueError as exc:
        raise TensorFileError(str(exc)) from None


def _coords_to_array(entries, order: int, dim: int, symmetrize: bool) -> np.ndarray:
    if not isinstance(entries, list):
        raise TensorFileError("'entries' must be a list")
    arr = np.zeros((dim,) * order)
    assigned: dict[tuple[int, ...], float] = {}
    for k, item in enumerate(entries):
        try:
            idx = tuple(int(i) - 1 for i in item["idx"])
            val = float(item["val"])
        except (KeyError, TypeError, ValueError):
            raise TensorFileError(f"entry {k} must look like {{'idx': [...], 'val': x}}") from None
        if len(idx) != order or any(not 0 <= i < dim for i in idx):
            raise TensorFileError(f"entry {k}: index {item['idx']} out of range")
        targets = set(itertools.permutations(idx)) if symmetrize else {idx}
        for t in targets:
            if t in assigned and assigned[t] != val:
                one_based = tuple(i + 1 for i in t)
                raise TensorFileError(
                    f"entry {k}: slot {one_based} already set to {assigned[t]}, conflicting value {val}"
                )
            assigned[t] = val
            arr[t] = val
    return arr


def load(path, max_entries: int | None = None) -> Tensor:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise TensorFileError(f"{path}: invalid JSON ({exc})") from None
    return tensor_from_dict(doc, max_entries)


def tensor_to_dict(A: Tensor, fmt: str = "dense") -> dict:
    doc = {"order": A.order, "dim": A.dim, "format": fmt}
    if fmt == "dense":
        doc["dense"] = [float(v) for v in A.entries]
    elif fmt == "coords":
        doc["symmetrize"] = False
        doc["entries"] = [
            {"idx": [int(i) + 1 for i in idx], "val": float(A.data[tuple(idx)])}
            for idx in np.argwhere(A.data != 0)
        ]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return doc


def save(A: Tensor, path, fmt: str = "dense") -> None:
    Path(path).write_text(json.dumps(tensor_to_dict(A, fmt), indent=1) + "\n")


def bundled(name: str) -> Tensor:
    """Load one of the shipped tensors: ``A1``, ``A2`` or ``counterexample``."""
    text = resources.files("hbounds").joinpath("data", f"{name}.json").read_text()
    return tensor_from_dict(json.loads(text))
