"""Dense real tensors and the per-row statistics the classifiers consume.

A tensor of order ``m`` and dimension ``n`` is stored as a numpy array of
shape ``(n,) * m`` in C (row-major) order, so the last index varies
fastest. Indices in this module are 0-based.

For row ``i`` the *off-diagonal slots* are all tails ``(i_2, ..., i_m)``
other than ``(i, ..., i)``. Every statistic below is a reduction over those
slots.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_ENTRIES = 10**8


class TensorSizeError(ValueError):
    """Raised when ``dim ** order`` exceeds the entry guard."""


def _check_size(order: int, dim: int, max_entries: int | None) -> None:
    if order < 1 or dim < 1:
        raise ValueError(f"order and dim must be >= 1, got order={order}, dim={dim}")
    limit = MAX_ENTRIES if max_entries is None else max_entries
    if dim**order > limit:
        raise TensorSizeError(
            f"{dim}**{order} = {dim**order} entries exceeds the guard of {limit}"
        )


class Tensor:
    """Immutable m-order n-dimensional real tensor.

    Parameters
    ----------
    data : array_like
        Either an array of shape ``(n,) * m`` or, together with ``order``,
        a flat sequence of ``n ** m`` entries in row-major order.
    order : int, optional
        Required when ``data`` is flat.
    max_entries : int, optional
        Override for the size guard (default ``MAX_ENTRIES``).
    """

    __slots__ = ("_data",)

    def __init__(self, data, order: int | None = None, max_entries: int | None = None):
        arr = np.asarray(data, dtype=float)
        if order is not None and arr.ndim == 1 and order != 1:
            size = arr.size
            dim = round(size ** (1.0 / order))
            # guard against float error in the root
            for cand in (dim - 1, dim, dim + 1):
                if cand >= 1 and cand**order == size:
                    dim = cand
                    break
            else:
                raise ValueError(f"{size} entries is not a perfect {order}-th power")
            _check_size(order, dim, max_entries)
            arr = arr.reshape((dim,) * order)
        if arr.ndim == 0:
            raise ValueError("a tensor needs at least one index")
        dim = arr.shape[0]
        if any(s != dim for s in arr.shape):
            raise ValueError(f"all modes must have the same size, got shape {arr.shape}")
        _check_size(arr.ndim, dim, max_entries)
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr = np.array(arr, dtype=float, order="C")
        arr.setflags(write=False)
        self._data = arr

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the entries, shape ``(n,) * m``."""
        return self._data

    @property
    def order(self) -> int:
        return self._data.ndim

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Flat row-major entries (length ``n ** m``)."""
        return self._data.reshape(-1)

    def diagonal(self) -> np.ndarray:
        """The diagonal entries ``a_{i...i}``."""
        idx = np.arange(self.dim)
        return self._data[(idx,) * self.order].copy()

    def __getitem__(self, index):
        return self._data[index]

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((self._data.shape, self._data.tobytes()))

    def __neg__(self) -> Tensor:
        return Tensor(-self._data)

    def __add__(self, other: Tensor) -> Tensor:
        return Tensor(self._data + other._data)

    def __sub__(self, other: Tensor) -> Tensor:
        return Tensor(self._data - other._data)

    def __mul__(self, c: float) -> Tensor:
        return Tensor(self._data * float(c))

    __rmul__ = __mul__

    def __repr__(self):
        return f"Tensor(order={self.order}, dim={self.dim})"


@dataclass(frozen=True)
class RowProfile:
    """Off-diagonal statistics of one row (index ``i`` is 0-based)."""

    index: int
    diag: float
    r: float
    beta: float
    gamma: float
    delta: float
    theta: float
    alpha: float


@dataclass(frozen=True)
class PairProfile:
    """Statistics of row ``j`` with the slot ``(i, ..., i)`` also excluded."""

    i: int
    j: int
    a_ji: float
    r_j_i: float
    delta_j_i: float
    theta_j_i: float


def identity_tensor(order: int, dim: int, max_entries: int | None = None) -> Tensor:
    _check_size(order, dim, max_entries)
    arr = np.zeros((dim,) * order)
    idx = np.arange(dim)
    arr[(idx,) * order] = 1.0
    return Tensor(arr, max_entries=max_entries)


def _contract(data: np.ndarray, x: np.ndarray) -> np.ndarray:
    out = data
    while out.ndim > 1:
        out = out @ x
    return out


def apply_power(A: Tensor, x) -> np.ndarray:
    """Return the vector ``A x^{m-1}``.

    Component ``i`` is the sum of ``a_{i i_2 ... i_m} x_{i_2} ... x_{i_m}``
    over all tails.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (A.dim,):
        raise ValueError(f"vector of length {A.dim} expected, got shape {x.shape}")
    return np.array(_contract(A.data, x), dtype=float)


def poly_value(A: Tensor, x) -> float:
    """Return the form ``A x^m``."""
    x = np.asarray(x, dtype=float)
    return float(x @ apply_power(A, x))


def hadamard_power(x, k: int) -> np.ndarray:
    """Componentwise ``x_i ** k``; ``0 ** 0`` is 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return np.power(np.asarray(x, dtype=float), k)


def _diag_slot(order: int, dim: int, i: int) -> int:
    """Flat position of the tail ``(i, ..., i)`` inside a row of length n^(m-1)."""
    if order == 1:
        return 0
    return i * sum(dim**k for k in range(order - 1))


def _row_off(A: Tensor, i: int, exclude: int | None = None) -> np.ndarray:
    row = A.data[i].reshape(-1)
    mask = np.ones(row.size, dtype=bool)
    mask[_diag_slot(A.order, A.dim, i)] = False
    if exclude is not None:
        mask[_diag_slot(A.order, A.dim, exclude)] = False
    return row[mask]


def _row_stats(A: Tensor, i: int) -> RowProfile:
    off = _row_off(A, i)
    diag = float(A.data[(i,) * A.order])
    beta = float(max(0.0, off.max())) if off.size else 0.0
    gamma = float(min(0.0, off.min())) if off.size else 0.0
    delta = float(np.sum(beta - off))
    theta = float(np.sum(off - gamma))
    # alpha is undefined for a zero diagonal; beta is used so that
    # |a_ii| > |alpha_i| fails there
    alpha = gamma if diag < 0 else beta
    return RowProfile(
        index=i,
        diag=diag,
        r=float(np.sum(np.abs(off))),
        beta=beta,
        gamma=gamma,
        delta=delta,
        theta=theta,
        alpha=alpha,
    )


def row_profile(A: Tensor) -> list[RowProfile]:
    return [_row_stats(A, i) for i in range(A.dim)]


def pair_profile(A: Tensor, i: int, j: int) -> PairProfile:
    """Statistics of row ``j`` excluding both ``(j,...,j)`` and ``(i,...,i)``.

    For order 1 the only slot of a row is the diagonal, so ``a_ji`` is
    taken as 0 and nothing further is excluded.
    """
    n = A.dim
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"indices ({i}, {j}) out of range for dim {n}")
    if i == j:
        raise ValueError("pair_profile needs i != j")
    if A.order == 1:
        return PairProfile(i, j, 0.0, 0.0, 0.0, 0.0)
    a_ji = float(A.data[(j,) + (i,) * (A.order - 1)])
    prof = _row_stats(A, j)
    rest = _row_off(A, j, exclude=i)
    return PairProfile(
        i=i,
        j=j,
        a_ji=a_ji,
        r_j_i=float(np.sum(np.abs(rest))),
        delta_j_i=float(np.sum(prof.beta - rest)),
        theta_j_i=float(np.sum(rest - prof.gamma)),
    )


def row_tensor(A: Tensor, k: int) -> Tensor:
    """The order-(m-1) tensor ``(a_{k i_1 ... i_{m-1}})``."""
    if A.order < 2:
        raise ValueError("row tensor needs order >= 2")
    return Tensor(A.data[k])


def sign_normalize(A: Tensor) -> Tensor:
    """Multiply row ``k`` by ``sign(a_{k...k})``; a zero diagonal zeroes its row."""
    s = np.sign(A.diagonal())
    return Tensor(A.data * s.reshape((-1,) + (1,) * (A.order - 1)))


def plus_transform(A: Tensor) -> Tensor:
    """Subtract ``beta_{i_1}`` from every entry of row ``i_1``; the result is a Z-tensor."""
    beta = np.array([p.beta for p in row_profile(A)])
    return Tensor(A.data - beta.reshape((-1,) + (1,) * (A.order - 1)))


def principal_subtensor(A: Tensor, alpha: Iterable[int]) -> Tensor:
    idx = sorted(set(int(a) for a in alpha))
    if not idx:
        raise ValueError("index subset must be nonempty")
    if idx[0] < 0 or idx[-1] >= A.dim:
        raise IndexError(f"index subset {idx} out of range for dim {A.dim}")
    return Tensor(A.data[np.ix_(*([idx] * A.order))])


def scale_rows_by_signs(B: Tensor, d: Sequence[int]) -> Tensor:
    """Diagonal sign matrix times tensor: row ``k`` is multiplied by ``d_k``."""
    d = np.asarray(d, dtype=float)
    if d.shape != (B.dim,):
        raise ValueError(f"sign vector of length {B.dim} expected")
    if not np.all(np.abs(d) == 1.0):
        raise ValueError("sign vector entries must be +1 or -1")
    return Tensor(B.data * d.reshape((-1,) + (1,) * (B.order - 1)))


def is_symmetric(A: Tensor) -> bool:
    data = A.data
    for perm in itertools.permutations(range(A.order)):
        if not np.array_equal(data, np.transpose(data, perm)):
            return False
    return True


def off_diagonal_mask(order: int, dim: int) -> np.ndarray:
    mask = np.ones((dim,) * order, dtype=bool)
    idx = np.arange(dim)
    mask[(idx,) * order] = False
    return mask


def is_z_tensor(A: Tensor) -> bool:
    # A = sI - D with D >= 0 is the same as every off-diagonal entry <= 0:
    # take s = max diagonal, then D's diagonal s - a_ii is nonnegative too.
    return bool(np.all(A.data[off_diagonal_mask(A.order, A.dim)] <= 0))
