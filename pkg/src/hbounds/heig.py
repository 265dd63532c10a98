"""H-eigenpair solvers used as an independent check on the inclusion sets.

``heig_exact_n2`` finds every real H-eigenpair of a two-dimensional tensor
by reducing ``A x^{m-1} = lambda x^[m-1]`` to univariate polynomials on two
affine charts, ``x = (z, 1)`` and ``x = (1, z)`` with ``|z| <= 1``, whose
real roots are isolated by bisection between critical points.

``sshopm`` is a shifted power iteration for any dimension. It is a
heuristic: every pair it returns satisfies the residual bound, but it may
miss eigenvalues.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .intervals import IntervalSet
from .tensor import Tensor, apply_power, hadamard_power, is_symmetric

DEDUP_TOL = 1e-8


class InfeasibleRequestError(ValueError):
    """Solver called outside its domain (e.g. the exact solver with n != 2)."""


@dataclass(frozen=True)
class HEigenpair:
    lam: float
    x: np.ndarray = field(compare=False)
    residual: float

    def __repr__(self):
        return f"HEigenpair(lam={self.lam!r}, x={self.x.tolist()!r}, residual={self.residual:.2e})"


def canonical_vector(x) -> np.ndarray:
    """Scale to max-norm 1 with the first nonzero component positive."""
    x = np.asarray(x, dtype=float)
    x = x / np.max(np.abs(x))
    nz = np.flatnonzero(x)
    if x[nz[0]] < 0:
        x = -x
    return x


def eigen_residual(A: Tensor, x, lam: float) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.max(np.abs(apply_power(A, x) - lam * hadamard_power(x, A.order - 1))))


def _rayleigh(A: Tensor, x: np.ndarray) -> float:
    y = apply_power(A, x)
    w = hadamard_power(x, A.order - 1)
    return float(y @ w / (w @ w))


def _make_pair(A: Tensor, x) -> HEigenpair:
    x = canonical_vector(x)
    lam = _rayleigh(A, x)
    return HEigenpair(lam, x, eigen_residual(A, x, lam))


def dedupe_pairs(pairs: Iterable[HEigenpair], tol: float = DEDUP_TOL) -> list[HEigenpair]:
    kept: list[HEigenpair] = []
    for p in pairs:
        if not any(abs(p.lam - q.lam) <= tol and np.max(np.abs(p.x - q.x)) <= tol for q in kept):
            kept.append(p)
    return kept


# -- univariate real roots ------------------------------------------------------

def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


def _bisect(c: np.ndarray, a: float, b: float, fa: float) -> float:
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = P.polyval(mid, c)
        if fm == 0.0:
            return mid
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def real_roots(coeffs: Sequence[float], lo: float, hi: float, rel_tol: float = 1e-10) -> list[float]:
    """Real roots of a polynomial (ascending coefficients) on ``[lo, hi]``.

    Between consecutive critical points the polynomial is monotone, so a
    sign change there brackets exactly one root. Critical points where the
    value vanishes up to ``rel_tol`` times the absolute-value polynomial are
    reported as (multiple) roots. The zero polynomial raises ValueError.
    """
    c = _trim(np.asarray(coeffs, dtype=float))
    if c.size == 0:
        raise ValueError("zero polynomial has every point as a root")
    if c.size == 1:
        return []
    if c.size == 2:
        r = -c[0] / c[1]
        return [r] if lo <= r <= hi else []
    crit = real_roots(P.polyder(c), lo, hi, rel_tol)
    absc = np.abs(c)

    def near_zero(z):
        return abs(P.polyval(z, c)) <= rel_tol * P.polyval(abs(z), absc)

    knots = sorted({lo, hi, *crit})
    roots = [z for z in knots if near_zero(z)]
    for a, b in zip(knots[:-1], knots[1:]):
        fa, fb = P.polyval(a, c), P.polyval(b, c)
        if near_zero(a) or near_zero(b):
            continue
        if (fa > 0) != (fb > 0):
            roots.append(_bisect(c, a, b, fa))
    return sorted(roots)


# -- exact solver for n = 2 ------------------------------------------------------

def _row_polys(A: Tensor, var_index: int) -> list[np.ndarray]:
    """Coefficients of ``(A x^{m-1})_k`` with ``x[var_index] = z`` and the other entry 1."""
    m = A.order
    tails = np.indices((2,) * (m - 1)).reshape(m - 1, -1)
    degree = np.sum(tails == var_index, axis=0)
    polys = []
    for k in range(2):
        row = A.data[k].reshape(-1)
        polys.append(np.bincount(degree, weights=row, minlength=m))
    return polys


def heig_exact_n2(A: Tensor, tol: float = 1e-9) -> list[HEigenpair]:
    """All real H-eigenpairs of a 2-dimensional tensor, sorted by eigenvalue.

    Pairs whose residual exceeds ``tol`` (spurious near-roots) are dropped.
    """
    if A.dim != 2:
        raise InfeasibleRequestError(f"exact solver needs dim 2, got {A.dim}")
    if A.order < 2:
        raise InfeasibleRequestError("exact solver needs order >= 2")
    m = A.order
    zpow = np.zeros(m)
    zpow[m - 1] = 1.0
    candidates = []
    # chart (z, 1): F0 = lam z^{m-1}, F1 = lam;  chart (1, z): F0 = lam, F1 = lam z^{m-1}
    for var in (0, 1):
        polys = _row_polys(A, var)
        f_var, f_one = polys[var], polys[1 - var]
        eq = P.polysub(f_var, P.polymul(zpow, f_one))
        try:
            zs = real_roots(eq, -1.0, 1.0)
        except ValueError:
            # every direction on this chart is an eigenvector of one eigenvalue
            zs = [0.0, 1.0]
        for z in zs:
            x = np.ones(2)
            x[var] = z
            candidates.append(_make_pair(A, x))
    good = [p for p in candidates if p.residual <= tol]
    return sorted(dedupe_pairs(good), key=lambda p: (p.lam, tuple(p.x)))


# -- shifted power iteration --------------------------------------------------------

def _odd_root(y: np.ndarray, k: int) -> np.ndarray:
    return np.sign(y) * np.abs(y) ** (1.0 / k)


def _apply_power_batch(flat: np.ndarray, X: np.ndarray, order: int) -> np.ndarray:
    """Rows of ``X`` are vectors; ``flat`` is the tensor reshaped to ``(n, n**(m-1))``.

    Builds the row-wise Kronecker power ``x (x) ... (x) x`` (last index
    fastest, matching C order) and contracts it in one matrix product.
    """
    K = X
    for _ in range(order - 2):
        K = (K[:, :, None] * X[:, None, :]).reshape(X.shape[0], -1)
    return K @ flat.T


def sshopm(
    A: Tensor,
    shift: float | str = "auto",
    starts: int = 20,
    seed: int = 0,
    tol: float = 1e-10,
    max_iters: int = 5000,
) -> list[HEigenpair]:
    """Shifted symmetric higher-order power iteration from random starts.

    Iterates ``x <- normalize((A x^{m-1} + shift * x^[m-1])^[1/(m-1)])``
    for all starts at once. The default shift ``1 + sum |a|`` dominates
    every eigenvalue, so fixed points keep their sign. Output is merged in
    start order and is deterministic in ``seed``.
    """
    if not is_symmetric(A):
        raise ValueError("sshopm needs a symmetric tensor")
    m = A.order
    if m < 2:
        raise InfeasibleRequestError("sshopm needs order >= 2")
    alpha = 1.0 + float(np.sum(np.abs(A.data))) if shift == "auto" else float(shift)
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((starts, A.dim))
    X /= np.max(np.abs(X), axis=1, keepdims=True)
    flat = A.data.reshape(A.dim, -1)
    done = np.zeros(starts, dtype=bool)
    result: list[np.ndarray | None] = [None] * starts
    for _ in range(max_iters):
        # finished rows ride along unchanged; with few starts that beats re-indexing
        AX = _apply_power_batch(flat, X, m)
        W = X ** (m - 1)
        lam = np.einsum("ij,ij->i", AX, W) / np.einsum("ij,ij->i", W, W)
        res = np.max(np.abs(AX - lam[:, None] * W), axis=1)
        newly = (res < tol) & ~done
        if newly.any():
            for k in np.flatnonzero(newly):
                result[k] = X[k].copy()
            done |= newly
        Y = AX + alpha * W
        done |= ~np.any(Y, axis=1)
        if done.all():
            break
        Xn = _odd_root(Y, m - 1)
        scale = np.max(np.abs(Xn), axis=1, keepdims=True)
        scale[scale == 0] = 1.0
        X = np.where(done[:, None], X, Xn / scale)
    found = []
    for x in result:
        if x is not None:
            pair = _make_pair(A, x)
            if pair.residual < tol:
                found.append(pair)
    return dedupe_pairs(found)


def sshopm_both_ends(A: Tensor, starts: int = 20, seed: int = 0, tol: float = 1e-10, **kw) -> list[HEigenpair]:
    """``sshopm`` on ``A`` and on ``-A``, so both ends of the spectrum are sampled."""
    upper = sshopm(A, starts=starts, seed=seed, tol=tol, **kw)
    lower = [HEigenpair(-p.lam, p.x, p.residual) for p in sshopm(-A, starts=starts, seed=seed, tol=tol, **kw)]
    return sorted(dedupe_pairs(upper + lower), key=lambda p: p.lam)


# -- containment ----------------------------------------------------------------------

DILATED_SETS = frozenset({"double-b-bar", "quasi-double-b-bar", "upsilon"})


def default_eps(A: Tensor) -> float:
    return 1e-9 * (1.0 + float(np.max(np.abs(A.data))))


@dataclass
class ContainmentRow:
    lam: float
    member: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.member.values())


def verify_containment(
    A: Tensor,
    pairs: Sequence[HEigenpair],
    sets: Mapping[str, IntervalSet],
    eps: float | None = None,
    dilated: Iterable[str] = DILATED_SETS,
) -> list[ContainmentRow]:
    """Membership of each eigenvalue in each set.

    Sets named in ``dilated`` are fattened by ``eps`` (default
    ``1e-9 (1 + max |a|)``) before testing; the others are tested as-is.
    """
    eps = default_eps(A) if eps is None else eps
    dilated = set(dilated)
    tested = {name: s.dilate(eps) if name in dilated else s for name, s in sets.items()}
    return [
        ContainmentRow(p.lam, {name: s.contains(p.lam) for name, s in tested.items()}) for p in pairs
    ]
