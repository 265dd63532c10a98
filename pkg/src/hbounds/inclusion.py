"""Real eigenvalue inclusion sets built as :class:`IntervalSet` values.

``gerschgorin`` and ``brauer_real`` hold for every H-eigenvalue of any real
tensor. ``double_b_bar_set``, ``quasi_double_b_bar_set`` and ``upsilon``
are stated for even-order symmetric tensors; they are still computed for
other inputs, with a warning.
"""
from __future__ import annotations

import warnings

from .intervals import INF, Interval, IntervalSet, solve_abs_affine_product, union_all
from .tensor import Tensor, is_symmetric, pair_profile, row_profile

TILDE_CORRECTED = "corrected"
TILDE_LITERAL = "literal"

SET_NAMES = ("gersh", "brauer", "double-b-bar", "quasi-double-b-bar", "upsilon")


class InclusionPreconditionWarning(UserWarning):
    pass


def _warn_unless_even_symmetric(A: Tensor, what: str) -> None:
    if A.order % 2 or not is_symmetric(A):
        warnings.warn(
            f"{what} is only guaranteed for even-order symmetric tensors",
            InclusionPreconditionWarning,
            stacklevel=3,
        )


def _ordered_pairs(n):
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def gerschgorin(A: Tensor) -> IntervalSet:
    return union_all(IntervalSet.closed(p.diag - p.r, p.diag + p.r) for p in row_profile(A))


def brauer_real(A: Tensor) -> IntervalSet:
    """Real section of the Brauer-type set; falls back to Gerschgorin for n = 1."""
    if A.dim == 1:
        return gerschgorin(A)
    rows = row_profile(A)
    parts = []
    for i, j in _ordered_pairs(A.dim):
        pp = pair_profile(A, i, j)
        parts.append(
            solve_abs_affine_product(
                rows[i].diag, rows[j].diag, pp.r_j_i, rows[i].r * abs(pp.a_ji)
            )
        )
    return union_all(parts)


def _between(lo: float, hi: float) -> IntervalSet:
    return IntervalSet([Interval(lo, hi, False, False)])


def double_b_bar_set(A: Tensor, tilde: str = TILDE_CORRECTED, check: bool = True) -> IntervalSet:
    """Union of the closed row intervals, the open tilde intervals and the pair sets.

    ``tilde="literal"`` puts the right end of each open row interval at
    ``a_ii - gamma_i - Theta_i``; the default ``"corrected"`` uses
    ``a_ii - gamma_i + Theta_i``, which is what the containment argument
    needs.
    """
    if tilde not in (TILDE_CORRECTED, TILDE_LITERAL):
        raise ValueError(f"unknown tilde mode {tilde!r}")
    if check:
        _warn_unless_even_symmetric(A, "double B-bar intervals")
    rows = row_profile(A)
    parts = []
    for p in rows:
        parts.append(IntervalSet.closed(p.diag - p.beta, p.diag - p.gamma))
        right = p.diag - p.gamma + (p.theta if tilde == TILDE_CORRECTED else -p.theta)
        parts.append(IntervalSet.open(p.diag - p.beta - p.delta, right))
    for i, j in _ordered_pairs(A.dim):
        pi, pj = rows[i], rows[j]
        lo, hi = min(pi.diag, pj.diag), max(pi.diag, pj.diag)
        parts += [
            solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.beta, 0.0, pi.delta * pj.delta, _between(-INF, lo)
            ),
            solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.beta, 0.0, pi.theta * pj.delta, _between(pi.diag, pj.diag)
            ),
            solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.gamma, 0.0, pi.delta * pj.theta, _between(pj.diag, pi.diag)
            ),
            solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.gamma, 0.0, pi.theta * pj.theta, _between(hi, INF)
            ),
        ]
    return union_all(parts)


def quasi_double_b_bar_set(A: Tensor, check: bool = True) -> IntervalSet:
    if check:
        _warn_unless_even_symmetric(A, "quasi-double B-bar intervals")
    rows = row_profile(A)
    parts = [IntervalSet.closed(p.diag - p.beta, p.diag - p.gamma) for p in rows]
    if A.order == 1:
        return union_all(parts)
    for i, j in _ordered_pairs(A.dim):
        pi, pj = rows[i], rows[j]
        pp = pair_profile(A, i, j)
        lo, hi = min(pi.diag, pj.diag), max(pi.diag, pj.diag)
        below = pj.beta - pp.a_ji
        above = pp.a_ji - pj.gamma
        parts += [
            solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.beta, pp.delta_j_i, below * pi.delta, _between(-INF, lo)
            ),
            solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.beta, pp.delta_j_i, below * pi.theta,
                _between(pi.diag, pj.diag),
            ),
            solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.gamma, pp.theta_j_i, above * pi.delta,
                _between(pj.diag, pi.diag),
            ),
            solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.gamma, pp.theta_j_i, above * pi.theta, _between(hi, INF)
            ),
        ]
    return union_all(parts)


def upsilon(A: Tensor, check: bool = True) -> IntervalSet:
    return brauer_real(A).intersect(quasi_double_b_bar_set(A, check=check))


def inclusion_set(A: Tensor, name: str, tilde: str = TILDE_CORRECTED) -> IntervalSet:
    """Dispatch by short name (``gersh``, ``brauer``, ``double-b-bar``, ...)."""
    if name == "gersh":
        return gerschgorin(A)
    if name == "brauer":
        return brauer_real(A)
    if name == "double-b-bar":
        return double_b_bar_set(A, tilde=tilde)
    if name == "quasi-double-b-bar":
        return quasi_double_b_bar_set(A)
    if name == "upsilon":
        return upsilon(A)
    raise ValueError(f"unknown inclusion set {name!r}")


def all_sets(A: Tensor, tilde: str = TILDE_CORRECTED) -> dict[str, IntervalSet]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", InclusionPreconditionWarning)
        return {name: inclusion_set(A, name, tilde) for name in SET_NAMES}
