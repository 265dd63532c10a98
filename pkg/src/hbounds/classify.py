"""Membership tests for the diagonal-dominance tensor classes.

Every predicate returns a :class:`Check`, which is truthy exactly when the
tensor belongs to the class. A failing check carries a :class:`Witness`
naming the first violated inequality, scanning rows ``i`` and then ordered
pairs ``(i, j)`` lexicographically. Indices are 0-based.

The B-bar classes are computed two independent ways: by sign-normalizing
the rows and testing the plain B-class (``route="abar"``), or directly from
the ``alpha_i`` characterization (``route="alpha"``).
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

import numpy as np

from .tensor import (
    Tensor,
    _row_off,
    is_symmetric,
    is_z_tensor,
    off_diagonal_mask,
    pair_profile,
    row_profile,
    sign_normalize,
)

QUASI_THEOREM = "theorem"
QUASI_PAPER = "paper"


class InconsistentRoutesError(RuntimeError):
    """The two B-bar characterizations disagreed (should be unreachable)."""


@dataclass(frozen=True)
class Witness:
    rule: str
    i: int
    j: int | None
    lhs: float
    rhs: float


@dataclass(frozen=True)
class Check:
    holds: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.holds


_OK = Check(True)


def _fail(rule, i, j, lhs, rhs) -> Check:
    return Check(False, Witness(rule, i, j, float(lhs), float(rhs)))


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n):
        for j in range(n):
            if i != j:
                yield i, j


# -- plain B classes ------------------------------------------------------------

def is_double_b(A: Tensor) -> Check:
    rows = row_profile(A)
    for p in rows:
        if not p.diag > p.beta:
            return _fail("diag>beta", p.index, None, p.diag, p.beta)
    for p in rows:
        if not p.diag - p.beta >= p.delta:
            return _fail("double-b.a", p.index, None, p.diag - p.beta, p.delta)
    for i, j in _pairs(A.dim):
        pi, pj = rows[i], rows[j]
        lhs = (pi.diag - pi.beta) * (pj.diag - pj.beta)
        rhs = pi.delta * pj.delta
        if not lhs > rhs:
            return _fail("double-b.b", i, j, lhs, rhs)
    return _OK


def is_quasi_double_b(A: Tensor, variant: str = QUASI_THEOREM) -> Check:
    """Quasi-double B membership.

    ``variant="theorem"`` (default) compares against
    ``(beta_j - a_{ji...i}) * Delta_i``; ``variant="paper"`` uses the
    alternative ``(beta_i - a_{ji...i}) * Delta_j`` form.
    """
    if variant not in (QUASI_THEOREM, QUASI_PAPER):
        raise ValueError(f"unknown quasi-double-B variant {variant!r}")
    rows = row_profile(A)
    for p in rows:
        if not p.diag > p.beta:
            return _fail("diag>beta", p.index, None, p.diag, p.beta)
    for i, j in _pairs(A.dim):
        pi, pj = rows[i], rows[j]
        pp = pair_profile(A, i, j)
        lhs = (pi.diag - pi.beta) * (pj.diag - pj.beta - pp.delta_j_i)
        if variant == QUASI_THEOREM:
            rhs = (pj.beta - pp.a_ji) * pi.delta
        else:
            rhs = (pi.beta - pp.a_ji) * pj.delta
        if not lhs > rhs:
            return _fail("quasi-double-b", i, j, lhs, rhs)
    return _OK


def is_dsdd(A: Tensor) -> Check:
    rows = row_profile(A)
    for i, j in _pairs(A.dim):
        lhs = abs(rows[i].diag) * abs(rows[j].diag)
        rhs = rows[i].r * rows[j].r
        if not lhs > rhs:
            return _fail("dsdd.a", i, j, lhs, rhs)
    if A.order > 2:
        for p in rows:
            if not abs(p.diag) >= p.r:
                return _fail("dsdd.b", p.index, None, abs(p.diag), p.r)
    return _OK


def is_qdsdd(A: Tensor) -> Check:
    rows = row_profile(A)
    for i, j in _pairs(A.dim):
        pp = pair_profile(A, i, j)
        lhs = abs(rows[i].diag) * (abs(rows[j].diag) - pp.r_j_i)
        rhs = rows[i].r * abs(pp.a_ji)
        if not lhs > rhs:
            return _fail("qdsdd", i, j, lhs, rhs)
    return _OK


# -- B-bar classes --------------------------------------------------------------

def _alpha_sums(A: Tensor):
    """Per row: alpha_i, |a_ii - alpha_i| and the full off-diagonal sum of |alpha_i - a|."""
    rows = row_profile(A)
    alpha = [p.alpha for p in rows]
    gap = [abs(p.diag - p.alpha) for p in rows]
    dev = [float(np.sum(np.abs(p.alpha - _row_off(A, p.index)))) for p in rows]
    return rows, alpha, gap, dev


def _double_b_bar_alpha(A: Tensor) -> Check:
    rows, alpha, gap, dev = _alpha_sums(A)
    for p in rows:
        if not abs(p.diag) > abs(p.alpha):
            return _fail("|diag|>|alpha|", p.index, None, abs(p.diag), abs(p.alpha))
    for i in range(A.dim):
        if not gap[i] >= dev[i]:
            return _fail("double-b-bar.b", i, None, gap[i], dev[i])
    for i, j in _pairs(A.dim):
        lhs, rhs = gap[i] * gap[j], dev[i] * dev[j]
        if not lhs > rhs:
            return _fail("double-b-bar.c", i, j, lhs, rhs)
    return _OK


def _quasi_double_b_bar_alpha(A: Tensor) -> Check:
    rows, alpha, gap, dev = _alpha_sums(A)
    for p in rows:
        if not abs(p.diag) > abs(p.alpha):
            return _fail("|diag|>|alpha|", p.index, None, abs(p.diag), abs(p.alpha))
    if A.order == 1:
        return _OK
    for i, j in _pairs(A.dim):
        rest = _row_off(A, j, exclude=i)
        dev_j_i = float(np.sum(np.abs(alpha[j] - rest)))
        a_ji = float(A.data[(j,) + (i,) * (A.order - 1)])
        lhs = gap[i] * (gap[j] - dev_j_i)
        rhs = abs(alpha[j] - a_ji) * dev[i]
        if not lhs > rhs:
            return _fail("quasi-double-b-bar", i, j, lhs, rhs)
    return _OK


def is_double_b_bar(A: Tensor, route: str = "abar") -> Check:
    if route == "abar":
        return is_double_b(sign_normalize(A))
    if route == "alpha":
        return _double_b_bar_alpha(A)
    raise ValueError(f"unknown route {route!r}")


def is_quasi_double_b_bar(A: Tensor, route: str = "abar") -> Check:
    if route == "abar":
        return is_quasi_double_b(sign_normalize(A))
    if route == "alpha":
        return _quasi_double_b_bar_alpha(A)
    raise ValueError(f"unknown route {route!r}")


def z_tensor_check(A: Tensor) -> Check:
    if is_z_tensor(A):
        return _OK
    mask = off_diagonal_mask(A.order, A.dim) & (A.data > 0)
    first = tuple(int(k) for k in np.argwhere(mask)[0])
    return _fail("z:offdiag<=0", first[0], None, A.data[first], 0.0)


def symmetry_check(A: Tensor) -> Check:
    if is_symmetric(A):
        return _OK
    data = A.data
    for perm in itertools.permutations(range(A.order)):
        diff = np.argwhere(data != np.transpose(data, perm))
        if diff.size:
            idx = tuple(int(k) for k in diff[0])
            return _fail("symmetric", idx[0], None, data[idx], np.transpose(data, perm)[idx])
    return _OK  # pragma: no cover


# -- report ---------------------------------------------------------------------

FLAGS = (
    "double_b",
    "quasi_double_b",
    "double_b_bar",
    "quasi_double_b_bar",
    "dsdd",
    "qdsdd",
    "z_tensor",
    "symmetric",
)


@dataclass
class ClassificationReport:
    double_b: bool
    quasi_double_b: bool
    double_b_bar: bool
    quasi_double_b_bar: bool
    dsdd: bool
    qdsdd: bool
    z_tensor: bool
    symmetric: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAGS}

    def to_json(self) -> dict:
        """Indices in witnesses are reported 1-based."""
        out = {"flags": self.flags(), "witnesses": {}}
        for name, w in self.witnesses.items():
            d = asdict(w)
            d["i"] = w.i + 1
            d["j"] = None if w.j is None else w.j + 1
            out["witnesses"][name] = d
        return out


def classify_all(A: Tensor, quasi_variant: str = QUASI_THEOREM) -> ClassificationReport:
    checks: dict[str, Check] = {
        "double_b": is_double_b(A),
        "quasi_double_b": is_quasi_double_b(A, quasi_variant),
        "dsdd": is_dsdd(A),
        "qdsdd": is_qdsdd(A),
    }
    bar_tests: dict[str, Callable[..., Check]] = {
        "double_b_bar": is_double_b_bar,
        "quasi_double_b_bar": is_quasi_double_b_bar,
    }
    for name, test in bar_tests.items():
        via_abar, via_alpha = test(A, "abar"), test(A, "alpha")
        if bool(via_abar) != bool(via_alpha):
            raise InconsistentRoutesError(f"{name}: abar={bool(via_abar)} alpha={bool(via_alpha)}")
        checks[name] = via_abar
    if quasi_variant == QUASI_PAPER:
        checks["quasi_double_b_bar"] = is_quasi_double_b(sign_normalize(A), QUASI_PAPER)
    checks["z_tensor"] = z_tensor_check(A)
    checks["symmetric"] = symmetry_check(A)
    witnesses = {name: c.witness for name, c in checks.items() if not c.holds}
    return ClassificationReport(witnesses=witnesses, **{name: c.holds for name, c in checks.items()})


# -- positive definiteness ---------------------------------------------------------

CERTIFIED = "Certified"
UNKNOWN = "Unknown"
NOT_APPLICABLE = "NotApplicable"


@dataclass
class PdCertificate:
    verdict: str
    reason: str
    eigen_lower_bound: float | None = None

    def to_json(self) -> dict:
        return asdict(self)


def certify_positive_definite(A: Tensor) -> PdCertificate:
    """Sufficient-condition ladder for positive definiteness.

    Rules are tried in order: positive diagonal with DSDD, positive
    diagonal with Q-DSDD, double B, quasi-double B, and finally a positive
    lower bound from the inclusion sets (the largest of their infima).
    B-bar membership alone never certifies: flipped rows are not PD.
    """
    if A.order % 2:
        return PdCertificate(NOT_APPLICABLE, "odd order")
    if not is_symmetric(A):
        return PdCertificate(NOT_APPLICABLE, "nonsymmetric")
    from .inclusion import all_sets

    bound = max(s.inf for s in all_sets(A).values())
    positive_diag = bool(np.all(A.diagonal() > 0))
    ladder = [
        ("positive-diagonal+dsdd", lambda: positive_diag and bool(is_dsdd(A))),
        ("positive-diagonal+qdsdd", lambda: positive_diag and bool(is_qdsdd(A))),
        ("double-b", lambda: bool(is_double_b(A))),
        ("quasi-double-b", lambda: bool(is_quasi_double_b(A))),
        ("inclusion-sets>0", lambda: bound > 0),
    ]
    for rule, test in ladder:
        if test():
            return PdCertificate(CERTIFIED, rule, bound)
    return PdCertificate(UNKNOWN, "no rule fired", bound)
