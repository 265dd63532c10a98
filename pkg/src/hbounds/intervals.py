"""Finite unions of real intervals with exact endpoint openness.

An :class:`IntervalSet` is kept in a canonical form: components sorted,
pairwise disjoint, and never touching at a point that either side covers.
Two sets describing the same subset of the real line therefore compare
equal. Unbounded ends are ``-inf``/``+inf`` and always open.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

INF = math.inf
# closed endpoints that are not exact roots are pushed outward by this much
ENDPOINT_REL_TOL = 1e-12


@dataclass(frozen=True, order=True)
class Interval:
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed) or math.isinf(self.lo)
        return False

    def contains(self, x: float) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def _fixed(self) -> Interval:
        # infinity is never a member
        return Interval(
            self.lo,
            self.hi,
            self.lo_closed and not math.isinf(self.lo),
            self.hi_closed and not math.isinf(self.hi),
        )

    def __str__(self):
        return _fmt_component(self, 6)


def _fmt_num(x: float, digits: int) -> str:
    if x == INF:
        return "+inf"
    if x == -INF:
        return "-inf"
    return f"{x:.{digits}g}"


def _fmt_component(c: Interval, digits: int) -> str:
    if c.lo == c.hi:
        return "{" + _fmt_num(c.lo, digits) + "}"
    left = "[" if c.lo_closed else "("
    right = "]" if c.hi_closed else ")"
    return f"{left}{_fmt_num(c.lo, digits)}, {_fmt_num(c.hi, digits)}{right}"


def _normalize(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    items = [p._fixed() for p in parts]
    items = [p for p in items if not p.is_empty()]
    # closed starts before open starts at the same point
    items.sort(key=lambda c: (c.lo, not c.lo_closed))
    out: list[Interval] = []
    for c in items:
        if out:
            last = out[-1]
            touches = c.lo < last.hi or (c.lo == last.hi and (last.hi_closed or c.lo_closed))
            if touches:
                if c.hi > last.hi:
                    hi, hi_closed = c.hi, c.hi_closed
                elif c.hi < last.hi:
                    hi, hi_closed = last.hi, last.hi_closed
                else:
                    hi, hi_closed = last.hi, last.hi_closed or c.hi_closed
                out[-1] = Interval(last.lo, hi, last.lo_closed, hi_closed)
                continue
        out.append(c)
    return tuple(out)


class IntervalSet:
    """Canonical finite union of intervals."""

    __slots__ = ("components",)

    def __init__(self, parts: Iterable[Interval] = ()):
        self.components: tuple[Interval, ...] = _normalize(parts)

    # constructors
    @classmethod
    def empty(cls) -> IntervalSet:
        return cls()

    @classmethod
    def real_line(cls) -> IntervalSet:
        return cls([Interval(-INF, INF, False, False)])

    @classmethod
    def closed(cls, lo: float, hi: float) -> IntervalSet:
        return cls([Interval(lo, hi, True, True)])

    @classmethod
    def open(cls, lo: float, hi: float) -> IntervalSet:
        return cls([Interval(lo, hi, False, False)])

    @classmethod
    def point(cls, x: float) -> IntervalSet:
        return cls([Interval(x, x, True, True)])

    # set algebra
    def union(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self.components + other.components)

    __or__ = union

    def intersect(self, other: IntervalSet) -> IntervalSet:
        parts = []
        for a in self.components:
            for b in other.components:
                if a.lo > b.lo:
                    lo, lo_closed = a.lo, a.lo_closed
                elif a.lo < b.lo:
                    lo, lo_closed = b.lo, b.lo_closed
                else:
                    lo, lo_closed = a.lo, a.lo_closed and b.lo_closed
                if a.hi < b.hi:
                    hi, hi_closed = a.hi, a.hi_closed
                elif a.hi > b.hi:
                    hi, hi_closed = b.hi, b.hi_closed
                else:
                    hi, hi_closed = a.hi, a.hi_closed and b.hi_closed
                parts.append(Interval(lo, hi, lo_closed, hi_closed))
        return IntervalSet(parts)

    __and__ = intersect

    def complement(self) -> IntervalSet:
        parts = []
        lo, lo_closed = -INF, False
        for c in self.components:
            parts.append(Interval(lo, c.lo, lo_closed, not c.lo_closed))
            lo, lo_closed = c.hi, not c.hi_closed
        parts.append(Interval(lo, INF, lo_closed, False))
        return IntervalSet(parts)

    def hull(self) -> IntervalSet:
        """Smallest single interval containing the set (empty stays empty)."""
        if not self.components:
            return IntervalSet()
        first, last = self.components[0], self.components[-1]
        return IntervalSet([Interval(first.lo, last.hi, first.lo_closed, last.hi_closed)])

    def dilate(self, eps: float) -> IntervalSet:
        """Closed eps-fattening of every component."""
        if eps < 0:
            raise ValueError("eps must be nonnegative")
        return IntervalSet(Interval(c.lo - eps, c.hi + eps, True, True) for c in self.components)

    def translate(self, shift: float) -> IntervalSet:
        return IntervalSet(
            Interval(c.lo + shift, c.hi + shift, c.lo_closed, c.hi_closed) for c in self.components
        )

    def scale(self, c: float) -> IntervalSet:
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return IntervalSet(
            Interval(p.lo * c, p.hi * c, p.lo_closed, p.hi_closed) for p in self.components
        )

    # queries
    def contains(self, x: float) -> bool:
        return any(c.contains(x) for c in self.components)

    __contains__ = contains

    def issubset(self, other: IntervalSet) -> bool:
        return self.intersect(other) == self

    def is_empty(self) -> bool:
        return not self.components

    @property
    def inf(self) -> float:
        """Lower end of the hull (``+inf`` for the empty set)."""
        return self.components[0].lo if self.components else INF

    @property
    def sup(self) -> float:
        return self.components[-1].hi if self.components else -INF

    def boundary_points(self) -> list[float]:
        pts = []
        for c in self.components:
            pts.extend([c.lo, c.hi])
        return [p for p in pts if not math.isinf(p)]

    # rendering
    def format(self, digits: int = 6) -> str:
        if not self.components:
            return "{}"
        return " ∪ ".join(_fmt_component(c, digits) for c in self.components)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntervalSet({self.format(17)})"

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def to_json(self) -> list[dict]:
        """Full-precision form; infinities become the strings ``"-inf"``/``"+inf"``."""

        def enc(x):
            return "+inf" if x == INF else "-inf" if x == -INF else float(x)

        return [
            {"lo": enc(c.lo), "hi": enc(c.hi), "lo_closed": c.lo_closed, "hi_closed": c.hi_closed}
            for c in self.components
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> IntervalSet:
        def dec(x):
            return float(x.replace("+inf", "inf")) if isinstance(x, str) else float(x)

        return cls(
            Interval(dec(d["lo"]), dec(d["hi"]), bool(d["lo_closed"]), bool(d["hi_closed"]))
            for d in data
        )


def union(S: IntervalSet, T: IntervalSet) -> IntervalSet:
    return S.union(T)


def intersect(S: IntervalSet, T: IntervalSet) -> IntervalSet:
    return S.intersect(T)


def hull(S: IntervalSet) -> IntervalSet:
    return S.hull()


def contains(S: IntervalSet, x: float) -> bool:
    return S.contains(x)


def dilate(S: IntervalSet, eps: float) -> IntervalSet:
    return S.dilate(eps)


def union_all(sets: Iterable[IntervalSet]) -> IntervalSet:
    parts: list[Interval] = []
    for s in sets:
        parts.extend(s.components)
    return IntervalSet(parts)


# -- quadratic pieces ---------------------------------------------------------

def _quadratic_roots(a: float, b: float, c: float) -> tuple[float, float] | None:
    """Real roots ``r1 <= r2`` of ``a x^2 + b x + c`` with ``a != 0``, or None."""
    disc = b * b - 4.0 * a * c
    if disc < 0:
        return None
    sq = math.sqrt(disc)
    # q-formula: no subtraction of nearly equal quantities
    q = -0.5 * (b + math.copysign(sq, b))
    if q == 0.0:
        return 0.0, 0.0
    r1, r2 = q / a, c / q
    return (r1, r2) if r1 <= r2 else (r2, r1)


def _solve_quadratic_le(a: float, b: float, c: float) -> IntervalSet:
    """``{x : a x^2 + b x + c <= 0}`` exactly, including degenerate cases."""
    if a == 0.0:
        if b == 0.0:
            return IntervalSet.real_line() if c <= 0 else IntervalSet()
        root = -c / b
        if b > 0:
            return IntervalSet([Interval(-INF, root, False, True)])
        return IntervalSet([Interval(root, INF, True, False)])
    roots = _quadratic_roots(a, b, c)
    if a > 0:
        if roots is None:
            return IntervalSet()
        return IntervalSet.closed(*roots)
    if roots is None:
        return IntervalSet.real_line()
    r1, r2 = roots
    return IntervalSet([Interval(-INF, r1, False, True), Interval(r2, INF, True, False)])


def abs_affine_product(p: float, q: float, t: float, x: float) -> float:
    """``|p - x| * (|q - x| - t)``."""
    return abs(p - x) * (abs(q - x) - t)


def _is_exact_root(p, q, t, c, x) -> bool:
    p, q, t, c, x = (Fraction(v) for v in (p, q, t, c, x))
    return abs(p - x) * (abs(q - x) - t) == c


def _round_outward(sol: IntervalSet, p, q, t, c) -> IntervalSet:
    """Widen closed finite endpoints that are only approximate roots.

    The widened set still encloses the exact solution set when the roots
    carry a few ulps of error; exact roots (checked in rational arithmetic)
    are kept as they are.
    """
    scale = 1.0 + abs(p) + abs(q) + t + math.sqrt(abs(c))

    def push(x, direction):
        if math.isinf(x) or _is_exact_root(p, q, t, c, x):
            return x
        return x + direction * ENDPOINT_REL_TOL * scale

    return IntervalSet(
        Interval(
            push(k.lo, -1.0) if k.lo_closed else k.lo,
            push(k.hi, 1.0) if k.hi_closed else k.hi,
            k.lo_closed,
            k.hi_closed,
        )
        for k in sol.components
    )


def solve_abs_affine_product(
    p: float, q: float, t: float, c: float, domain: IntervalSet | None = None
) -> IntervalSet:
    """Solve ``|p - x| (|q - x| - t) <= c`` over ``domain`` exactly.

    The line is split at ``p`` and ``q``. On each open piece both absolute
    values have a fixed sign, so the inequality is a quadratic with leading
    coefficient +1 or -1; the split points themselves are evaluated
    directly. Closed endpoints that are not exact roots are rounded outward
    by ``ENDPOINT_REL_TOL`` (relative to the data scale).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if domain is None:
        domain = IntervalSet.real_line()
    u, v = min(p, q), max(p, q)
    pieces = [Interval(-INF, u, False, False), Interval(u, v, False, False), Interval(v, INF, False, False)]
    parts: list[IntervalSet] = []
    for piece in pieces:
        if piece.is_empty():
            continue
        mid = _sample_point(piece)
        sp = 1.0 if p - mid > 0 else -1.0
        sq = 1.0 if q - mid > 0 else -1.0
        # sp (p - x) (sq (q - x) - t) - c
        s = sp * sq
        a2 = s
        a1 = -s * (p + q) + sp * t
        a0 = s * p * q - sp * t * p - c
        sol = _round_outward(_solve_quadratic_le(a2, a1, a0), p, q, t, c)
        parts.append(sol.intersect(IntervalSet([piece])))
    for x in {u, v}:
        if abs_affine_product(p, q, t, x) <= c:
            parts.append(IntervalSet.point(x))
    return union_all(parts).intersect(domain)


def _sample_point(piece: Interval) -> float:
    if math.isinf(piece.lo) and math.isinf(piece.hi):
        return 0.0
    if math.isinf(piece.lo):
        return piece.hi - 1.0
    if math.isinf(piece.hi):
        return piece.lo + 1.0
    return 0.5 * (piece.lo + piece.hi)


# -- sampling oracle ----------------------------------------------------------

def grid_membership_oracle(
    predicate: Callable, lo: float, hi: float, step: float, vectorized: bool = False
) -> IntervalSet:
    """Approximate ``{x in [lo, hi] : predicate(x)}`` from samples on a grid.

    Each run of consecutive accepted samples becomes one closed component
    spanning the first to the last accepted sample, so true endpoints are
    recovered to within one ``step``. With ``vectorized=True`` the predicate
    receives the whole grid as an array. Intended for testing only.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor((hi - lo) / step)) + 1
    xs = lo + step * np.arange(count)
    if vectorized:
        hits = np.asarray(predicate(xs), dtype=bool)
    else:
        hits = np.fromiter((bool(predicate(float(x))) for x in xs), dtype=bool, count=count)
    parts = []
    k = 0
    while k < count:
        if hits[k]:
            start = k
            while k + 1 < count and hits[k + 1]:
                k += 1
            parts.append(Interval(float(xs[start]), float(xs[k]), True, True))
        k += 1
    return IntervalSet(parts)
