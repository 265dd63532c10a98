import json
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hbounds.intervals import (
    INF,
    Interval,
    IntervalSet,
    contains,
    dilate,
    grid_membership_oracle,
    hull,
    intersect,
    solve_abs_affine_product,
    union,
)

# Sample points for the pointwise oracle: all half-integers in [-7, 7] plus the infinities.
PROBES = [k / 2 for k in range(-14, 15)]


@st.composite
def components(draw):
    lo = draw(st.one_of(st.just(-INF), st.integers(-6, 6)))
    hi = draw(st.one_of(st.just(INF), st.integers(-6, 6)))
    return Interval(float(lo), float(hi), draw(st.booleans()), draw(st.booleans()))


@st.composite
def raw_sets(draw):
    return draw(st.lists(components(), max_size=4))


def member(raw, x):
    """Pointwise membership of an unnormalized component list."""
    return any(
        (c.lo < x or (c.lo == x and c.lo_closed and not math.isinf(x)))
        and (x < c.hi or (x == c.hi and c.hi_closed and not math.isinf(x)))
        for c in raw
    )


# -- worked examples ------------------------------------------------------------------

def test_intersect_table_hulls():
    out = intersect(IntervalSet.closed(3, 36.6119), IntervalSet.closed(9, 36.6119))
    assert out == IntervalSet.closed(9, 36.6119)


def test_union_merges_adjacent_open_closed():
    out = union(IntervalSet.open(1, 2), IntervalSet.closed(2, 3))
    assert out.components == (Interval(1, 3, False, True),)
    assert str(out) == "(1, 3]"


def test_contains_respects_openness():
    assert not contains(IntervalSet.open(9, 33), 9)
    assert contains(IntervalSet.closed(9, 33), 9)


def test_open_open_touch_stays_split():
    S = IntervalSet.open(0, 1) | IntervalSet.open(1, 2)
    assert len(S) == 2 and 1 not in S


def test_format_and_json_roundtrip():
    S = IntervalSet(
        [Interval(-INF, -1, False, True), Interval(0.5, 0.5), Interval(2, INF, False, False)]
    )
    assert S.format() == "(-inf, -1] ∪ {0.5} ∪ (2, +inf)"
    doc = json.loads(json.dumps(S.to_json()))
    assert IntervalSet.from_json(doc) == S


def test_dilate_negative_rejected():
    with pytest.raises(ValueError):
        dilate(IntervalSet.closed(0, 1), -1e-3)


def test_dilate_closes_components():
    S = dilate(IntervalSet.open(0, 1) | IntervalSet.point(3), 0.5)
    assert S == IntervalSet.closed(-0.5, 1.5) | IntervalSet.closed(2.5, 3.5)


def test_hull_and_extremes():
    S = IntervalSet.open(0, 1) | IntervalSet.closed(4, 5)
    assert hull(S).components == (Interval(0, 5, False, True),)
    assert (S.inf, S.sup) == (0, 5)
    assert IntervalSet.empty().is_empty()


# -- algebra laws ----------------------------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(raw_sets())
def test_normalization_preserves_membership_and_is_canonical(raw):
    S = IntervalSet(raw)
    for x in PROBES + [-INF, INF]:
        assert S.contains(x) == member(raw, x)
    comps = S.components
    for a, b in zip(comps, comps[1:]):
        assert a.hi < b.lo or (a.hi == b.lo and not a.hi_closed and not b.lo_closed)
    for c in comps:
        assert c.lo < c.hi or (c.lo == c.hi and c.lo_closed and c.hi_closed)
    assert IntervalSet(reversed(raw)) == S


@settings(max_examples=300, deadline=None)
@given(raw_sets(), raw_sets(), raw_sets())
def test_union_intersect_laws(a, b, c):
    S, T, U = IntervalSet(a), IntervalSet(b), IntervalSet(c)
    assert S | T == T | S
    assert S & T == T & S
    assert (S | T) | U == S | (T | U)
    assert (S & T) & U == S & (T & U)
    assert S & (T | U) == (S & T) | (S & U)
    for x in PROBES:
        assert (S | T).contains(x) == (member(a, x) or member(b, x))
        assert (S & T).contains(x) == (member(a, x) and member(b, x))
    # de Morgan through the complement
    assert (S | T).complement() == S.complement() & T.complement()
    assert (S & T).complement() == S.complement() | T.complement()
    assert S.complement().complement() == S


@settings(max_examples=200, deadline=None)
@given(raw_sets())
def test_hull_contains_components_and_dilate_zero(raw):
    S = IntervalSet(raw)
    assert S.issubset(S.hull())
    closed = IntervalSet([Interval(c.lo, c.hi) for c in S])
    assert closed.dilate(0.0) == closed
    assert S.issubset(S.dilate(0.25))


@settings(max_examples=100, deadline=None)
@given(raw_sets(), st.integers(-3, 3), st.integers(1, 4))
def test_translate_and_scale(raw, s, c):
    S = IntervalSet(raw)
    for x in PROBES:
        assert S.translate(s).contains(x + s) == S.contains(x)
        assert S.scale(c).contains(c * x) == S.contains(x)


# -- the piecewise quadratic solver ----------------------------------------------------

def test_solver_upper_brauer_endpoint():
    S = solve_abs_affine_product(18, 20, 15, 30, IntervalSet.open(20, INF))
    root = (53 + math.sqrt(53**2 - 4 * 600)) / 2
    (comp,) = S.components
    assert (comp.lo, comp.lo_closed, comp.hi_closed) == (20, False, True)
    assert comp.hi == pytest.approx(root, abs=1e-9)
    assert root == pytest.approx(36.6119, abs=1e-4)


def test_solver_point_solution():
    assert solve_abs_affine_product(0, 0, 0, 0) == IntervalSet.point(0)


def test_solver_lambda1_piece():
    S = solve_abs_affine_product(15, 17, 0, 24, IntervalSet.open(-INF, 18))
    assert S.components == (Interval(11, 18, True, False),)


def test_solver_empty_and_everything():
    assert solve_abs_affine_product(0, 0, 0, -1).is_empty()
    # |x| (|x - 1| - 5) <= 100 is all of [-10, 10] and more; check a wide closed solution
    S = solve_abs_affine_product(0, 1, 5, 100)
    assert S.contains(-7.5) and S.contains(12) and not S.contains(20)


def test_solver_rejects_negative_t():
    with pytest.raises(ValueError):
        solve_abs_affine_product(0, 1, -1, 0)


def test_grid_oracle_examples():
    S = grid_membership_oracle(lambda x: (x - 18) * (x - 35) <= 30, 20, 40, 1e-4)
    assert S.sup == pytest.approx(36.6119, abs=2e-4)
    assert grid_membership_oracle(lambda x: False, 0, 1, 0.1).is_empty()
    with pytest.raises(ValueError):
        grid_membership_oracle(lambda x: True, 0, 1, 0)


def test_grid_oracle_lambda1_of_A1():
    # Lambda^1_12(A1): |15 - x| |17 - x| <= 6 * 4 below the smaller diagonal
    pred = lambda x: x < 18 and abs(15 - x) * abs(17 - x) <= 24
    S = grid_membership_oracle(pred, 0, 18, 1e-4)
    (comp,) = S.components
    assert comp.lo == pytest.approx(11, abs=1e-4)
    assert comp.hi == pytest.approx(18, abs=1e-4)


def _vector_member(S, xs):
    out = np.zeros(xs.shape, dtype=bool)
    for c in S:
        left = (xs > c.lo) | ((xs == c.lo) & c.lo_closed)
        right = (xs < c.hi) | ((xs == c.hi) & c.hi_closed)
        out |= left & right
    return out


def solver_agrees_with_grid(p, q, t, c, domain, lo, hi, step=1e-4):
    """Count disagreements away from the computed endpoints (vectorized)."""
    S = solve_abs_affine_product(p, q, t, c, domain)

    def pred(xs):
        return (np.abs(p - xs) * (np.abs(q - xs) - t) <= c) & _vector_member(domain, xs)

    grid = lo + step * np.arange(int(math.floor((hi - lo) / step)) + 1)
    oracle = grid_membership_oracle(pred, lo, hi, step, vectorized=True)
    ends = np.array(S.boundary_points() + oracle.boundary_points() + [lo, hi])
    ends = ends[np.isfinite(ends)]
    far = np.min(np.abs(grid[:, None] - ends[None, :]), axis=1) > step
    # membership in the oracle's run-reconstruction vs the solver set
    return int(np.sum(_vector_member(S, grid[far]) != _vector_member(oracle, grid[far])))


@settings(max_examples=60, deadline=None)
@given(
    st.floats(-10, 10),
    st.floats(-10, 10),
    st.floats(0, 6),
    st.floats(-30, 60),
    st.sampled_from(["line", "open", "closed"]),
    st.floats(-12, 12),
    st.floats(0.5, 10),
)
def test_solver_matches_grid_oracle(p, q, t, c, kind, a, w):
    domain = {
        "line": IntervalSet.real_line(),
        "open": IntervalSet.open(a, a + w),
        "closed": IntervalSet.closed(a, a + w),
    }[kind]
    assert solver_agrees_with_grid(p, q, t, c, domain, -25.0, 25.0, step=1e-3) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 4), st.integers(-20, 40))
def test_solver_membership_exact_on_integer_probes(p, q, t, c):
    S = solve_abs_affine_product(p, q, t, c)
    for x in PROBES:
        truth = abs(p - x) * (abs(q - x) - t) <= c
        assert S.contains(x) == truth
