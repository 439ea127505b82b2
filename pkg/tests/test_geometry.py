import numpy as np
import pytest

from macfb.bounds import RateConstraintSet, Region, RegionSpec, region_boundary
from macfb.geometry import (
    BoundaryCurve,
    EmptyInputError,
    RatePair,
    curve_gap,
    pareto_filter,
    support_value,
)

NOFB = RateConstraintSet(1.0, 1.0, 1.5)


class TestParetoFilter:
    def test_mutually_nondominated(self):
        curve = pareto_filter([(1.0, 0.0), (0.0, 1.0), (0.5, 0.5)])
        assert len(curve) == 3

    def test_dominated_point_removed(self):
        curve = pareto_filter([(1.0, 1.0), (0.5, 0.5)])
        assert curve.points.tolist() == [[1.0, 1.0]]

    def test_pentagon_corners(self):
        curve = pareto_filter(NOFB.corners())
        assert curve.points.tolist() == [[0.5, 1.0], [1.0, 0.5]]

    def test_idempotent(self, rng):
        pts = rng.uniform(0.0, 1.0, (500, 2))
        once = pareto_filter(pts)
        twice = pareto_filter(once.points)
        assert np.array_equal(once.points, twice.points)

    def test_order_independent(self, rng):
        pts = rng.uniform(0.0, 1.0, (500, 2))
        a = pareto_filter(pts)
        b = pareto_filter(pts[rng.permutation(len(pts))])
        assert np.array_equal(a.points, b.points)

    def test_duplicates_collapse(self):
        curve = pareto_filter([(0.5, 0.5), (0.5, 0.5), (0.2, 0.9)])
        assert curve.points.tolist() == [[0.2, 0.9], [0.5, 0.5]]

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            pareto_filter([])

    def test_output_is_pareto_ordered(self, rng):
        pts = rng.uniform(0.0, 1.0, (2000, 2))
        curve = pareto_filter(pts)
        assert np.all(np.diff(curve.points[:, 0]) > 0)
        assert np.all(np.diff(curve.points[:, 1]) < 0)


class TestBoundaryCurve:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            BoundaryCurve(points=np.array([[1.0, 0.5], [0.5, 1.0]]))

    def test_rejects_dominated(self):
        with pytest.raises(ValueError):
            BoundaryCurve(points=np.array([[0.5, 0.5], [1.0, 0.5]]))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            BoundaryCurve(points=np.array([[-0.5, 1.0], [0.5, 0.5]]))

    def test_rate_pairs(self):
        curve = BoundaryCurve(points=np.array([[0.5, 1.0], [1.0, 0.5]]))
        assert curve.rate_pairs() == [RatePair(0.5, 1.0), RatePair(1.0, 0.5)]


class TestSupportValue:
    def test_nofb_pentagon_diagonal(self):
        assert support_value(pareto_filter(NOFB.corners()), 0.5) == 0.75

    def test_axis_directions(self):
        curve = pareto_filter(NOFB.corners())
        assert support_value(curve, 1.0) == 1.0
        assert support_value(curve, 0.0) == 1.0

    def test_lambda_domain(self):
        curve = pareto_filter(NOFB.corners())
        with pytest.raises(ValueError):
            support_value(curve, 1.5)

    def test_monotone_under_dominance(self, rng):
        inner = pareto_filter(rng.uniform(0.0, 0.5, (200, 2)))
        outer = pareto_filter(np.concatenate([inner.points * 1.1, inner.points]))
        for lam in np.linspace(0.0, 1.0, 11):
            assert support_value(outer, lam) >= support_value(inner, lam) - 1e-12

    def test_convex_in_lambda(self):
        # max of affine functions of lambda: midpoint value never exceeds the mean
        curve = pareto_filter(NOFB.corners())
        lams = np.linspace(0.0, 1.0, 41)
        vals = [support_value(curve, l) for l in lams]
        for i in range(1, len(lams) - 1):
            assert vals[i] <= (vals[i - 1] + vals[i + 1]) / 2 + 1e-12


class TestCurveGap:
    def test_self_gap_zero(self):
        curve = pareto_filter(NOFB.corners())
        lo, hi, at = curve_gap(curve, curve)
        assert lo == 0.0 and hi == 0.0

    def test_feedback_region_contains_no_feedback_pentagon(self):
        fb = region_boundary(RegionSpec(Region.ERASURE_FB, 51))
        nofb = region_boundary(RegionSpec(Region.ERASURE_NOFB, 2))
        lo, hi, at = curve_gap(fb, nofb)
        assert lo >= -1e-9
        assert hi > 0.01  # feedback strictly enlarges the region

    def test_at_lambda_is_argmin(self):
        outer = pareto_filter([(1.0, 0.5), (0.5, 1.0)])
        inner = pareto_filter([(1.0, 0.4), (0.4, 1.0)])
        lo, hi, at = curve_gap(outer, inner)
        assert lo == pytest.approx(0.0, abs=1e-12)
        assert at in (0.0, 1.0)
