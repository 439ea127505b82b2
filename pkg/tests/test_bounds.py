import math

import numpy as np
import pytest

from macfb.bounds import (
    RateConstraintSet,
    Region,
    RegionSpec,
    cover_leung_constraints,
    cover_leung_witness,
    db_pc1_constraints,
    db_pc2_constraints,
    erasure_fb_constraints,
    erasure_fb_constraints_at_triple,
    erasure_fb_witness,
    erasure_nofb_constraints,
    region_boundary,
)
from macfb.channel import Channel, info_quantities
from macfb.feasible import InvalidTripleError, UTriple, sample_triples, u_triple_of
from macfb.geometry import support_value
from macfb.infofn import DomainError, f2

LOG2_3 = math.log2(3.0)
H_QUARTER = 2.0 - 0.75 * LOG2_3  # h(1/4)
BALANCE = UTriple(0.086063, 0.218333, 0.355899)


class TestRateConstraintSet:
    def test_corners_contains_support(self):
        caps = RateConstraintSet(1.0, 1.0, 1.5)
        assert set(caps.corners()) == {(1.0, 0.0), (0.0, 1.0), (1.0, 0.5), (0.5, 1.0)}
        assert caps.contains(0.7, 0.7)
        assert not caps.contains(0.8, 0.8)
        assert caps.support(0.5) == 0.75

    def test_box_only_when_sum_is_slack(self):
        caps = RateConstraintSet(0.3, 0.4, 5.0)
        assert (0.3, 0.4) in set(caps.corners())
        assert caps.support(0.5) == pytest.approx(0.35)

    def test_absent_caps(self):
        caps = RateConstraintSet(None, 1.0, None)
        assert caps.contains(100.0, 1.0)
        with pytest.raises(ValueError):
            caps.corners()

    def test_negative_cap_rejected(self):
        with pytest.raises(ValueError):
            RateConstraintSet(-0.5, 1.0, 1.0)

    def test_dominates(self):
        big = RateConstraintSet(1.0, 1.0, 1.5)
        small = RateConstraintSet(0.5, 0.5, 1.0)
        assert big.dominates(small)
        assert not small.dominates(big)
        assert big.dominates(RateConstraintSet(1.0, None, 1.5)) is False


class TestDbPcConstraints:
    def test_box_corner_triple(self):
        caps = db_pc1_constraints(UTriple(0.25, 0.25, 0.5))
        assert caps.r1_max == pytest.approx(0.5, abs=1e-12)
        assert caps.r2_max == pytest.approx(0.5, abs=1e-12)
        assert caps.sum_max == pytest.approx(H_QUARTER, abs=1e-12)

    def test_degenerate_triple(self):
        caps = db_pc1_constraints(UTriple(0.0, 0.0, 0.0))
        assert caps.r1_max == 0.0
        assert caps.r2_max == 0.0
        assert caps.sum_max == pytest.approx(1.0, abs=1e-12)

    def test_balance_point(self):
        caps = db_pc1_constraints(BALANCE)
        assert caps.r1_max == pytest.approx(0.45330, abs=1e-4)
        assert caps.r2_max == pytest.approx(0.45330, abs=1e-4)
        assert caps.sum_max == pytest.approx(2 * 0.45330, abs=1e-4)

    def test_mirror_symmetry(self, rng):
        for t in sample_triples(100, rng):
            a = db_pc1_constraints(t)
            b = db_pc2_constraints(UTriple(t.u2, t.u1, t.u))
            assert a.r1_max == pytest.approx(b.r2_max, abs=1e-14)
            assert a.r2_max == pytest.approx(b.r1_max, abs=1e-14)
            assert a.sum_max == pytest.approx(b.sum_max, abs=1e-14)

    def test_outside_P_rejected(self):
        with pytest.raises(InvalidTripleError):
            db_pc1_constraints(UTriple(0.25, 0.25, 0.4))
        with pytest.raises(InvalidTripleError):
            db_pc2_constraints(UTriple(0.3, 0.0, 0.5))


class TestCoverLeung:
    def test_degenerate(self):
        caps = cover_leung_constraints(0.0, 0.0)
        assert (caps.r1_max, caps.r2_max, caps.sum_max) == (0.0, 0.0, 1.0)

    def test_box_corner(self):
        caps = cover_leung_constraints(0.25, 0.25)
        assert caps.r1_max == pytest.approx(0.5, abs=1e-12)
        assert caps.r2_max == pytest.approx(0.5, abs=1e-12)
        assert caps.sum_max == pytest.approx(H_QUARTER, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            cover_leung_constraints(0.3, 0.1)

    def test_witness_summary_statistics(self, rng):
        for u1, u2 in rng.uniform(0.0, 0.25, (100, 2)):
            t = u_triple_of(cover_leung_witness(u1, u2))
            assert t.u1 == pytest.approx(u1, abs=1e-12)
            assert t.u2 == pytest.approx(u2, abs=1e-12)
            assert t.u == pytest.approx(f2(2 * u1, 2 * u2), abs=1e-12)

    def test_witness_structure(self):
        d = cover_leung_witness(0.1, 0.2)
        assert np.allclose(d.p_t, [0.5, 0.5])
        assert d.q1[0] == pytest.approx(1 - d.q1[1], abs=1e-15)


class TestErasure:
    def test_box_corner_gives_no_feedback_pentagon(self):
        caps = erasure_fb_constraints(0.25, 0.25)
        assert (caps.r1_max, caps.r2_max) == (pytest.approx(1.0), pytest.approx(1.0))
        assert caps.sum_max == pytest.approx(1.5, abs=1e-12)

    def test_degenerate(self):
        caps = erasure_fb_constraints(0.0, 0.0)
        assert (caps.r1_max, caps.r2_max, caps.sum_max) == (0.0, 0.0, 1.0)

    def test_peak_sum_cap(self):
        # f2(2u, 2u) = 2u, so u = 1/6 puts the sum cap at its peak log2(3)
        caps = erasure_fb_constraints(1 / 6, 1 / 6)
        assert caps.sum_max == pytest.approx(LOG2_3, abs=1e-12)

    def test_triple_form_matches_pair_form_on_lower_face(self, rng):
        for u1, u2 in rng.uniform(0.0, 0.25, (50, 2)):
            t = UTriple(u1, u2, f2(2 * u1, 2 * u2))
            a = erasure_fb_constraints_at_triple(t)
            b = erasure_fb_constraints(u1, u2)
            assert a.r1_max == b.r1_max and a.r2_max == b.r2_max
            assert a.sum_max == pytest.approx(b.sum_max, abs=1e-12)

    def test_no_feedback_pentagon(self):
        caps = erasure_nofb_constraints()
        assert (caps.r1_max, caps.r2_max, caps.sum_max) == (1.0, 1.0, 1.5)

    def test_witness_matches_cover_leung_construction(self):
        a = erasure_fb_witness(0.11, 0.07)
        b = cover_leung_witness(0.11, 0.07)
        assert np.allclose(a.q1, b.q1) and np.allclose(a.q2, b.q2)


class TestSoundness:
    def test_true_pentagons_inside_closed_form(self, rng):
        for _ in range(100):
            k = int(rng.integers(1, 3))
            d_p = rng.dirichlet(np.ones(k))
            from macfb.channel import JointInputDistribution

            d = JointInputDistribution(d_p, rng.uniform(size=k), rng.uniform(size=k))
            t = u_triple_of(d)
            qn = info_quantities(Channel.NOISY_ADDITIVE, d)
            qe = info_quantities(Channel.ERASURE, d)
            caps1 = db_pc1_constraints(t)
            assert min(qn.i_x1_y_given_x2, qn.h_x1_given_t) <= caps1.r1_max + 1e-10
            assert 0.5 * qn.h_x2_given_t <= caps1.r2_max + 1e-10
            assert qn.i_x1x2_y <= caps1.sum_max + 1e-10
            capse = erasure_fb_constraints_at_triple(t)
            assert qe.h_y <= capse.sum_max + 1e-10


class TestRegionBoundaries:
    def test_erasure_nofb_curve(self):
        curve = region_boundary(RegionSpec(Region.ERASURE_NOFB, 2))
        assert curve.points.tolist() == [[0.5, 1.0], [1.0, 0.5]]

    def test_grid_n_validation(self):
        with pytest.raises(ValueError):
            RegionSpec(Region.CUTSET, 1)

    def test_cutset_axis_support(self, cutset_curve):
        # with one input known, the other carries at most half a bit
        assert support_value(cutset_curve, 1.0) == pytest.approx(0.5, abs=1e-9)
        assert support_value(cutset_curve, 0.0) == pytest.approx(0.5, abs=1e-9)

    def test_cutset_symmetric_support(self, cutset_curve):
        assert support_value(cutset_curve, 0.5) == pytest.approx(0.45915, abs=1e-4)

    def test_dbpc_mirror_regions(self):
        c1 = region_boundary(RegionSpec(Region.DBPC1, 41))
        c2 = region_boundary(RegionSpec(Region.DBPC2, 41))
        for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
            assert support_value(c1, lam) == pytest.approx(support_value(c2, 1 - lam), abs=1e-12)

    def test_cover_leung_curve_is_hulled(self, cl_curve):
        pts = cl_curve.points
        # concavity of the frontier: each interior point on or above its chord
        for i in range(1, len(pts) - 1):
            x0, y0 = pts[i - 1]
            x1, y1 = pts[i]
            x2, y2 = pts[i + 1]
            chord = y0 + (y2 - y0) * (x1 - x0) / (x2 - x0)
            assert y1 >= chord - 1e-9

    def test_dbpc_symmetric_support_matches_balance_point(self, dbpc_curve):
        assert support_value(dbpc_curve, 0.5) == pytest.approx(0.45330, abs=1e-4)

    def test_erasure_fb_small_grid_sane(self):
        curve = region_boundary(RegionSpec(Region.ERASURE_FB, 51))
        assert support_value(curve, 1.0) == pytest.approx(1.0, abs=1e-9)
        assert support_value(curve, 0.5) == pytest.approx(0.791132, abs=1e-3)
