import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macfb.infofn import (
    DomainError,
    InvalidDistributionError,
    binary_entropy,
    entropy_k,
    f2,
    f2_hessian,
    g_fn,
    mu_fn,
    phi,
    phi_inv,
    xi,
)

LOG2_3 = math.log2(3.0)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
half = st.floats(min_value=0.0, max_value=0.5, allow_nan=False)
quarter = st.floats(min_value=0.0, max_value=0.25, allow_nan=False)


class TestEntropyK:
    def test_uniform_binary(self):
        assert entropy_k([0.5, 0.5]) == pytest.approx(1.0, abs=1e-15)

    def test_degenerate(self):
        assert entropy_k([1.0, 0.0, 0.0]) == 0.0

    def test_uniform_ternary(self):
        assert entropy_k([1 / 3, 1 / 3, 1 / 3]) == pytest.approx(LOG2_3, abs=1e-12)

    @pytest.mark.parametrize(
        "bad", [[0.5, 0.4], [0.5, 0.6], [-0.1, 1.1], [2.0, -1.0], []]
    )
    def test_invalid_distributions(self, bad):
        with pytest.raises(InvalidDistributionError):
            entropy_k(bad)

    def test_negative_within_tolerance_is_clamped(self):
        assert entropy_k([1.0 + 5e-13, -5e-13]) == pytest.approx(0.0, abs=1e-10)


class TestBinaryEntropy:
    def test_half(self):
        assert binary_entropy(0.5) == 1.0

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_one_third(self):
        # -(1/3)log(1/3) - (2/3)log(2/3) = log 3 - 2/3
        assert binary_entropy(1 / 3) == pytest.approx(LOG2_3 - 2 / 3, abs=1e-12)
        assert binary_entropy(1 / 3) == pytest.approx(0.918296, abs=1e-6)

    @given(unit)
    def test_symmetric(self, s):
        assert binary_entropy(s) == pytest.approx(binary_entropy(1.0 - s), abs=1e-12)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            binary_entropy(1.1)
        with pytest.raises(DomainError):
            binary_entropy(-0.1)

    def test_clamps_small_drift(self):
        assert binary_entropy(-1e-13) == 0.0
        assert binary_entropy(1.0 + 1e-13) == 0.0

    def test_vectorized(self):
        out = binary_entropy(np.array([0.0, 0.5, 1.0]))
        assert np.allclose(out, [0.0, 1.0, 0.0])


class TestPhi:
    def test_zero(self):
        assert phi(0.0) == 0.0

    def test_branches_meet_at_half(self):
        assert phi(0.5) == 0.5
        assert phi(0.5 - 1e-12) == pytest.approx(0.5, abs=1e-5)
        assert phi(0.5 + 1e-12) == pytest.approx(0.5, abs=1e-5)

    def test_witness_flip_probability(self):
        # q20 = phi(2 u2) with u2 = 0.218333 comes out at 0.322050
        assert phi(2 * 0.218333) == pytest.approx(0.322050, abs=1e-5)

    @given(unit)
    def test_range(self, s):
        assert 0.0 <= phi(s) <= 0.5

    @given(unit)
    @settings(max_examples=300)
    def test_folding_identity(self, s):
        # sqrt((1-2s)^2) is ill-conditioned right at the fold; float noise
        # there is not a property violation
        if abs(s - 0.5) < 1e-4:
            s = 0.25
        assert phi(2 * s * (1 - s)) == pytest.approx(min(s, 1 - s), abs=1e-12)

    @given(unit)
    def test_entropy_composition_identity(self, s):
        assert binary_entropy(phi(2 * s * (1 - s))) == pytest.approx(
            binary_entropy(s), abs=1e-9
        )

    @given(half)
    def test_phi_inv_roundtrip(self, y):
        if abs(y - 0.5) < 1e-4:  # fold-point conditioning, as above
            y = 0.125
        assert phi(phi_inv(y)) == pytest.approx(y, abs=1e-12)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            phi(-0.2)
        with pytest.raises(DomainError):
            phi_inv(0.7)


class TestF2:
    def test_zero(self):
        assert f2(0.0, 0.0) == 0.0

    @given(half)
    def test_saturates_at_half(self, y):
        assert f2(0.5, y) == 0.5

    def test_balance_point_value(self):
        assert f2(2 * 0.086063, 2 * 0.218333) == pytest.approx(0.355899, abs=1e-5)

    @given(half, half)
    def test_two_forms_agree(self, x, y):
        composed = phi(x) + phi(y) - 2.0 * phi(x) * phi(y)
        assert f2(x, y) == pytest.approx(composed, abs=1e-12)

    @given(half, half)
    def test_symmetric_and_bounded(self, x, y):
        assert f2(x, y) == f2(y, x)
        assert 0.0 <= f2(x, y) <= 0.5

    def test_midpoint_convexity_sampled(self, rng):
        x, y, xp, yp = rng.uniform(0.0, 0.5, (4, 50_000))
        mid = f2((x + xp) / 2, (y + yp) / 2)
        avg = (f2(x, y) + f2(xp, yp)) / 2
        assert float((mid - avg).max()) <= 1e-12

    def test_pairwise_noise_lower_bound_sampled(self, rng):
        s1, s2 = rng.uniform(1e-3, 1.0 - 1e-3, (2, 50_000))
        v = s1 + s2 - 2 * s1 * s2
        assert float((f2(2 * s1 * (1 - s1), 2 * s2 * (1 - s2)) - v).max()) <= 1e-12

    @given(quarter, quarter)
    def test_dominates_linear_sum(self, u1, u2):
        assert f2(2 * u1, 2 * u2) >= u1 + u2 - 1e-12

    def test_hessian_rank_one_psd(self, rng):
        for x, y in rng.uniform(0.0, 0.49, (300, 2)):
            h = f2_hessian(x, y)
            eig = np.linalg.eigvalsh(h)
            assert abs(np.linalg.det(h)) <= 1e-9
            assert eig[0] >= -1e-9
            assert eig[1] == pytest.approx(np.trace(h), abs=1e-9)
            assert np.trace(h) >= 0.0

    def test_hessian_domain(self):
        with pytest.raises(DomainError):
            f2_hessian(0.5, 0.1)


class TestG:
    def test_origin(self):
        assert g_fn(0.0, 0.0) == 0.5

    def test_balance_point(self):
        assert g_fn(0.086063, 0.218333) == pytest.approx(0.45330, abs=1e-5)

    def test_corner(self):
        # f2(1/2, 1/2) = 1/2 and h(1/4) = 2 - (3/4) log 3
        h_quarter = 2.0 - 0.75 * LOG2_3
        assert g_fn(0.25, 0.25) == pytest.approx(0.5 * h_quarter, abs=1e-12)
        assert g_fn(0.25, 0.25) == pytest.approx(0.405639, abs=1e-6)

    def test_monotone_decreasing_sampled(self, rng):
        u1, u2, bump = rng.uniform(0.0, 0.25, (3, 50_000))
        higher = np.minimum(u1 + bump, 0.25)
        assert float((g_fn(higher, u2) - g_fn(u1, u2)).max()) <= 1e-12

    def test_midpoint_concavity_sampled(self, rng):
        a1, a2, b1, b2 = rng.uniform(0.0, 0.25, (4, 50_000))
        mid = g_fn((a1 + b1) / 2, (a2 + b2) / 2)
        avg = (g_fn(a1, a2) + g_fn(b1, b2)) / 2
        assert float((avg - mid).max()) <= 1e-12

    @given(quarter, quarter)
    def test_xi_relation(self, u1, u2):
        assert g_fn(u1, u2) == pytest.approx(0.5 * binary_entropy(xi(u1, u2)), abs=1e-14)


class TestMu:
    def test_endpoints(self):
        assert mu_fn(0.0) == 1.0
        assert mu_fn(1.0) == 0.0

    def test_peak_value(self):
        assert mu_fn(1 / 3) == pytest.approx(LOG2_3, abs=1e-12)

    def test_argmax_on_fine_grid(self):
        grid = np.linspace(0.0, 1.0, 1_000_000)
        argmax = grid[int(np.argmax(mu_fn(grid)))]
        assert abs(argmax - 1 / 3) <= 1e-5

    def test_midpoint_concavity_sampled(self, rng):
        x, y = rng.uniform(0.0, 1.0, (2, 50_000))
        assert float(((mu_fn(x) + mu_fn(y)) / 2 - mu_fn((x + y) / 2)).max()) <= 1e-12

    def test_domain_error(self):
        with pytest.raises(DomainError):
            mu_fn(1.5)
