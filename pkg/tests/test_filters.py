import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from vpwave.chebyshev import eval_p, y_nodes
from vpwave.filters import (
    VPLevel,
    detail_norm_sq,
    detail_norms_sq,
    detail_transform,
    detail_transform_entry,
    lowpass_weight,
    lowpass_weights,
    scaling_norm_sq,
    scaling_norms_sq,
    scaling_transform,
    scaling_transform_entry,
    wavelet_interp_weight,
    wavelet_interp_weights,
)

L136 = VPLevel(13, 6)


def test_level_validation():
    with pytest.raises(ValueError):
        VPLevel(5, 5)
    with pytest.raises(ValueError):
        VPLevel(5, 0)
    assert VPLevel.from_theta(13, 0.5) == VPLevel(13, 6)
    with pytest.raises(ValueError):
        VPLevel.from_theta(13, 1.0)


def test_lowpass_values():
    assert lowpass_weight(L136, 5) == 1.0
    assert lowpass_weight(L136, 13) == 0.5
    assert lowpass_weight(L136, 18) == pytest.approx(1 / 12)
    assert lowpass_weight(L136, 19) == 0.0
    assert lowpass_weight(L136, 1000) == 0.0
    with pytest.raises(ValueError):
        lowpass_weight(L136, -1)


def test_scaling_norm_values():
    assert scaling_norm_sq(L136, 7) == 1.0
    assert scaling_norm_sq(L136, 12) == pytest.approx(37 / 72)
    assert scaling_norm_sq(L136, 8) == pytest.approx(61 / 72)
    with pytest.raises(ValueError):
        scaling_norm_sq(L136, 13)


def test_detail_norm_values():
    assert detail_norm_sq(L136, 13) == 1.0
    assert detail_norm_sq(L136, 14) == pytest.approx(37 / 72)
    assert detail_norm_sq(L136, 38) == pytest.approx(37 / 72)
    with pytest.raises(ValueError):
        detail_norm_sq(L136, 39)
    with pytest.raises(ValueError):
        detail_norm_sq(L136, 12)


def test_lowpass_complementarity_on_ramp():
    # mu_r + mu_{2n-r} = 1 strictly inside the ramp
    n, m = 13, 6
    mu = lowpass_weights(L136)
    for r in range(n - m + 1, n):
        assert mu[r] + mu[2 * n - r] == pytest.approx(1.0, abs=1e-15)


def test_norm_is_sum_of_squared_ramp_weights():
    n, m = 13, 6
    mu = lowpass_weights(L136)
    nus = scaling_norms_sq(L136)
    for r in range(n - m + 1, n):
        assert nus[r] == pytest.approx(mu[r] ** 2 + mu[2 * n - r] ** 2, abs=1e-15)


def test_detail_tail_matches_refined_scaling_norms():
    # upper ramp of the detail norms coincides with the level-(3n, m) table
    n, m = 13, 6
    v = detail_norms_sq(L136)
    nu3 = scaling_norms_sq(VPLevel(3 * n, m))
    for r in range(3 * n - m + 1, 3 * n):
        assert v[r - n] == pytest.approx(nu3[r], abs=1e-15)


def test_families_stay_in_unit_interval():
    for level in (L136, VPLevel(40, 20), VPLevel(9, 2)):
        for arr in (lowpass_weights(level), scaling_norms_sq(level),
                    detail_norms_sq(level)):
            assert arr.min() >= 0.0 and arr.max() <= 1.0


def test_ramp_monotonicity():
    n, m = 40, 20
    level = VPLevel(n, m)
    mu = lowpass_weights(level)
    assert np.all(np.diff(mu[n - m:]) <= 0)
    nus = scaling_norms_sq(level)
    assert np.all(np.diff(nus[n - m:]) <= 0)
    v = detail_norms_sq(level)
    assert np.all(np.diff(v[1: m + 1]) >= 0)     # entry ramp climbs back to 1
    assert np.all(np.diff(v[2 * n - m:]) <= 0)   # exit ramp falls toward 1/2


def test_scaling_transform_row_zero():
    lvl = VPLevel(4, 2)
    assert_allclose(scaling_transform(lvl)[0], np.full(4, 0.5), rtol=0, atol=1e-15)


def test_scaling_transform_row_orthogonality():
    t = scaling_transform(L136)
    gram = t @ t.T
    assert np.abs(gram - np.diag(1.0 / scaling_norms_sq(L136))).max() < 1e-12


def test_scaling_transform_entry_formula():
    from vpwave.chebyshev import cheb_nodes

    x1 = cheb_nodes(13).nodes[0]
    expected = math.sqrt(math.pi / (13 * 37 / 72)) * eval_p(12, x1)
    assert scaling_transform_entry(L136, 12, 1) == pytest.approx(expected, abs=1e-15)
    with pytest.raises(ValueError):
        scaling_transform_entry(L136, 13, 1)
    with pytest.raises(ValueError):
        scaling_transform_entry(L136, 3, 14)


def test_detail_transform_closed_form_entries():
    # (n, m) = (2, 1), degree n, first node: sqrt(pi/6) p_2(cos(pi/12)) = 1/2
    assert detail_transform_entry(VPLevel(2, 1), 2, 1) == pytest.approx(0.5, abs=1e-13)
    # (13, 6), degree 2n, first node: closed form sqrt(1/26)
    assert detail_transform_entry(L136, 26, 1) == pytest.approx(
        math.sqrt(1 / 26), abs=1e-13)
    with pytest.raises(ValueError):
        detail_transform_entry(L136, 12, 1)


def test_detail_transform_orthogonal():
    s = detail_transform(L136)
    assert np.abs(s @ s.T - np.eye(26)).max() < 1e-12


def test_wavelet_interp_weight_branches():
    n = 13
    y = y_nodes(n).nodes
    for k in (1, 9, 26):
        assert wavelet_interp_weight(L136, n, k) == pytest.approx(
            eval_p(n, y[k - 1]), abs=1e-15)
        expected = eval_p(2 * n, y[k - 1]) + math.sqrt(2) / math.sqrt(math.pi)
        assert wavelet_interp_weight(L136, 2 * n, k) == pytest.approx(expected, abs=1e-15)
    with pytest.raises(ValueError):
        wavelet_interp_weight(L136, 39, 1)
    assert wavelet_interp_weights(L136).shape == (26, 26)
