"""Tests for closed-form best responses and the jammer's cost thresholds."""

import math
from dataclasses import replace

import numpy as np
import pytest

from jamgame import (
    DomainError,
    GameParams,
    best_response_jammer,
    best_response_target,
    chi,
    psi,
    thresholds,
    utilities_xy,
    x_hat,
)
from conftest import random_params
from oracles import decimal_chi, newton_w_principal

# Frozen oracle values, Table-1 physics (see tests/oracles.py):
PSI_AT_0 = 1.808628537617992            # Newton oracle, W(30/e)
BT_AT_0 = 1.658715395451558e-05          # delta * e^(psi(0) + 1)
CHI_5E4_CT1E6 = 0.0018522841430311245    # Decimal oracle
BJ_2DELTA_CT1E6 = 0.0006911067811865476  # Decimal oracle
XHAT_CT1E6 = 0.0003508415801293142       # Newton oracle
CTT_TABLE1 = 3733932641.001237           # threshold via Newton-oracle omega
CTM_TABLE1 = 22542110013.890057          # direct arithmetic


def test_psi_values(table1):
    assert psi(table1, 0.0) == pytest.approx(PSI_AT_0, rel=1e-12)
    # monotone increasing
    ys = np.linspace(0.0, 1e-2, 500)
    assert np.all(np.diff(psi(table1, ys)) > 0)
    # degenerate geometry making the W argument exactly e, so psi = 1
    p = replace(table1, delta=2 * table1.t_aj / math.e**2)
    assert psi(p, 0.0) == pytest.approx(1.0, rel=1e-12)


def test_psi_rejects_negative_y(table1):
    with pytest.raises(DomainError):
        psi(table1, -1e-9)


def test_chi_values(table1):
    # log term vanishes at x = delta
    assert chi(table1, table1.delta) == -table1.t_aj - table1.delta / 2.0
    assert chi(table1, 5e-4) == pytest.approx(CHI_5E4_CT1E6, rel=1e-12)
    with pytest.raises(DomainError):
        chi(table1, 0.5 * table1.delta)


def test_chi_peaks_at_x_hat(table1):
    xh = x_hat(table1)
    assert xh == pytest.approx(XHAT_CT1E6, rel=1e-12)
    c0 = chi(table1, xh)
    assert chi(table1, xh * (1 + 1e-3)) < c0
    assert chi(table1, xh * (1 - 1e-3)) < c0
    # first central difference ~ 0 at the peak
    h = 1e-7 * xh
    slope = (chi(table1, xh + h) - chi(table1, xh - h)) / (2 * h)
    assert abs(slope) < 1e-4


def test_x_hat_limits(table1):
    # enormous energy cost drives the peak down to delta (W(0) = 0)
    p = replace(table1, c_t=1e18)
    assert x_hat(p) == pytest.approx(p.delta, rel=1e-3)


def test_best_response_target_values(table1):
    assert best_response_target(table1, 0.0) == pytest.approx(BT_AT_0, rel=1e-12)
    ys = np.logspace(-7, -2, 50)
    bt = best_response_target(table1, ys)
    assert np.all(np.diff(bt) > 0)
    assert np.all(bt > 2 * table1.delta)


def test_best_response_target_grid_optimality(table1):
    y = 2.8e-4
    bt = best_response_target(table1, y)
    grid = np.logspace(np.log10(2 * table1.delta), np.log10(100 * bt), 4001)
    u = utilities_xy(table1, grid, y)[0]
    k = int(np.argmax(u))
    # true optimum beats every grid point and sits within one grid step
    assert utilities_xy(table1, bt, y)[0] >= u[k]
    step = grid[min(k + 1, len(grid) - 1)] / grid[k]
    assert grid[k] / step <= bt <= grid[k] * step


def test_best_response_jammer_values(table1):
    assert best_response_jammer(table1, 2e-6) == pytest.approx(BJ_2DELTA_CT1E6, rel=1e-12)
    # clamp: chi < 0 for an inhibited jammer
    p = replace(table1, c_t=8e9)
    assert best_response_jammer(p, float(best_response_target(p, 0.0))) == 0.0
    with pytest.raises(DomainError):
        best_response_jammer(table1, 1.5e-6)


def test_jammer_inhibited_above_c_t_max(table1):
    th = thresholds(table1)
    p = replace(table1, c_t=1.01 * th.c_t_max)
    grid = np.logspace(np.log10(2 * p.delta), -1, 2000)
    assert np.all(best_response_jammer(p, grid) == 0.0)
    assert np.max(chi(p, grid)) < 0


def test_thresholds_values(table1):
    th = thresholds(table1)
    assert th.c_t_max == pytest.approx(CTM_TABLE1, rel=1e-12)
    assert th.c_t_tilde == pytest.approx(CTT_TABLE1, rel=1e-12)
    assert th.c_t_max > 0 and th.c_t_tilde > 0


def test_chi_sign_structure_over_sweep(table1):
    # across the studied weight range the positive region of chi is an
    # interval straddling x_hat: negative hard against delta, positive at
    # the peak, negative again far out
    from jamgame.nash import _chi_positive_interval

    for c_t in np.logspace(5, 9, 9):
        p = replace(table1, c_t=float(c_t))
        xh = x_hat(p)
        assert chi(p, xh) > 0
        assert chi(p, p.delta * (1 + 1e-9)) < 0
        x1, x2 = _chi_positive_interval(p)
        assert p.delta < x1 < xh < x2
        assert chi(p, 10 * x2) < 0
        # sign changes across both roots
        assert chi(p, x1 * (1 - 1e-6)) < 0 < chi(p, x1 * (1 + 1e-6))
        assert chi(p, x2 * (1 - 1e-6)) > 0 > chi(p, x2 * (1 + 1e-6))


def test_bj_bounded_by_value_at_x_hat(table1):
    xh = x_hat(table1)
    cap = best_response_jammer(table1, xh)
    grid = np.logspace(np.log10(2 * table1.delta), 0, 3000)
    assert np.all(best_response_jammer(table1, grid) <= cap + 1e-18)


def test_best_response_optimality_random_params(rng):
    for _ in range(100):
        p = random_params(rng)
        y = float(rng.uniform(0.0, 50.0 * p.t_aj))
        bt = float(best_response_target(p, y))
        grid = np.logspace(np.log10(2 * p.delta), np.log10(100 * bt), 2000)
        assert utilities_xy(p, bt, y)[0] >= np.max(utilities_xy(p, grid, y)[0])

        x = float(rng.uniform(2 * p.delta, 20 * bt))
        bj = float(best_response_jammer(p, x))
        y_hi = max(10 * float(best_response_jammer(p, x_hat(p))), 10 * p.t_aj)
        ygrid = np.linspace(0.0, y_hi, 2000)
        assert utilities_xy(p, x, bj)[1] >= np.max(utilities_xy(p, x, ygrid)[1])


def test_chi_matches_decimal_oracle_random_points(rng):
    for _ in range(20):
        p = random_params(rng)
        x = float(rng.uniform(2 * p.delta, 1e3 * p.delta))
        expected = decimal_chi(repr(x), repr(p.t_aj), repr(p.delta), repr(p.c_t), repr(p.p_j))
        assert chi(p, x) == pytest.approx(expected, rel=1e-10, abs=1e-18)


def test_psi_matches_newton_oracle_random_points(rng):
    for _ in range(20):
        p = random_params(rng)
        y = float(rng.uniform(0.0, 1e3 * p.delta))
        z = 2.0 * (p.t_aj + y) / (math.e * p.delta)
        assert psi(p, y) == pytest.approx(newton_w_principal(z), rel=1e-12)
