import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jamgame import GameParams


@pytest.fixture
def table1() -> GameParams:
    """Lab scenario: 15 us reaction delay, 1 us clocks, 2 W, 50 us packets."""
    return GameParams(
        t_aj=15e-6, delta=1e-6, p_t=2.0, p_j=2.0, t_p=50e-6, c_t=1e6, c_t_star=0.0
    )


@pytest.fixture
def table2() -> GameParams:
    """Simulation scenario: strongly energy-constrained jammer, border NE."""
    return GameParams(
        t_aj=15e-6, delta=1e-6, p_t=2.0, p_j=2.0, t_p=20e-6, c_t=8e9, c_t_star=1e6
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def random_params(rng: np.random.Generator, c_t_factor_range=(-3.0, 1.2)) -> GameParams:
    """Physically sensible random parameters spanning both NE regimes.

    t_aj/delta stays >= ~6 so the contraction analysis regime of the game
    (reaction delay well above clock precision) is respected.
    """
    from jamgame import thresholds

    delta = 10.0 ** rng.uniform(-7.0, -5.5)
    t_aj = delta * 10.0 ** rng.uniform(0.8, 2.0)
    p_j = 10.0 ** rng.uniform(-0.5, 1.0)
    p_t = 10.0 ** rng.uniform(-0.5, 1.0)
    base = GameParams(t_aj=t_aj, delta=delta, p_t=p_t, p_j=p_j, t_p=1e-5, c_t=1.0)
    tilde = thresholds(base).c_t_tilde
    c_t = tilde * 10.0 ** rng.uniform(*c_t_factor_range)
    return GameParams(t_aj=t_aj, delta=delta, p_t=p_t, p_j=p_j, t_p=1e-5, c_t=c_t)
