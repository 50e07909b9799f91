"""Closed-form best responses of both players and the jammer's cost thresholds.

Both best responses come from first-order conditions.  The target's optimum
has the Lambert-W form b_t(y) = delta * e^(psi(y)+1); the jammer's optimum is
the clamp b_j(x) = max(chi(x), 0), where chi trades capacity damage against
energy spent jamming.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .lambertw import WBranch, lambert_w
from .model import GameParams

__all__ = [
    "Thresholds",
    "psi",
    "chi",
    "best_response_target",
    "best_response_jammer",
    "x_hat",
    "thresholds",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class Thresholds:
    """Two critical values of the jammer's weight c_t.

    c_t_max   -- above this the jammer never jams: chi < 0 for every x, so
                 its best response is identically zero.
    c_t_tilde -- above this the Nash equilibrium sits on the border y = 0;
                 below it the equilibrium is interior with active jamming.

    No ordering between the two is asserted; both are reported as computed.
    """

    c_t_max: float
    c_t_tilde: float


def psi(p: GameParams, y):
    """Principal-branch W of 2*(t_aj + y) / (e * delta); positive for y >= 0."""
    if isinstance(y, (float, int)):
        if y < 0:
            raise DomainError("psi requires y >= 0")
        return lambert_w(2.0 * (p.t_aj + float(y)) / (math.e * p.delta), WBranch.PRINCIPAL)
    if np.any(np.asarray(y) < 0):
        raise DomainError("psi requires y >= 0")
    y = np.asarray(y, dtype=float)
    return lambert_w(2.0 * (p.t_aj + y) / (math.e * p.delta), WBranch.PRINCIPAL)


def chi(p: GameParams, x):
    """sqrt(ln(x/delta)/eta) - t_aj - x/2, the jammer's unclamped optimum.

    Defined for x >= delta (nonnegative log).  Where chi < 0 the jammer
    prefers not to jam at all.
    """
    if isinstance(x, (float, int)):
        if x < p.delta:
            raise DomainError("chi requires x >= delta")
        return math.sqrt(math.log(x / p.delta) / p.eta) - p.t_aj - x / 2.0
    x = np.asarray(x, dtype=float)
    if np.any(x < p.delta):
        raise DomainError("chi requires x >= delta")
    out = np.sqrt(np.log(x / p.delta) / p.eta) - p.t_aj - x / 2.0
    return float(out) if out.ndim == 0 else out


def best_response_target(p: GameParams, y):
    """Capacity-maximizing silence bound against mean jam duration y.

    Equals delta * e^(psi(y)+1); strictly increasing in y and always > 2*delta
    for t_aj > 0.
    """
    if isinstance(y, (float, int)):
        return p.delta * math.exp(psi(p, y) + 1.0)
    out = p.delta * np.exp(psi(p, y) + 1.0)
    return float(out) if np.ndim(out) == 0 else out


def best_response_jammer(p: GameParams, x):
    """Utility-maximizing mean jam duration against silence bound x: max(chi, 0)."""
    if isinstance(x, (float, int)):
        if x < 2.0 * p.delta:
            raise DomainError("best_response_jammer requires x >= 2*delta")
        return max(chi(p, float(x)), 0.0)
    if np.any(np.asarray(x) < 2.0 * p.delta):
        raise DomainError("best_response_jammer requires x >= 2*delta")
    out = np.maximum(chi(p, x), 0.0)
    return float(out) if np.ndim(out) == 0 else out


def x_hat(p: GameParams) -> float:
    """Location of the maximum of chi: delta * e^(W(2/(eta*delta^2))/2).

    chi increases below this point and decreases above it, so any positive
    region of chi is an interval straddling x_hat.
    """
    w = lambert_w(2.0 / (p.eta * p.delta**2), WBranch.PRINCIPAL)
    return p.delta * math.exp(0.5 * w)


def thresholds(p: GameParams) -> Thresholds:
    """Compute both critical weights for the current physical parameters."""
    c_t_max = 1.0 / (p.p_j * _LN2 * 2.0 * p.delta * (p.delta + p.t_aj))
    omega = float(psi(p, 0.0))
    c_t_tilde = (
        4.0
        / (p.delta**2 * p.p_j * _LN2)
        * math.exp(-2.0 * (omega + 1.0))
        / (omega + 1.0)
    )
    return Thresholds(c_t_max=c_t_max, c_t_tilde=c_t_tilde)
