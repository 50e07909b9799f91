"""Leader play under an uncertain jammer cost weight.

The target does not know the true weight c_t, only a prior for it.  It picks
an assumed weight xi, commits to the corresponding Stackelberg strategy
g(xi), and the true jammer best-responds.  This module evaluates the realized
utility of that play, its expectation under a uniform prior (by quadrature
and by the printed closed form, kept as two independent routes), the
expectation-maximizing assumed weight, and the resulting efficiency relative
to perfect knowledge.

Everything here runs on the zero-transmit-cost convention (the constant
c_t_star term cancels from every comparison of interest).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

from scipy.integrate import quad

from .errors import DegenerateUtility, DomainError, InvalidParams
from .lambertw import WBranch, lambert_w
from .model import GameParams
from .stackelberg import leader_loss_bracket_width, stackelberg_exact

__all__ = [
    "UniformPrior",
    "g_of_xi",
    "realized_utility",
    "expected_utility_numeric",
    "expected_utility_closed",
    "xi_opt",
    "efficiency",
    "foc_residual",
]

_LN2 = math.log(2.0)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class UniformPrior:
    """Uniform density for the jammer weight on [xi_min, xi_max]."""

    xi_min: float
    xi_max: float

    def __post_init__(self):
        if not (0 < self.xi_min < self.xi_max):
            raise InvalidParams(f"need 0 < xi_min < xi_max, got ({self.xi_min!r}, {self.xi_max!r})")

    @property
    def density(self) -> float:
        return 1.0 / (self.xi_max - self.xi_min)


@lru_cache(maxsize=1024)
def _committed_x(p_assumed: GameParams) -> float:
    # High-precision leader strategy for the assumed weight: the default
    # loss-bound bracket tightened 1000x, so downstream identities that rely
    # on chi(g) = 0 hold to ~1e-10 relative.
    return stackelberg_exact(p_assumed, x_tol=1e-3 * leader_loss_bracket_width(p_assumed)).profile.x


def g_of_xi(p: GameParams, xi: float) -> float:
    """Leader strategy if the jammer's weight were xi.

    The larger zero of chi evaluated with weight xi, or b_t(0) when xi is
    large enough that jamming is inhibited there.  Decreasing in xi.
    """
    if not (xi > 0 and math.isfinite(xi)):
        raise DomainError(f"xi must be positive and finite, got {xi!r}")
    return _committed_x(replace(p, c_t=xi))


def realized_utility(p: GameParams, xi: float) -> float:
    """Target utility when it plays g(xi) but the true weight is p.c_t.

    Overestimating the weight (xi > c_t) leaves the channel jammed:
    sqrt(c_t * p_j * log2(g/delta)), with the true c_t under the root and the
    assumed xi inside g.  Underestimating (xi <= c_t) overshoots the silence
    bound but silences the jammer: plain capacity at y = 0.
    """
    g = g_of_xi(p, xi)
    log2g = math.log2(g / p.delta)
    if xi > p.c_t:
        return math.sqrt(p.c_t * p.p_j * log2g)
    return log2g / (p.t_aj + g / 2.0)


def expected_utility_numeric(p: GameParams, prior: UniformPrior, xi: float) -> float:
    """Prior-expected utility of committing to g(xi), by adaptive quadrature.

    Integrates the realized utility against the prior density, split at the
    branch point alpha = xi.  This is the authoritative route; the closed
    form below is checked against it.
    """
    g = g_of_xi(p, xi)
    log2g = math.log2(g / p.delta)
    a, b = prior.xi_min, prior.xi_max
    dens = prior.density
    split = min(max(xi, a), b)

    total = 0.0
    if split > a:
        val, _ = quad(
            lambda alpha: math.sqrt(alpha * p.p_j * log2g) * dens,
            a,
            split,
            epsabs=0.0,
            epsrel=1e-10,
            limit=200,
        )
        total += val
    if b > split:
        free = log2g / (p.t_aj + g / 2.0) * dens
        val, _ = quad(lambda alpha: free, split, b, epsabs=0.0, epsrel=1e-10, limit=200)
        total += val
    return total


def expected_utility_closed(p: GameParams, prior: UniformPrior, xi: float) -> float:
    """Closed form of the prior-expected utility on the prior support.

    p_j * (t_aj + g(xi)/2) / (xi_max - xi_min)
        * [xi*xi_max - xi^2/3 - (2/3)*sqrt(xi)*xi_min^(3/2)]

    Implemented exactly as derived; agreement with the quadrature route is a
    test-suite concern, not silently patched here.
    """
    if not (prior.xi_min <= xi <= prior.xi_max):
        raise DomainError(f"xi={xi!r} outside prior support [{prior.xi_min}, {prior.xi_max}]")
    g = g_of_xi(p, xi)
    bracket = xi * prior.xi_max - xi**2 / 3.0 - (2.0 / 3.0) * math.sqrt(xi) * prior.xi_min**1.5
    return p.p_j * (p.t_aj + g / 2.0) * prior.density * bracket


def xi_opt(p: GameParams, prior: UniformPrior, grid_points: int = 241) -> float:
    """Assumed weight maximizing the expected utility over the prior support.

    Coarse log-grid scan refined by golden-section search.  A boundary
    maximizer is a legitimate outcome and is returned as such.
    """
    a, b = prior.xi_min, prior.xi_max
    ratio = (b / a) ** (1.0 / (grid_points - 1))
    grid = [a * ratio**k for k in range(grid_points)]
    grid[-1] = b
    vals = [expected_utility_closed(p, prior, x) for x in grid]
    k = max(range(grid_points), key=vals.__getitem__)

    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, grid_points - 1)]
    f = lambda x: expected_utility_closed(p, prior, x)
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > 1e-10 * b:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def efficiency(p: GameParams, xi: float) -> float:
    """Realized utility under assumed weight xi relative to perfect knowledge."""
    denom = realized_utility(p, p.c_t)
    if denom <= 0.0:
        raise DegenerateUtility(f"perfect-knowledge utility is non-positive ({denom:g})")
    return realized_utility(p, xi) / denom


def foc_residual(p: GameParams, prior: UniformPrior, xi: float) -> float:
    """Relative residual of the printed first-order condition for xi_opt.

    That condition was derived with the closed-form approximate leader
    strategy and with t_aj dropped against g/2, so it is exact only in that
    approximated model; this helper exists to quantify the gap.  Uses the
    lower W branch, the one that selects the root above x_hat.
    """
    w = lambert_w(-p.p_j * _LN2 * p.delta**2 * xi / 2.0, WBranch.MINUS1)
    tail = (2.0 / 3.0) * prior.xi_min**1.5 / math.sqrt(xi)
    lhs = (w / (1.0 + w)) * (prior.xi_max - xi / 3.0 - tail)
    rhs = 2.0 * prior.xi_max - (4.0 / 3.0) * xi - tail
    return (lhs - rhs) / max(abs(lhs), abs(rhs))
