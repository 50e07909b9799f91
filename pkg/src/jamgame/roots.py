"""Minimal guarded root bracketing used by the equilibrium solvers."""

from __future__ import annotations

from .errors import BracketError

__all__ = ["bisect_bracket", "grow_until_negative"]


def bisect_bracket(f, lo: float, hi: float, xtol: float):
    """Shrink a sign-change bracket [lo, hi] of f until hi - lo <= xtol.

    Returns the final (lo, hi).  f(lo) and f(hi) must have opposite signs
    (zero counts as either side).
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo, lo
    if fhi == 0.0:
        return hi, hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo:g}, {hi:g}]")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket hit float resolution
            break
        fm = f(mid)
        if fm == 0.0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo, hi


def grow_until_negative(f, start: float, factor: float = 2.0, max_steps: int = 200):
    """Geometrically grow x from start until f(x) < 0; returns that x."""
    x = start
    for _ in range(max_steps):
        x *= factor
        if f(x) < 0.0:
            return x
    raise BracketError(f"f stayed >= 0 out to {x:g}; parameters look corrupted")
