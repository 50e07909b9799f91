"""Nash equilibrium: closed form, best-response dynamics, certificate.

The game has exactly one Nash equilibrium.  For cheap jamming (small c_t) it
is interior: the jammer keeps a positive mean burst length.  Past the weight
threshold c_t_tilde it collapses onto the border y = 0.  Iterating both
closed-form best responses simultaneously walks any starting profile into
the same point within a handful of steps; when a sufficient condition on
c_t holds, that convergence comes with a worst-case iteration certificate.

Run:  python demos/02_nash_and_dynamics.py
"""

from dataclasses import replace

from jamgame import GameParams, StrategyProfile, brd, convergence_certificate, nash_closed_form

p = GameParams(t_aj=15e-6, delta=1e-6, p_t=2.0, p_j=2.0, t_p=50e-6, c_t=1e6)

ne = nash_closed_form(p)
print(f"c_t = {p.c_t:g}: {ne.regime.value} equilibrium")
print(f"  x* = {ne.profile.x:.6e} s, y* = {ne.profile.y:.6e} s")
print(f"  u_t = {ne.utilities.u_t:.1f} bit/s, u_j = {ne.utilities.u_j:.1f} bit/s")

start = StrategyProfile(x=5e-4, y=2.8e-4)
trace = brd(p, start)
print(f"\nbest-response dynamics from (x, y) = ({start.x:g}, {start.y:g}):")
for i, s in enumerate(trace.iterates[:8]):
    print(f"  iterate {i}: x = {s.x:.6e}, y = {s.y:.6e}")
print(f"  ... converged = {trace.converged} after {trace.iterations_used} iterations "
      f"(tolerance 1e-12 on the clock-scaled step)")

# an energy-conscious jammer makes the map a certified contraction
p_hi = replace(p, c_t=5e8)
cert = convergence_certificate(p_hi, epsilon=1e-9, start=start)
print(f"\ncertificate at c_t = {p_hi.c_t:g}:")
print(f"  sufficient condition holds: {cert.condition_ct_holds}")
print(f"  worst best-response slope over the absorbing box: {cert.jb_max:.4f}")
print(f"  predicted iterations to a 1e-9 step: {cert.predicted_max_iterations}")
t = brd(p_hi, start, tol=1e-9)
print(f"  actually used: {t.iterations_used}")

# past the border threshold the jammer simply stops
p_border = replace(p, c_t=8e9)
ne_b = nash_closed_form(p_border)
print(f"\nc_t = {p_border.c_t:g}: {ne_b.regime.value} equilibrium at "
      f"x* = {ne_b.profile.x:.6e} s, y* = {ne_b.profile.y:g}")
