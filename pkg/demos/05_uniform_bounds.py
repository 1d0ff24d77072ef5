# %% [markdown]
# Uniform coefficient bounds
# ==========================
# If |a_n| + |b_n| <= c for n >= 2, the univalence radius has a closed form at
# lam = 0, and for lam > 0 it is the zero of a cubic.  The extremal f0 puts all
# the coefficient mass at its bound; its Jacobian on the real axis vanishes
# right at the radius.

# %%
import numpy as np

from harmonic_radius import (
    ProblemFamily, RadiusProblem, closed_form_uniform_radius,
    jacobian_F0_closed_form, solve_radius,
)

print(" c     b1    closed form   polynomial")
for c in (0.25, 1.0, 2.0):
    for b1 in (0.0, 0.5):
        root = solve_radius(RadiusProblem(ProblemFamily.UNIFORM_PHI, c=c, b1=b1)).root
        print(f"{c:4.2f}  {b1:4.2f}  {closed_form_uniform_radius(c, b1):.10f}  {root:.10f}")

# %%
c, b1 = 1.0, 0.5
for lam in (0.0, 0.5, 1.0, 2.0):
    res = solve_radius(RadiusProblem(ProblemFamily.UNIFORM_PHI, c=c, b1=b1, lam=lam))
    r = res.root
    J = [jacobian_F0_closed_form(c, b1, lam, x) for x in (0.9 * r, r, 1.1 * r)]
    flag = "" if res.sharpness_tested else "  (lam > 1: sufficient only)"
    print(f"lam={lam:3.1f}  r={r:.8f}  J(0.9r, r, 1.1r) = {np.round(J, 10)}{flag}")
