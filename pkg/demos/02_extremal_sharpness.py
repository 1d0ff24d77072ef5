# %% [markdown]
# Why the radii are sharp
# =======================
# The extremal functions have all coefficients aligned on the positive real
# axis, so the circle functionals are smallest at theta = 0 and hit the bound
# exactly at the radius.  Past the radius the Jacobian turns negative: the
# mapping is not even locally univalent there.

# %%
import numpy as np

from harmonic_radius import (
    ExtremalKind, ProblemFamily, RadiusProblem, boundary_arg_derivative,
    build_extremal, jacobian_DF_closed_form, jacobian_roots_scan, solve_radius,
)

for kind, r_max in ((ExtremalKind.SHARP_DF_BBHJ, 0.15), (ExtremalKind.SHARP_DF_CONVEX_HALF, 0.25)):
    scan = jacobian_roots_scan(kind, r_max, 2000)
    print(kind.value, "Jacobian roots:", ", ".join(f"{x:.7f}" for x in scan.roots))
    mid = 0.5 * sum(scan.roots)
    print(f"   J at the midpoint {mid:.4f}: {jacobian_DF_closed_form(kind, mid):+.4f}")

# %% [markdown]
# Order-alpha sharpness: at r_s(alpha) the angular derivative of arg f along the
# circle equals alpha at theta = 0.

# %%
f = build_extremal(ExtremalKind.SHARP_DF_BBHJ, 200)
for alpha in (0.0, 0.2, 0.5, 0.8):
    r = solve_radius(RadiusProblem(ProblemFamily.STARLIKE_BBHJ, alpha=alpha)).root
    print(f"alpha={alpha:.1f}  r_s={r:.8f}  d/dtheta arg f = {boundary_arg_derivative(f, r, 0.0):.12f}")

# %% [markdown]
# Sweeping theta confirms the minimum sits on the real axis.

# %%
r = solve_radius(RadiusProblem(ProblemFamily.STARLIKE_BBHJ)).root
theta = np.linspace(0, 2 * np.pi, 9)
print(np.round(boundary_arg_derivative(f, r, theta), 6))
