# %% [markdown]
# Radius curves
# =============
# Each radius is the unique zero in (0, 1) of a low-degree polynomial.  We
# print the six headline radii, then trace how the starlikeness and convexity
# radii shrink as the order alpha grows.

# %%
import numpy as np

from harmonic_radius import ProblemFamily, RadiusProblem, solve_radius

for fam in list(ProblemFamily)[:6]:
    res = solve_radius(RadiusProblem(fam))
    print(f"{fam.value:28s} r = {res.root:.10f}   bracket width {res.bracket[1] - res.bracket[0]:.1e}")

# %% [markdown]
# Order alpha.  All four alpha-families decrease in alpha; at alpha -> 1 the
# leading coefficient (1 - alpha) vanishes, so the solver stops at 0.999.

# %%
alphas = np.round(np.linspace(0, 0.9, 10), 12)
families = [ProblemFamily.STARLIKE_BBHJ, ProblemFamily.CONVEX_BBHJ,
            ProblemFamily.STARLIKE_CONVEX_HALF, ProblemFamily.CONVEX_CONVEX_HALF]
print("alpha  " + "  ".join(f"{f.value:>20s}" for f in families))
for a in alphas:
    roots = [solve_radius(RadiusProblem(f, alpha=a)).root for f in families]
    print(f"{a:5.1f}  " + "  ".join(f"{x:20.10f}" for x in roots))

# %% [markdown]
# The operator (1 - lam) f + lam D f interpolates between f (lam = 0) and its
# differential (lam = 1).  The radius moves between the two endpoint values.

# %%
for lam in np.linspace(0, 1, 5):
    b = solve_radius(RadiusProblem(ProblemFamily.LAMBDA_STARLIKE_BBHJ, lam=lam)).root
    c = solve_radius(RadiusProblem(ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF, lam=lam)).root
    print(f"lam={lam:4.2f}  bbhj {b:.7f}  convex-half {c:.7f}")
