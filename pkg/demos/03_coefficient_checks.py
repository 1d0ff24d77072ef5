# %% [markdown]
# Coefficient-sum checks
# ======================
# A mapping with small enough weighted coefficient sums is fully starlike (or
# fully convex).  Scaling f(z) -> f(rz)/r damps the n-th coefficient by
# r**(n-1), so the check turns from fail to pass as r shrinks.  Verdicts are
# one-sided: the unstored tail must fit under the threshold before we say pass.

# %%
import json
import tempfile
from pathlib import Path

from harmonic_radius import (
    BoundFamily, ExtremalKind, build_extremal, check_fully_starlike_sum,
    check_k2_lambda, coeff_file, scale, truncation_length,
)
from harmonic_radius.radius import closed_form_uniform_radius

r_u = 0.0614312745
for r in (0.05, 0.06, r_u - 1e-4, r_u + 1e-4, 0.07):
    N = truncation_length(BoundFamily.bbhj(), r, 1e-10, extra_degree=2)
    res = check_fully_starlike_sum(scale(build_extremal(ExtremalKind.SHARP_DF_BBHJ, N), r))
    print(f"r={r:.7f}  N={N:4d}  sum={res.sum:.6f}  tail={res.tail:.1e}  -> {res.verdict}")

# %% [markdown]
# Without scaling, a series with only polynomial coefficient growth has an
# infinite tail on the unit circle, so a small stored sum is inconclusive.

# %%
from harmonic_radius.mapping import HarmonicMapping

f = HarmonicMapping.from_coefficients([1.0, 0.05], [0.1], tail_scale=1.0, tail_degree=1)
print(check_fully_starlike_sum(f))

# %% [markdown]
# Coefficient files are plain JSON with [re, im] pairs.  They reparse bit for
# bit; this is the format the command line `check` reads.

# %%
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "f0.json"
    f0 = build_extremal(ExtremalKind.UNIFORM_F0, 200, c=1.0)
    coeff_file.write(path, f0)
    print(path.read_text()[:120], "...")
    back = coeff_file.read(path)
    r = 0.9 * closed_form_uniform_radius(1.0)
    print("K_H^2(0) check at 0.9 r_S:", check_k2_lambda(scale(back, r), 0.0).verdict)
    print(json.loads(path.read_text())["tail"])
