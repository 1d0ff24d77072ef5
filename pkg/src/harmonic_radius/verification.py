"""Named verification suites used by ``harmonic-radius verify``."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .extremal import ExtremalKind, build_extremal, jacobian_DF_closed_form, jacobian_roots_scan
from .mapping import boundary_arg_derivative
from .oracle import empirical_radius, identity_partial_sum_check
from .radius import ProblemFamily, RadiusProblem, solve_radius
from .series import POWER_SUM_ORDERS

__all__ = ["Check", "LANDMARK_RADII", "SUITES", "run_suite"]

IDENTITY_GRID = (0.01, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9)

# reference values, six significant figures
LANDMARK_RADII = (
    (ProblemFamily.STARLIKE_BBHJ, 0.0614313),
    (ProblemFamily.CONVEX_BBHJ, 0.0328348),
    (ProblemFamily.STARLIKE_CONVEX_HALF, 0.0903331),
    (ProblemFamily.CONVEX_CONVEX_HALF, 0.0449935),
    (ProblemFamily.LAMBDA_STARLIKE_BBHJ, 0.112903),
    (ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF, 0.164878),
)

JACOBIAN_ROOTS = (
    (ExtremalKind.SHARP_DF_BBHJ, 0.15, (0.0614313, 0.0903331)),
    (ExtremalKind.SHARP_DF_CONVEX_HALF, 0.25, (0.0903331, 0.164878)),
)

ORDER_SHARPNESS = (
    (ExtremalKind.SHARP_DF_BBHJ, ProblemFamily.STARLIKE_BBHJ),
    (ExtremalKind.SHARP_DF_CONVEX_HALF, ProblemFamily.STARLIKE_CONVEX_HALF),
)

EMPIRICAL = (
    (ExtremalKind.SHARP_DF_BBHJ, "starlike", ProblemFamily.STARLIKE_BBHJ),
    (ExtremalKind.SHARP_DF_CONVEX_HALF, "starlike", ProblemFamily.STARLIKE_CONVEX_HALF),
    (ExtremalKind.SHARP_DF_BBHJ, "convex", ProblemFamily.CONVEX_BBHJ),
    (ExtremalKind.SHARP_F_BBHJ, "starlike", ProblemFamily.LAMBDA_STARLIKE_BBHJ),
    (ExtremalKind.SHARP_F_CONVEX_HALF, "starlike", ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF),
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def as_dict(self):
        return asdict(self)


def identities():
    out = []
    for k in POWER_SUM_ORDERS:
        dev = identity_partial_sum_check(k, IDENTITY_GRID)
        out.append(Check(f"power_sum k={k}", dev < 1e-10, f"max deviation {dev:.3e} (limit 1e-10)"))
    return out


def radii():
    out = []
    for fam, expected in LANDMARK_RADII:
        root = solve_radius(RadiusProblem(fam)).root
        err = abs(root - expected)
        out.append(Check(f"radius {fam.value}", err < 1e-6, f"root {root:.10f} vs {expected} (|diff| {err:.2e})"))
    return out


def sharpness():
    out = []
    for kind, r_max, expected in JACOBIAN_ROOTS:
        scan = jacobian_roots_scan(kind, r_max, 2000)
        ok = len(scan.roots) == 2 and all(abs(a - b) < 1e-6 for a, b in zip(scan.roots, expected))
        if ok:
            inner = np.linspace(scan.roots[0], scan.roots[1], 102)[1:-1]
            ok = bool(np.all(jacobian_DF_closed_form(kind, inner) < 0))
        found = ", ".join(f"{x:.7f}" for x in scan.roots)
        out.append(Check(f"jacobian roots {kind.value}", ok, f"roots [{found}] expected {expected}"))
    for kind, fam in ORDER_SHARPNESS:
        worst = 0.0
        for alpha in (0.0, 0.2, 0.5, 0.8):
            r = solve_radius(RadiusProblem(fam, alpha=alpha)).root
            f = build_extremal(kind, 200)
            worst = max(worst, abs(boundary_arg_derivative(f, r, 0.0) - alpha))
        out.append(Check(f"order sharpness {kind.value}", worst < 1e-7, f"max |functional - alpha| {worst:.2e}"))
    return out


def oracle():
    out = []
    for kind, criterion, fam in EMPIRICAL:
        emp = empirical_radius(kind, criterion)
        ana = solve_radius(RadiusProblem(fam)).root
        err = abs(emp - ana)
        out.append(Check(f"empirical {criterion} {kind.value}", err <= 1e-3, f"sampled {emp:.7f} vs analytic {ana:.7f}"))
    return out


SUITES = {
    "identities": identities,
    "radii": radii,
    "sharpness": sharpness,
    "oracle": oracle,
}


def run_suite(name):
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
