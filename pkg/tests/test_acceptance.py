"""Acceptance criteria, one test each, at the stated tolerances."""

import numpy as np

from harmonic_radius.extremal import (
    ExtremalKind,
    build_extremal,
    jacobian_DF_closed_form,
    jacobian_F0_closed_form,
    jacobian_roots_scan,
)
from harmonic_radius.families import BoundFamily, check_fully_starlike_sum
from harmonic_radius.mapping import HarmonicMapping, boundary_arg_derivative, scale
from harmonic_radius.oracle import empirical_radius, fd_arg_derivative, identity_partial_sum_check
from harmonic_radius.radius import (
    ProblemFamily,
    RadiusProblem,
    closed_form_uniform_radius,
    coefficient_sum,
    normalization,
    radius_polynomial,
    solve_radius,
    sum_form_residual,
)
from harmonic_radius.series import truncation_length

F = ProblemFamily
K = ExtremalKind
ALPHA_FAMILIES = (F.STARLIKE_BBHJ, F.CONVEX_BBHJ, F.STARLIKE_CONVEX_HALF, F.CONVEX_CONVEX_HALF)


def test_criterion_01_landmark_radii(criterion):
    landmarks = [
        (F.STARLIKE_BBHJ, 0.0614313),
        (F.CONVEX_BBHJ, 0.0328348),
        (F.STARLIKE_CONVEX_HALF, 0.0903331),
        (F.CONVEX_CONVEX_HALF, 0.0449935),
        (F.LAMBDA_STARLIKE_BBHJ, 0.112903),
        (F.LAMBDA_STARLIKE_CONVEX_HALF, 0.164878),
    ]
    errs = {fam.value: abs(solve_radius(RadiusProblem(fam)).root - v) for fam, v in landmarks}
    worst = max(errs.values())
    ok = worst < 1e-6
    criterion(1, "landmark radii", ok, f"max |root - reference| = {worst:.2e} (tol 1e-6)")
    assert ok, errs


def test_criterion_02_jacobian_roots(criterion):
    cases = [
        (K.SHARP_DF_BBHJ, 0.15, (0.0614313, 0.0903331)),
        (K.SHARP_DF_CONVEX_HALF, 0.25, (0.0903331, 0.164878)),
    ]
    notes, ok = [], True
    for kind, r_max, expected in cases:
        scan = jacobian_roots_scan(kind, r_max, 2000)
        two = len(scan.roots) == 2
        err = max(abs(a - b) for a, b in zip(scan.roots, expected)) if two else np.inf
        negative = False
        if two:
            inner = np.linspace(scan.roots[0], scan.roots[1], 102)[1:-1]
            negative = bool(np.all(jacobian_DF_closed_form(kind, inner) < 0))
        ok &= two and err < 1e-6 and negative
        notes.append(f"{kind.value}: {len(scan.roots)} roots, err {err:.1e}, J<0 between: {negative}")
    criterion(2, "Jacobian roots", ok, "; ".join(notes))
    assert ok


def test_criterion_03_lambda_endpoints(criterion):
    d1 = abs(
        solve_radius(RadiusProblem(F.LAMBDA_STARLIKE_BBHJ, lam=1.0)).root - solve_radius(RadiusProblem(F.STARLIKE_BBHJ)).root
    )
    d2 = abs(
        solve_radius(RadiusProblem(F.LAMBDA_STARLIKE_CONVEX_HALF, lam=1.0)).root
        - solve_radius(RadiusProblem(F.STARLIKE_CONVEX_HALF)).root
    )
    ok = d1 < 1e-10 and d2 < 1e-10
    criterion(3, "lambda-endpoint coherence", ok, f"|diff| bbhj {d1:.1e}, convex-half {d2:.1e} (tol 1e-10)")
    assert ok


def test_criterion_04_uniform_closed_form(criterion):
    worst = 0.0
    for c in np.linspace(0.25, 2.0, 5):
        for b1 in (0.0, 0.2, 0.4, 0.6, 0.8):
            root = solve_radius(RadiusProblem(F.UNIFORM_PHI, c=float(c), b1=b1, lam=0.0)).root
            worst = max(worst, abs(root - closed_form_uniform_radius(float(c), b1)))
    ok = worst < 1e-10
    criterion(4, "closed form vs polynomial", ok, f"max |diff| on 5x5 grid = {worst:.1e} (tol 1e-10)")
    assert ok


def _grid(fam):
    if fam in ALPHA_FAMILIES:
        return [RadiusProblem(fam, alpha=float(a)) for a in np.linspace(0.0, 0.95, 20)]
    if fam is F.UNIFORM_PHI:
        return [RadiusProblem(fam, c=1.0, b1=0.5, lam=float(l)) for l in np.linspace(0.0, 1.0, 20)]
    return [RadiusProblem(fam, lam=float(l)) for l in np.linspace(0.0, 1.0, 20)]


def test_criterion_05_sum_polynomial_equivalence(criterion):
    # normalized residual |P - N (1 - T)| / (|N| (1 + |T|)) on a 20 x 20 (parameter, r) grid
    rs = np.arange(1, 21) / 21
    worst = {}
    for fam in F:
        w = 0.0
        for p in _grid(fam):
            P = radius_polynomial(p, rs)
            N = normalization(p, rs)
            T = coefficient_sum(p, rs)
            res = np.abs(P - N * sum_form_residual(p, rs)) / (np.abs(N) * (1.0 + np.abs(T)))
            w = max(w, float(np.max(res)))
        worst[fam.value] = w
    bad = {k: v for k, v in worst.items() if not v < 1e-9}
    ok = not bad
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    criterion(5, "sum/polynomial equivalence", ok, f"{detail} (tol 1e-9)")
    assert ok, f"families above tolerance: {bad}"


def test_criterion_06_power_sum_identities(criterion):
    grid = (0.01, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9)
    devs = [identity_partial_sum_check(k, grid) for k in range(1, 6)]
    ok = max(devs) < 1e-10
    criterion(6, "power-sum identities", ok, f"max deviation {max(devs):.2e} over k=1..5 (tol 1e-10)")
    assert ok


def test_criterion_07_order_alpha_sharpness(criterion):
    worst = 0.0
    for kind, fam in ((K.SHARP_DF_BBHJ, F.STARLIKE_BBHJ), (K.SHARP_DF_CONVEX_HALF, F.STARLIKE_CONVEX_HALF)):
        f = build_extremal(kind, 200)
        for alpha in (0.0, 0.2, 0.5, 0.8):
            r = solve_radius(RadiusProblem(fam, alpha=alpha)).root
            worst = max(worst, abs(boundary_arg_derivative(f, r, 0.0) - alpha))
    ok = worst < 1e-7
    criterion(7, "order-alpha sharpness", ok, f"max |functional - alpha| = {worst:.1e} (tol 1e-7)")
    assert ok


def test_criterion_08_oracle_agreement(criterion):
    cases = [
        (K.SHARP_DF_BBHJ, "starlike", F.STARLIKE_BBHJ),
        (K.SHARP_DF_CONVEX_HALF, "starlike", F.STARLIKE_CONVEX_HALF),
        (K.SHARP_DF_BBHJ, "convex", F.CONVEX_BBHJ),
    ]
    errs = [abs(empirical_radius(kind, crit) - solve_radius(RadiusProblem(fam)).root) for kind, crit, fam in cases]
    ok = max(errs) <= 1e-3
    criterion(8, "independent oracle", ok, f"max |empirical - analytic| = {max(errs):.1e} (tol 1e-3)")
    assert ok


def test_criterion_09_alpha_monotonicity(criterion):
    worst = np.inf
    for fam in ALPHA_FAMILIES:
        roots = [solve_radius(RadiusProblem(fam, alpha=a)).root for a in np.round(np.arange(10) * 0.1, 12)]
        worst = min(worst, float(np.min(-np.diff(roots))))
    ok = worst > 1e-9
    criterion(9, "alpha-monotonicity", ok, f"smallest consecutive decrease {worst:.2e} (need > 1e-9)")
    assert ok


def test_criterion_10_checker_tightness(criterion):
    r_u = solve_radius(RadiusProblem(F.STARLIKE_BBHJ)).root
    verdicts = []
    for r in (r_u - 1e-4, r_u + 1e-4):
        # DF multiplies by n and the starlike weights by another n
        N = truncation_length(BoundFamily.bbhj(), r, 1e-10, extra_degree=2)
        f = scale(build_extremal(K.SHARP_DF_BBHJ, N), r)
        verdicts.append(check_fully_starlike_sum(f).verdict)
    ok = verdicts == ["pass", "fail"]
    criterion(10, "checker tightness", ok, f"r_u - 1e-4 -> {verdicts[0]}, r_u + 1e-4 -> {verdicts[1]}")
    assert ok


def test_criterion_11_uniform_f0_jacobian(criterion):
    worst_zero, min_pos = 0.0, np.inf
    for c in (1.0, 0.5):
        for b1 in (0.0, 0.5):
            for lam in (0.0, 0.5, 1.0):
                root = solve_radius(RadiusProblem(F.UNIFORM_PHI, c=c, b1=b1, lam=lam)).root
                worst_zero = max(worst_zero, abs(jacobian_F0_closed_form(c, b1, lam, root)))
                min_pos = min(min_pos, jacobian_F0_closed_form(c, b1, lam, 0.9 * root))
    ok = worst_zero < 1e-9 and min_pos > 0
    criterion(11, "UniformF0 Jacobian", ok, f"max |J(root)| = {worst_zero:.1e}, min J(0.9 root) = {min_pos:.3f}")
    assert ok


def test_criterion_12_derivative_reduction(criterion):
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(200):
        m = int(rng.integers(2, 9))
        a = np.r_[1.0, (rng.normal(size=m) + 1j * rng.normal(size=m)) * 0.15]
        b = (rng.normal(size=m) + 1j * rng.normal(size=m)) * 0.15
        f = HarmonicMapping.from_coefficients(a, b)
        r = float(rng.uniform(0.05, 0.6))
        theta = float(rng.uniform(0, 2 * np.pi))
        worst = max(worst, abs(boundary_arg_derivative(f, r, theta) - fd_arg_derivative(f, r, theta, 1e-5)))
    ok = worst < 1e-6
    criterion(12, "derivative reduction", ok, f"max |analytic - finite difference| = {worst:.1e} over 200 cases (tol 1e-6)")
    assert ok
