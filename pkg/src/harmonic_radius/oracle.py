"""Brute-force cross-checks that avoid every closed form used elsewhere.

Nothing here touches the radius polynomials or the closed-form Jacobians:
the circle functionals are sampled from truncated series, power sums are
checked against explicit partial sums, and angular derivatives against
finite differences.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize_scalar

from .exceptions import DomainError, NoRootError, PoleError
from .extremal import ExtremalKind, build_extremal
from .mapping import boundary_arg_derivative, boundary_tangent_arg_derivative, evaluate
from .series import POWER_SUM_NUMERATORS, power_sum, power_sum_closed_form, required_length

__all__ = [
    "certified_terms",
    "empirical_radius",
    "fd_arg_derivative",
    "fd_tangent_arg_derivative",
    "identity_partial_sum_check",
    "min_boundary_arg_derivative",
    "min_boundary_convexity",
    "partial_power_sum",
    "truncated_extremal",
]

DEFAULT_SAMPLES = 4096
THETA_XTOL = 1e-10
_SERIES_TOL = 1e-13


def _min_on_circle(func, r, samples, xtol):
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    samples = int(samples)
    if samples < 64:
        raise DomainError(f"need at least 64 samples, got {samples}")
    step = 2 * math.pi / samples
    theta = step * np.arange(samples)
    vals = np.asarray(func(theta))
    k = int(np.argmin(vals))
    best_t, best_v = float(theta[k]), float(vals[k])
    res = minimize_scalar(
        lambda t: float(func(t)),
        bounds=(best_t - step, best_t + step),
        method="bounded",
        options={"xatol": xtol},
    )
    if res.fun < best_v:
        best_t, best_v = float(res.x), float(res.fun)
    return best_v, best_t % (2 * math.pi)


def min_boundary_arg_derivative(f, r, samples=DEFAULT_SAMPLES, xtol=THETA_XTOL):
    """``(min, argmin)`` over the circle of ``d/dtheta arg f(r e^{i theta})``."""
    return _min_on_circle(lambda t: boundary_arg_derivative(f, r, t), r, samples, xtol)


def min_boundary_convexity(f, r, samples=DEFAULT_SAMPLES, xtol=THETA_XTOL):
    """``(min, argmin)`` over the circle of ``d/dtheta arg(d/dtheta f(r e^{i theta}))``."""
    return _min_on_circle(lambda t: boundary_tangent_arg_derivative(f, r, t), r, samples, xtol)


def truncated_extremal(kind, r, tol=_SERIES_TOL, **params):
    """Extremal mapping truncated so second-order operator tails at ``r`` are below ``tol``."""
    probe = build_extremal(kind, 2, **params)
    n = max(required_length(probe.h, r, tol, 2), required_length(probe.g, r, tol, 2), 2)
    return build_extremal(kind, n, **params)


def empirical_radius(
    kind,
    criterion="starlike",
    alpha=0.0,
    tol=1e-6,
    samples=DEFAULT_SAMPLES,
    epsilon=None,
    step=0.005,
    r_max=0.5,
    **params,
):
    """Largest ``r`` at which the sampled circle functional stays above ``alpha``.

    ``criterion`` is ``"starlike"`` or ``"convex"``.  For the SHARP_DF kinds
    ``epsilon`` defaults to the sign that saturates the criterion: ``+1`` for
    starlikeness, ``-1`` for convexity.  The radius is bracketed by a coarse
    scan with spacing ``step`` and then bisected to width ``tol``.
    """
    kind = ExtremalKind(kind)
    if criterion not in ("starlike", "convex"):
        raise DomainError(f"criterion must be 'starlike' or 'convex', got {criterion!r}")
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}")
    if kind in (ExtremalKind.SHARP_DF_BBHJ, ExtremalKind.SHARP_DF_CONVEX_HALF):
        params["epsilon"] = (1.0 if criterion == "starlike" else -1.0) if epsilon is None else epsilon
    functional = min_boundary_arg_derivative if criterion == "starlike" else min_boundary_convexity

    def holds(r):
        f = truncated_extremal(kind, r, **params)
        try:
            return functional(f, r, samples)[0] > alpha
        except PoleError:
            return False

    lo = None
    r = step
    while r < r_max:
        if not holds(r):
            break
        lo = r
        r += step
    else:
        raise NoRootError(f"criterion holds on the whole scan up to r={r_max}")
    if lo is None:
        raise NoRootError(f"criterion already fails at r={step}; reduce step")
    hi = r
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def fd_arg_derivative(f, r, theta, h=1e-5):
    """Centered difference of ``arg f(r e^{i theta})`` in ``theta``."""
    theta = np.asarray(theta, dtype=float)
    fp = evaluate(f, r * np.exp(1j * (theta + h)))
    fm = evaluate(f, r * np.exp(1j * (theta - h)))
    return np.angle(fp / fm) / (2 * h)


def fd_tangent_arg_derivative(f, r, theta, h=1e-4):
    """Centered difference of ``arg`` of a centered-difference tangent ``d/dtheta f``."""
    theta = np.asarray(theta, dtype=float)

    def tangent(t):
        return (evaluate(f, r * np.exp(1j * (t + h))) - evaluate(f, r * np.exp(1j * (t - h)))) / (2 * h)

    return np.angle(tangent(theta + h) / tangent(theta - h)) / (2 * h)


def partial_power_sum(k, r, terms):
    """``sum_{n=2}^{terms} n**k r**(n-1)``.

    Exact when ``r`` is a :class:`~fractions.Fraction`; compensated float
    summation otherwise.
    """
    if isinstance(r, Fraction):
        return sum((Fraction(n**k) * r ** (n - 1) for n in range(2, int(terms) + 1)), Fraction(0))
    return math.fsum(n**k * r ** (n - 1) for n in range(2, int(terms) + 1))


def _remainder_bound(k, r, terms):
    """Bound on ``sum_{n > terms} n**k r**(n-1)`` from the decreasing term ratio."""
    r = float(r)
    if r == 0:
        return 0.0
    m = int(terms) + 1
    q = (1 + 1 / m) ** k * r
    if q >= 1:
        return math.inf
    return m**k * r ** (m - 1) / (1 - q)


def certified_terms(k, r, bound=1e-12):
    """Smallest number of terms whose remainder is provably below ``bound``."""
    terms = 2
    while _remainder_bound(k, r, terms) >= bound:
        terms += 1
    return terms


def identity_partial_sum_check(k, r_grid, terms=None, remainder=1e-12, exact=True):
    """Max deviation between the power-sum closed form and its partial sums.

    With ``exact`` both sides are evaluated in rational arithmetic at the
    decimal value of each grid point, so the deviation is the truncation
    remainder alone; otherwise the float :func:`power_sum` is compared with a
    compensated float partial sum.  ``terms=None`` picks a certified count per
    grid point; an explicit count is rejected if it leaves a remainder above
    ``remainder``.
    """
    if k not in POWER_SUM_NUMERATORS:
        raise DomainError(f"power sum order must be one of {tuple(POWER_SUM_NUMERATORS)}, got {k!r}")
    worst = 0.0
    for r in r_grid:
        if not 0 <= float(r) < 1:
            raise DomainError(f"grid point {r!r} outside [0, 1)")
        n = certified_terms(k, r, remainder) if terms is None else int(terms)
        if _remainder_bound(k, r, n) >= remainder:
            raise DomainError(f"{n} terms leave a remainder above {remainder:g} at r={r}")
        if exact:
            x = Fraction(str(r))
            dev = abs(power_sum_closed_form(k, x) - partial_power_sum(k, x, n))
        else:
            dev = abs(power_sum(k, float(r)) - partial_power_sum(k, float(r), n))
        worst = max(worst, float(dev))
    return worst
