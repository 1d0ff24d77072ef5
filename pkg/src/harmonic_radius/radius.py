"""Radius polynomials, their coefficient-sum forms, and unique-root isolation.

Each :class:`RadiusProblem` selects one real polynomial ``P`` on ``[0, 1]``
whose unique zero in ``(0, 1)`` is the radius.  Every polynomial is linked to
a coefficient-sum majorant ``T`` (built from :func:`power_sum`) through

    P(r) = normalization(r) * (1 - T(r)),

with the normalization listed in :data:`NORMALIZATION`.  The one exception is
``CONVEX_CONVEX_HALF``: its reference polynomial is not of that form, and
``sum_form_residual`` keeps the sum implied by the fully-convex coefficient
condition.  See ``solve_radius(..., source="sum")``.

Root isolation scans 4096 interior points of ``(0, 1)``, insists on exactly
one sign change, then bisects the bracketing cell.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .exceptions import AmbiguityError, DomainError, NoRootError
from .series import power_sum

__all__ = [
    "ALPHA_MAX",
    "NORMALIZATION",
    "SCAN_POINTS",
    "ProblemFamily",
    "RadiusProblem",
    "RootResult",
    "bisect",
    "closed_form_uniform_radius",
    "normalization",
    "polynomial_coefficients",
    "radius_polynomial",
    "sign_changes",
    "solve_radius",
    "sum_form_residual",
]

ALPHA_MAX = 0.999
SCAN_POINTS = 4096
TOL_RANGE = (1e-14, 1e-4)


class ProblemFamily(enum.Enum):
    STARLIKE_BBHJ = "starlike-bbhj"
    CONVEX_BBHJ = "convex-bbhj"
    STARLIKE_CONVEX_HALF = "starlike-convexhalf"
    CONVEX_CONVEX_HALF = "convex-convexhalf"
    LAMBDA_STARLIKE_BBHJ = "lambda-starlike-bbhj"
    LAMBDA_STARLIKE_CONVEX_HALF = "lambda-starlike-convexhalf"
    UNIFORM_PHI = "uniform-phi"

    @property
    def parameter(self):
        """Name of the swept parameter (``alpha`` or ``lam``)."""
        return "alpha" if self in _ALPHA_FAMILIES else "lam"


_ALPHA_FAMILIES = frozenset(
    {
        ProblemFamily.STARLIKE_BBHJ,
        ProblemFamily.CONVEX_BBHJ,
        ProblemFamily.STARLIKE_CONVEX_HALF,
        ProblemFamily.CONVEX_CONVEX_HALF,
    }
)


@dataclass(frozen=True)
class RadiusProblem:
    family: ProblemFamily
    alpha: float = 0.0
    lam: float = 0.0
    c: float | None = None
    b1: float = 0.0

    def __post_init__(self):
        fam = ProblemFamily(self.family)
        object.__setattr__(self, "family", fam)
        if fam in _ALPHA_FAMILIES:
            if not 0.0 <= self.alpha <= ALPHA_MAX:
                raise DomainError(f"alpha must lie in [0, {ALPHA_MAX}], got {self.alpha!r}")
        elif not self.lam >= 0.0:
            raise DomainError(f"lambda must be >= 0, got {self.lam!r}")
        if fam is ProblemFamily.UNIFORM_PHI:
            if self.c is None or not self.c > 0:
                raise DomainError(f"c must be > 0, got {self.c!r}")
            if not 0.0 <= self.b1 < 1.0:
                raise DomainError(f"b1 must lie in [0, 1), got {self.b1!r}")

    @property
    def sharpness_tested(self):
        """False for ``lambda > 1``, where the radius is a sufficient condition only."""
        return self.family in _ALPHA_FAMILIES or self.lam <= 1.0

    @property
    def params(self):
        fam = self.family
        if fam in _ALPHA_FAMILIES:
            return {"alpha": self.alpha}
        if fam is ProblemFamily.UNIFORM_PHI:
            return {"c": self.c, "b1": self.b1, "lambda": self.lam}
        return {"lambda": self.lam}


def polynomial_coefficients(problem):
    """Ascending coefficients of the reference radius polynomial."""
    fam, a, lam = problem.family, problem.alpha, problem.lam
    u = 1.0 - a
    if fam is ProblemFamily.STARLIKE_BBHJ:
        c = [u, -(17 - 9 * a), 13 - 21 * a, -21 * u, 10 * u, -2 * u]
    elif fam is ProblemFamily.CONVEX_BBHJ:
        c = [u, -2 * (15 - 7 * a), -12 * (1 + 3 * a), -2 * (29 - 21 * a), 29 * u, -12 * u, 2 * u]
    elif fam is ProblemFamily.STARLIKE_CONVEX_HALF:
        c = [u, -6 * (2 - a), 11 * u, -8 * u, 2 * u]
    elif fam is ProblemFamily.CONVEX_CONVEX_HALF:
        c = [u, -(23 - 10 * a), 19 - 30 * a, -(41 - 42 * a), 30 - 31 * a, -12 * u, 2 * u]
    elif fam is ProblemFamily.LAMBDA_STARLIKE_BBHJ:
        c = [1.0, -(11 + 6 * lam), 21 - 8 * lam, -(19 + 2 * lam), 10.0, -2.0]
    elif fam is ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF:
        c = [1.0, -4 * (2 + lam), 13 - 2 * lam, -8.0, 2.0]
    else:
        # (1 + c - b1)(1 - r)^3 - c [1 + (2 lam - 1) r]
        k = 1.0 + problem.c - problem.b1
        c = [k - problem.c, -3 * k - problem.c * (2 * lam - 1), 3 * k, -k]
    return np.array(c, dtype=float)


def _check_closed_unit(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"r must lie in [0, 1], got {r!r}")
    return arr


def radius_polynomial(problem, r):
    """Evaluate the reference radius polynomial at ``r`` in ``[0, 1]``."""
    val = P.polyval(_check_closed_unit(r), polynomial_coefficients(problem))
    return float(val) if np.ndim(val) == 0 else val


# (leading constant uses alpha, power of (1 - r))
NORMALIZATION = {
    ProblemFamily.STARLIKE_BBHJ: ("1-alpha", 5),
    ProblemFamily.CONVEX_BBHJ: ("1-alpha", 6),
    ProblemFamily.STARLIKE_CONVEX_HALF: ("1-alpha", 4),
    ProblemFamily.CONVEX_CONVEX_HALF: ("1-alpha", 5),
    ProblemFamily.LAMBDA_STARLIKE_BBHJ: ("1", 5),
    ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF: ("1", 4),
    ProblemFamily.UNIFORM_PHI: ("1", 3),
}


def normalization(problem, r):
    """Factor clearing the denominators of ``1 - T``."""
    const, power = NORMALIZATION[problem.family]
    lead = 1.0 - problem.alpha if const == "1-alpha" else 1.0
    return lead * (1.0 - np.asarray(r, dtype=float)) ** power


def coefficient_sum(problem, r):
    """Closed-form majorant ``T(r)`` of the weighted coefficient sum."""
    fam, a, lam = problem.family, problem.alpha, problem.lam

    def S(k):
        return power_sum(k, r)

    if fam is ProblemFamily.STARLIKE_BBHJ:
        # sum n^2 (2n^2 + 1 - 3 alpha) / (3 (1 - alpha)) r^(n-1)
        return ((1 - 3 * a) * S(2) + 2 * S(4)) / (3 * (1 - a))
    if fam is ProblemFamily.CONVEX_BBHJ:
        return ((1 - 3 * a) * S(3) + 2 * S(5)) / (3 * (1 - a))
    if fam is ProblemFamily.STARLIKE_CONVEX_HALF:
        return (S(3) - a * S(1)) / (1 - a)
    if fam is ProblemFamily.CONVEX_CONVEX_HALF:
        # weights n(n -+ alpha) on n(n +- 1)/2 give n^2 (n^2 - alpha)
        return (S(4) - a * S(2)) / (1 - a)
    if fam is ProblemFamily.LAMBDA_STARLIKE_BBHJ:
        return (2 * lam * S(4) + 2 * (1 - lam) * S(3) + lam * S(2) + (1 - lam) * S(1)) / 3
    if fam is ProblemFamily.LAMBDA_STARLIKE_CONVEX_HALF:
        return (1 - lam) * S(2) + lam * S(3)
    return problem.c * ((1 - lam) * S(1) + lam * S(2)) + problem.b1


def sum_form_residual(problem, r):
    """``1 - T(r)`` for ``r`` in ``(0, 1)``; the radius is where this vanishes."""
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    return 1.0 - coefficient_sum(problem, r)


@dataclass(frozen=True)
class RootResult:
    root: float
    bracket: tuple[float, float]
    residual: float
    unique: bool
    iterations: int
    sharpness_tested: bool = True


def sign_changes(values):
    """Indices ``(i, j)`` of consecutive nonzero samples with opposite signs."""
    s = np.sign(np.asarray(values, dtype=float))
    nz = np.nonzero(s)[0]
    flips = np.nonzero(s[nz[:-1]] * s[nz[1:]] < 0)[0]
    return [(int(nz[k]), int(nz[k + 1])) for k in flips]


def bisect(func, lo, hi, tol, flo=None, fhi=None, max_iter=200):
    """Bisect a sign change of ``func`` on ``[lo, hi]`` down to width ``tol``.

    Returns ``(root, lo, hi, iterations)``.  The reported root is the
    false-position point of the final bracket, moved inward until its
    residual does not exceed the residual at either bracket end.
    """
    flo = func(lo) if flo is None else flo
    fhi = func(hi) if fhi is None else fhi
    if flo == 0.0:
        return lo, lo, lo, 0
    if fhi == 0.0:
        return hi, hi, hi, 0
    if flo * fhi > 0:
        raise NoRootError(f"no sign change on [{lo}, {hi}]")
    it = 0
    while hi - lo > tol and it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = func(mid)
        it += 1
        if fm == 0.0:
            return mid, mid, mid, it
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    for _ in range(64):
        x = lo - flo * (hi - lo) / (fhi - flo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        if not lo < x < hi:
            break
        fx = func(x)
        if abs(fx) <= min(abs(flo), abs(fhi)):
            return x, lo, hi, it
        if (fx < 0) == (flo < 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
    return (lo if abs(flo) <= abs(fhi) else hi), lo, hi, it


def _check_tol(tol):
    lo, hi = TOL_RANGE
    if not lo <= tol <= hi:
        raise DomainError(f"tol must lie in [{lo:g}, {hi:g}], got {tol!r}")


def solve_radius(problem, tol=1e-12, source="polynomial"):
    """Unique root in ``(0, 1)`` of the problem's radius function.

    ``source="polynomial"`` uses :func:`radius_polynomial`; ``source="sum"``
    uses :func:`sum_form_residual` directly.
    """
    _check_tol(tol)
    if source == "polynomial":
        def func(r):
            return radius_polynomial(problem, r)
    elif source == "sum":
        def func(r):
            return sum_form_residual(problem, r)
    else:
        raise DomainError(f"unknown source {source!r}")
    xs = np.arange(1, SCAN_POINTS + 1) / (SCAN_POINTS + 1)
    vals = func(xs)
    changes = sign_changes(vals)
    if not changes:
        raise NoRootError(f"{problem.family.value} {problem.params}: no sign change on (0, 1)")
    if len(changes) > 1:
        where = ", ".join(f"({xs[i]:.6g}, {xs[j]:.6g})" for i, j in changes)
        raise AmbiguityError(
            f"{problem.family.value} {problem.params}: {len(changes)} sign changes on (0, 1) at {where}"
        )
    i, j = changes[0]
    root, lo, hi, it = bisect(func, float(xs[i]), float(xs[j]), tol, float(vals[i]), float(vals[j]))
    return RootResult(root, (lo, hi), abs(float(func(root))), True, it, problem.sharpness_tested)


def closed_form_uniform_radius(c, b1=0.0):
    """``1 - sqrt(c / (1 + c - b1))``: the uniform-bound radius when lambda = 0."""
    if not c > 0:
        raise DomainError(f"c must be > 0, got {c!r}")
    if not 0.0 <= b1 < 1.0:
        raise DomainError(f"b1 must lie in [0, 1), got {b1!r}")
    return 1.0 - math.sqrt(c / (1.0 + c - b1))
