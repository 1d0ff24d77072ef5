"""Extremal functions that saturate the coefficient bounds.

``KOEBE``
    Harmonic Koebe function ``K = H1 + conj(G1)`` (equality in the BBHJ bounds).
``HALF_PLANE``
    Harmonic right half-plane mapping ``L = H2 + conj(G2)``.
``SHARP_DF_BBHJ`` / ``SHARP_DF_CONVEX_HALF``
    ``D_F^eps`` of ``F = (2z - H1) + conj(-G1)`` resp. ``F = (2z - H2) + conj(G2)``.
    Analytic coefficients are ``1`` at ``n = 1`` and ``-n |a_n|`` after that,
    co-analytic ones ``conj(eps) n |b_n|``.  With ``eps = 1`` every term of the
    starlikeness functional lines up at ``theta = 0``; with ``eps = -1`` every
    term of the convexity functional does.
``SHARP_F_BBHJ`` / ``SHARP_F_CONVEX_HALF``
    ``(1 - lam) F + lam D F`` built from coefficient moduli: analytic ``1`` and
    ``-(1 - lam + lam n)|a_n|``, co-analytic ``(1 - lam + lam n)|b_n|``.  At
    ``lam = 1`` these coincide with the SHARP_DF kinds for ``eps = 1``.
``UNIFORM_F0``
    ``(1 - lam) f1 + lam D f1`` built from ``h1 = z - (c/2) z^2/(1-z)`` and
    ``g1 = -b1 z - (c/2) z^2/(1-z)``.

The coefficient builders and the rational closed forms are kept separate on
purpose; the tests compare them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .mapping import HarmonicMapping
from .radius import bisect, sign_changes
from .series import CoeffSeq

__all__ = [
    "ExtremalKind",
    "JacobianScan",
    "build_extremal",
    "closed_form",
    "jacobian_DF_closed_form",
    "jacobian_F0_closed_form",
    "jacobian_roots_scan",
]


class ExtremalKind(enum.Enum):
    KOEBE = "koebe"
    HALF_PLANE = "half-plane"
    SHARP_DF_BBHJ = "sharp-df-bbhj"
    SHARP_DF_CONVEX_HALF = "sharp-df-convexhalf"
    SHARP_F_BBHJ = "sharp-f-bbhj"
    SHARP_F_CONVEX_HALF = "sharp-f-convexhalf"
    UNIFORM_F0 = "uniform-f0"


def _check_uniform(c, b1, lam):
    if c is None or not c > 0:
        raise DomainError(f"c must be > 0, got {c!r}")
    if not 0.0 <= b1 < 1.0:
        raise DomainError(f"b1 must lie in [0, 1), got {b1!r}")
    if not lam >= 0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")


def build_extremal(kind, truncation, *, epsilon=1.0, c=None, b1=0.0, lam=0.0):
    """Coefficients of an extremal mapping up to index ``truncation``.

    ``epsilon`` only affects the SHARP_DF kinds; ``lam`` affects SHARP_F and
    UNIFORM_F0; ``c`` and ``b1`` only UNIFORM_F0.  The tail declarations dominate the closed-form coefficients.
    """
    kind = ExtremalKind(kind)
    N = int(truncation)
    if N < 2:
        raise DomainError(f"truncation must be >= 2, got {truncation!r}")
    n = np.arange(1, N + 1, dtype=float)
    koebe_a = (2 * n + 1) * (n + 1) / 6
    koebe_b = (2 * n - 1) * (n - 1) / 6
    if kind is ExtremalKind.KOEBE:
        return HarmonicMapping(CoeffSeq(koebe_a, 1, 1.0, 2), CoeffSeq(koebe_b, 1, 1.0, 2))
    if kind is ExtremalKind.HALF_PLANE:
        return HarmonicMapping(CoeffSeq((n + 1) / 2, 1, 1.0, 1), CoeffSeq(-(n - 1) / 2, 1, 1.0, 1))
    if kind in (ExtremalKind.SHARP_DF_BBHJ, ExtremalKind.SHARP_DF_CONVEX_HALF):
        eps = complex(epsilon)
        if abs(abs(eps) - 1.0) >= 1e-12:
            raise DomainError(f"epsilon must be unimodular, got {epsilon!r}")
        if kind is ExtremalKind.SHARP_DF_BBHJ:
            am, bm, deg = koebe_a, koebe_b, 3
        else:
            am, bm, deg = (n + 1) / 2, (n - 1) / 2, 2
        a = -n * am
        a[0] = 1.0
        b = np.conj(eps) * n * bm
        return HarmonicMapping(CoeffSeq(a, 1, 1.0, deg), CoeffSeq(b, 1, 1.0, deg))
    if kind in (ExtremalKind.SHARP_F_BBHJ, ExtremalKind.SHARP_F_CONVEX_HALF):
        if not lam >= 0:
            raise DomainError(f"lambda must be >= 0, got {lam!r}")
        if kind is ExtremalKind.SHARP_F_BBHJ:
            am, bm, deg = koebe_a, koebe_b, 2
        else:
            am, bm, deg = (n + 1) / 2, (n - 1) / 2, 1
        w = (1.0 - lam) + lam * n
        a = -w * am
        a[0] = 1.0
        C, d = (max(1.0, lam), deg + 1) if lam > 0 else (1.0, deg)
        return HarmonicMapping(CoeffSeq(a, 1, C, d), CoeffSeq(w * bm, 1, C, d))
    _check_uniform(c, b1, lam)
    w = (1.0 - lam) + lam * n
    half = np.where(n >= 2, -c / 2, 0.0)
    a = w * (half + (n == 1))
    b = w * (half - b1 * (n == 1))
    # |a_1| = 1, |b_1| = b1 < 1, and (1 - lam + lam n) c/2 <= max(1, lam) (c/2) n
    C = max(1.0, c / 2 * max(1.0, lam))
    return HarmonicMapping(CoeffSeq(a, 1, C, 1), CoeffSeq(b, 1, C, 1))


def closed_form(kind, z, *, epsilon=1.0, c=None, b1=0.0, lam=0.0):
    """Rational closed form of an extremal mapping at ``z`` (``|z| < 1``)."""
    kind = ExtremalKind(kind)
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise DomainError("closed forms are evaluated inside the unit disk")
    s = 1.0 - z
    if kind is ExtremalKind.KOEBE:
        h = (z - z**2 / 2 + z**3 / 6) / s**3
        g = (z**2 / 2 + z**3 / 6) / s**3
    elif kind is ExtremalKind.HALF_PLANE:
        h = (z - z**2 / 2) / s**2
        g = -(z**2) / 2 / s**2
    elif kind is ExtremalKind.SHARP_DF_BBHJ:
        h = z * (2 - (1 + z) / s**4)
        g = np.conj(epsilon) * z**2 * (1 + z) / s**4
    elif kind is ExtremalKind.SHARP_DF_CONVEX_HALF:
        h = 2 * z - z / s**3
        g = np.conj(epsilon) * z**2 / s**3
    elif kind in (ExtremalKind.SHARP_F_BBHJ, ExtremalKind.SHARP_F_CONVEX_HALF):
        if kind is ExtremalKind.SHARP_F_BBHJ:
            H, dH = (z - z**2 / 2 + z**3 / 6) / s**3, (1 + z) / s**4
            G, dG = (z**2 / 2 + z**3 / 6) / s**3, z * (1 + z) / s**4
        else:
            H, dH = (z - z**2 / 2) / s**2, 1 / s**3
            G, dG = z**2 / 2 / s**2, z / s**3
        h = (1 - lam) * (2 * z - H) + lam * z * (2 - dH)
        g = (1 - lam) * G + lam * z * dG
    else:
        _check_uniform(c, b1, lam)
        q = z**2 / s
        dq = z * (2 - z) / s**2
        h1, dh1 = z - c / 2 * q, 1 - c / 2 * dq
        g1, dg1 = -b1 * z - c / 2 * q, -b1 - c / 2 * dq
        h = (1 - lam) * h1 + lam * z * dh1
        g = (1 - lam) * g1 + lam * z * dg1
    out = h + np.conj(g)
    return out.item() if out.ndim == 0 else out


def _check_open(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0) or np.any(arr >= 1):
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    return arr


def jacobian_DF_closed_form(kind, r):
    """Jacobian of the SHARP_DF extremal on the positive real axis.

    Factored as ``(H' + G')(H' - G')``; each factor carries its own power of
    ``1 - r`` so the denominator is their product.
    """
    kind = ExtremalKind(kind)
    r = _check_open(r)
    if kind is ExtremalKind.SHARP_DF_BBHJ:
        p = (1 - 13 * r + 23 * r**2 - 19 * r**3 + 10 * r**4 - 2 * r**5) * (
            1 - 17 * r + 13 * r**2 - 21 * r**3 + 10 * r**4 - 2 * r**5
        )
        val = p / (1 - r) ** 10
    elif kind is ExtremalKind.SHARP_DF_CONVEX_HALF:
        p = (1 - 8 * r + 13 * r**2 - 8 * r**3 + 2 * r**4) * (1 - 12 * r + 11 * r**2 - 8 * r**3 + 2 * r**4)
        val = p / (1 - r) ** 8
    else:
        raise DomainError(f"no DF Jacobian closed form for {kind.value}")
    return float(val) if np.ndim(val) == 0 else val


def jacobian_F0_closed_form(c, b1, lam, r):
    """``(1 + b1)/(1 - r)^3 * ((1 + c - b1)(1 - r)^3 - c [1 + (2 lam - 1) r])``."""
    _check_uniform(c, b1, lam)
    r = _check_open(r)
    val = (1 + b1) / (1 - r) ** 3 * ((1 + c - b1) * (1 - r) ** 3 - c * (1 + (2 * lam - 1) * r))
    return float(val) if np.ndim(val) == 0 else val


@dataclass(frozen=True)
class JacobianScan:
    r: np.ndarray
    jacobian: np.ndarray
    intervals: list
    roots: list


def jacobian_roots_scan(kind, r_max, samples, *, c=None, b1=0.0, lam=0.0, root_tol=1e-10):
    """Sample the closed-form Jacobian on ``(0, r_max]`` and refine its sign changes."""
    kind = ExtremalKind(kind)
    if not 0 < r_max < 1:
        raise DomainError(f"r_max must lie in (0, 1), got {r_max!r}")
    if int(samples) < 2:
        raise DomainError(f"samples must be >= 2, got {samples!r}")
    if kind is ExtremalKind.UNIFORM_F0:
        def J(x):
            return jacobian_F0_closed_form(c, b1, lam, x)
    else:
        def J(x):
            return jacobian_DF_closed_form(kind, x)
    rs = np.linspace(0.0, r_max, int(samples) + 1)[1:]
    js = J(rs)
    intervals = []
    roots = []
    for i, j in sign_changes(js):
        lo, hi = float(rs[i]), float(rs[j])
        intervals.append((lo, hi))
        roots.append(bisect(J, lo, hi, root_tol, float(js[i]), float(js[j]))[0])
    return JacobianScan(rs, js, intervals, roots)
