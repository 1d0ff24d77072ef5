"""Harmonic mappings ``f = h + conj(g)`` on the unit disk and their operators.

Both parts are stored as :class:`~harmonic_radius.series.CoeffSeq` indexed
from 1, so ``h.coeffs[0]`` is ``a_1`` and ``g.coeffs[0]`` is ``b_1``.

Angular derivatives along a circle are reduced to quotients of the operator
``Df = z h'(z) - conj(z g'(z))``: ``d/dtheta arg f(r e^{it}) = Re(Df/f)`` and
``d/dtheta arg(d/dtheta f) = Re(D(Df)/Df)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .exceptions import DomainError, PoleError, PrecisionError
from .series import CoeffSeq, required_length, tail_bound

__all__ = [
    "HarmonicMapping",
    "SharpnessWarning",
    "POLE_THRESHOLD",
    "apply_differential",
    "boundary_arg_derivative",
    "boundary_tangent_arg_derivative",
    "differential_value",
    "evaluate",
    "jacobian",
    "linear_operator",
    "scale",
]

POLE_THRESHOLD = 1e-14
DEFAULT_TOL = 1e-12


class SharpnessWarning(UserWarning):
    """Parameters accepted, but outside the range where the radius is known to be sharp."""


@dataclass(frozen=True)
class HarmonicMapping:
    """``f = h + conj(g)`` with ``h = sum a_n z^n`` and ``g = sum b_n z^n`` (n >= 1)."""

    h: CoeffSeq
    g: CoeffSeq

    def __post_init__(self):
        if self.h.start_index != 1 or self.g.start_index != 1:
            raise DomainError("both parts of a harmonic mapping are indexed from n = 1")

    @classmethod
    def from_coefficients(cls, a, b=(), tail_scale=0.0, tail_degree=0.0, tail_ratio=1.0):
        """Build from ``a = [a_1, a_2, ...]`` and ``b = [b_1, b_2, ...]``.

        The same tail declaration is applied to both parts.
        """
        h = CoeffSeq(np.asarray(a, dtype=complex), 1, tail_scale, tail_degree, tail_ratio)
        g = CoeffSeq(np.asarray(b, dtype=complex), 1, tail_scale, tail_degree, tail_ratio)
        return cls(h, g)

    @classmethod
    def identity(cls):
        return cls.from_coefficients([1.0], [])

    @property
    def a1(self):
        return self.h.coefficient(1) if self.h.coeffs.size else 0j

    @property
    def b1(self):
        return self.g.coefficient(1) if self.g.coeffs.size else 0j

    @property
    def normalized(self):
        """``f(0) = 0`` holds structurally; normalization is ``h'(0) = a_1 = 1``."""
        return self.a1 == 1

    @property
    def in_h0(self):
        return self.normalized and self.b1 == 0

    @property
    def jacobian_at_origin(self):
        return abs(self.a1) ** 2 - abs(self.b1) ** 2

    @property
    def stop(self):
        return max(self.h.stop, self.g.stop)


def _padded(seq, power=0):
    """Coefficients of ``sum n**power c_n z**n`` as a dense vector from z**0."""
    out = np.zeros(seq.stop + 1, dtype=complex)
    if seq.coeffs.size:
        out[seq.start_index :] = seq.coeffs * seq.indices.astype(float) ** power
    return out


def _series(seq, z, power=0):
    return P.polyval(z, _padded(seq, power))


def _series_derivative(seq, z):
    c = _padded(seq, 1)[1:]
    return P.polyval(z, c) if c.size else np.zeros_like(np.asarray(z, dtype=complex))


def _check_disk(z):
    radius = float(np.max(np.abs(z))) if np.size(z) else 0.0
    if not radius < 1.0:
        raise DomainError(f"point(s) must lie in the open unit disk, max |z| = {radius!r}")
    return radius


def _require_tail(f, radius, tol, extra_degree, shift=False):
    """Raise PrecisionError unless both tails at ``radius`` are below ``tol``.

    With ``shift`` the tail is for ``sum n^e c_n r^(n-1)`` (a derivative).
    """
    worst = 0.0
    for part in (f.h, f.g):
        t = tail_bound(part, radius, extra_degree)
        if shift:
            t = t / radius if radius > 0 else 0.0
        worst = max(worst, t)
        if t >= tol:
            need = required_length(part, radius, tol * (radius if shift and radius > 0 else 1.0), extra_degree)
            raise PrecisionError(
                f"truncation at n={part.stop} leaves a tail bound {t:.3e} >= tol={tol:.3e} "
                f"at |z|={radius:.6g}; stored length {need} or more is required",
                required_length=need,
            )
    return worst


def _scalar(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


def evaluate(f, z, tol=DEFAULT_TOL):
    """``h(z) + conj(g(z))`` for ``|z| < 1`` (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    radius = _check_disk(z)
    _require_tail(f, radius, tol, 0)
    return _scalar(_series(f.h, z) + np.conj(_series(f.g, z)))


def jacobian(f, z, tol=DEFAULT_TOL):
    """``|h'(z)|**2 - |g'(z)|**2``."""
    z = np.asarray(z, dtype=complex)
    radius = _check_disk(z)
    delta = _require_tail(f, radius, tol, 1, shift=True)
    hp = _series_derivative(f.h, z)
    gp = _series_derivative(f.g, z)
    err = float(np.max(2.0 * (np.abs(hp) + np.abs(gp)) * delta + 2.0 * delta**2, initial=0.0))
    if err >= tol:
        raise PrecisionError(f"Jacobian error bound {err:.3e} exceeds tol={tol:.3e}")
    return _scalar(np.abs(hp) ** 2 - np.abs(gp) ** 2)


def _check_epsilon(epsilon):
    epsilon = complex(epsilon)
    if abs(abs(epsilon) - 1.0) >= 1e-12:
        raise DomainError(f"epsilon must be unimodular, got |epsilon| = {abs(epsilon)!r}")
    return epsilon


def _reweighted(seq, factors, scale_bound):
    return CoeffSeq(
        seq.coeffs * factors,
        seq.start_index,
        seq.tail_scale * scale_bound,
        seq.tail_degree + 1 if seq.tail_scale else seq.tail_degree,
        seq.tail_ratio,
    )


def apply_differential(f, epsilon=1.0):
    """``D_f^eps = z f_z - eps conj(z) f_zbar``.

    Analytic coefficients become ``n a_n`` and co-analytic ones
    ``-conj(eps) n b_n``, so that the result evaluates to
    ``z h'(z) - eps conj(z g'(z))``.
    """
    eps = _check_epsilon(epsilon)
    nh = f.h.indices.astype(float)
    ng = f.g.indices.astype(float)
    return HarmonicMapping(
        _reweighted(f.h, nh, 1.0),
        _reweighted(f.g, -np.conj(eps) * ng, 1.0),
    )


def linear_operator(f, lam, epsilon=1.0):
    """``F_lambda = (1 - lam) f + lam D_f^eps``.

    ``lam > 1`` is accepted with a :class:`SharpnessWarning`.
    """
    lam = float(lam)
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")
    if lam > 1:
        warnings.warn(f"lambda={lam} > 1: radius results are sufficient conditions only", SharpnessWarning, stacklevel=2)
    eps = _check_epsilon(epsilon)
    if lam == 0:
        return f
    nh = f.h.indices.astype(float)
    ng = f.g.indices.astype(float)
    return HarmonicMapping(
        _reweighted(f.h, (1.0 - lam) + lam * nh, max(1.0, lam)),
        _reweighted(f.g, (1.0 - lam) - np.conj(eps) * lam * ng, abs(1.0 - lam) + lam),
    )


def scale(f, r):
    """Dilation ``f_r(z) = f(r z) / r``: coefficients ``c_n r**(n-1)``."""
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise DomainError(f"scale factor must lie in (0, 1], got {r!r}")
    if r == 1.0:
        return f

    def shrink(seq):
        w = r ** (seq.indices.astype(float) - 1.0)
        return CoeffSeq(seq.coeffs * w, seq.start_index, seq.tail_scale, seq.tail_degree, seq.tail_ratio * r)

    return HarmonicMapping(shrink(f.h), shrink(f.g))


def differential_value(f, z, order=1, tol=DEFAULT_TOL):
    """Value of ``D^order f`` at ``z`` with ``D = z d/dz - conj(z) d/dzbar``.

    ``order=1`` gives ``z h' - conj(z g')``; ``order=2`` gives
    ``z(z h')' + conj(z (z g')')``.
    """
    z = np.asarray(z, dtype=complex)
    radius = _check_disk(z)
    _require_tail(f, radius, tol, order)
    sign = (-1.0) ** order
    return _scalar(_series(f.h, z, order) + sign * np.conj(_series(f.g, z, order)))


def _circle(r, theta):
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"circle radius must lie in (0, 1), got {r!r}")
    return r * np.exp(1j * np.asarray(theta, dtype=float))


def boundary_arg_derivative(f, r, theta, tol=DEFAULT_TOL):
    """``d/dtheta arg f(r e^{i theta})`` computed as ``Re(Df/f)``."""
    z = _circle(r, theta)
    _require_tail(f, r, tol, 1)
    num = _series(f.h, z, 1) - np.conj(_series(f.g, z, 1))
    den = _series(f.h, z) + np.conj(_series(f.g, z))
    if np.any(np.abs(den) < POLE_THRESHOLD):
        raise PoleError(f"f vanishes on |z|={r}: argument undefined")
    return _scalar(np.real(num / den))


def boundary_tangent_arg_derivative(f, r, theta, tol=DEFAULT_TOL):
    """``d/dtheta arg(d/dtheta f(r e^{i theta}))`` computed as ``Re(D(Df)/Df)``."""
    z = _circle(r, theta)
    _require_tail(f, r, tol, 2)
    num = _series(f.h, z, 2) + np.conj(_series(f.g, z, 2))
    den = _series(f.h, z, 1) - np.conj(_series(f.g, z, 1))
    if np.any(np.abs(den) < POLE_THRESHOLD):
        raise PoleError(f"Df vanishes on |z|={r}: tangent direction undefined")
    return _scalar(np.real(num / den))
