"""Coefficient-bound hypotheses and the sufficient coefficient conditions.

Three hypotheses on the coefficients of ``f = h + conj(g)``:

``BBHJ``
    The harmonic analogue of the Bieberbach bounds,
    ``|a_n| <= (2n+1)(n+1)/6``, ``|b_n| <= (2n-1)(n-1)/6`` and
    ``||a_n| - |b_n|| <= n``; equality for the harmonic Koebe function.
``CONVEX_HALF``
    ``|a_n| <= (n+1)/2``, ``|b_n| <= (n-1)/2``; equality for the harmonic
    right half-plane mapping.
``UNIFORM``
    ``|a_n| + |b_n| <= c`` for ``n >= 2`` with ``|b_1| <= b1 < 1``.

The three checkers evaluate the weighted coefficient sums of the sufficient
conditions for full starlikeness, full convexity (both of order alpha) and
membership in ``K_H^2(lambda)``.  Verdicts are one-sided: ``pass`` needs
``sum + tail <= threshold``, ``fail`` needs ``sum > threshold``; anything in
between is ``inconclusive``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, HypothesisError
from .series import coefficient_tail

__all__ = [
    "BoundFamily",
    "CheckResult",
    "FamilyKind",
    "check_fully_convex_sum",
    "check_fully_starlike_sum",
    "check_k2_lambda",
    "coefficient_bounds",
    "satisfies_family",
]

# Relative slack when comparing coefficient moduli with a bound (equality cases).
_BOUND_RTOL = 1e-12


class FamilyKind(enum.Enum):
    BBHJ = "bbhj"
    CONVEX_HALF = "convex-half"
    UNIFORM = "uniform"


@dataclass(frozen=True)
class BoundFamily:
    kind: FamilyKind
    c: float | None = None
    b1: float | None = None

    def __post_init__(self):
        if self.kind is FamilyKind.UNIFORM:
            if self.c is None or not self.c > 0:
                raise DomainError(f"uniform family needs c > 0, got {self.c!r}")
            b1 = 0.0 if self.b1 is None else self.b1
            if not 0.0 <= b1 < 1.0:
                raise DomainError(f"uniform family needs b1 in [0, 1), got {b1!r}")
            object.__setattr__(self, "b1", float(b1))
            object.__setattr__(self, "c", float(self.c))

    @classmethod
    def bbhj(cls):
        return cls(FamilyKind.BBHJ)

    @classmethod
    def convex_half(cls):
        return cls(FamilyKind.CONVEX_HALF)

    @classmethod
    def uniform(cls, c, b1=0.0):
        return cls(FamilyKind.UNIFORM, c, b1)

    def growth_rate(self):
        """``(C, d)`` with ``|a_n|, |b_n| <= C n**d`` for all ``n >= 1``."""
        if self.kind is FamilyKind.BBHJ:
            # (2n+1)(n+1)/6 <= n^2 for n >= 1
            return 1.0, 2
        if self.kind is FamilyKind.CONVEX_HALF:
            return 1.0, 1
        return self.c, 0


def coefficient_bounds(family, n):
    """Bounds at index ``n >= 2``: ``(a_bound, b_bound)``, or ``c`` for UNIFORM."""
    if int(n) != n or n < 2:
        raise DomainError(f"coefficient bounds are stated for n >= 2, got {n!r}")
    if family.kind is FamilyKind.BBHJ:
        return (2 * n + 1) * (n + 1) / 6.0, (2 * n - 1) * (n - 1) / 6.0
    if family.kind is FamilyKind.CONVEX_HALF:
        return (n + 1) / 2.0, (n - 1) / 2.0
    return family.c


def _exceeds(value, bound):
    return value > bound * (1.0 + _BOUND_RTOL) + _BOUND_RTOL


def satisfies_family(f, family):
    """Check every stored coefficient of ``f`` against the family bounds.

    Returns ``(ok, first_violating_index)``; the index is ``None`` when ok.
    For UNIFORM a violation of ``|b_1| <= b1`` is reported as index 1.
    """
    stop = f.stop
    am = np.zeros(stop + 1)
    bm = np.zeros(stop + 1)
    am[1 : f.h.stop + 1] = f.h.moduli
    bm[1 : f.g.stop + 1] = f.g.moduli
    if family.kind is FamilyKind.UNIFORM and _exceeds(bm[1], family.b1):
        return False, 1
    for n in range(2, stop + 1):
        if family.kind is FamilyKind.UNIFORM:
            if _exceeds(am[n] + bm[n], family.c):
                return False, n
            continue
        a_bound, b_bound = coefficient_bounds(family, n)
        if _exceeds(am[n], a_bound) or _exceeds(bm[n], b_bound):
            return False, n
        if family.kind is FamilyKind.BBHJ and _exceeds(abs(am[n] - bm[n]), n):
            return False, n
    return True, None


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a coefficient-sum condition ``sum <= threshold``."""

    sum: float
    tail: float
    threshold: float

    @property
    def verdict(self):
        if self.sum + self.tail <= self.threshold:
            return "pass"
        if self.sum > self.threshold:
            return "fail"
        return "inconclusive"

    @property
    def passes(self):
        return self.verdict == "pass"


def _check_alpha(alpha):
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}")
    return alpha


def _require_normalized(f):
    if not f.normalized:
        raise DomainError(f"coefficient conditions assume a_1 = 1, got a_1 = {f.a1!r}")


def _weighted_sum(f, weight_a, weight_b, a_from=2):
    """``sum_{n>=a_from} w_a(n)|a_n| + sum_{n>=1} w_b(n)|b_n|`` over stored terms."""
    na = f.h.indices
    nb = f.g.indices
    sa = f.h.moduli[na >= a_from] @ weight_a(na[na >= a_from].astype(float)) if na.size else 0.0
    sb = f.g.moduli @ weight_b(nb.astype(float)) if nb.size else 0.0
    return float(sa + sb)


def check_fully_starlike_sum(f, alpha=0.0):
    """Sufficient condition for full starlikeness of order ``alpha``.

    ``sum_{n>=2} (n-alpha)/(1-alpha)|a_n| + sum_{n>=1} (n+alpha)/(1-alpha)|b_n| <= 1``.
    """
    alpha = _check_alpha(alpha)
    _require_normalized(f)
    k = 1.0 - alpha
    total = _weighted_sum(f, lambda n: (n - alpha) / k, lambda n: (n + alpha) / k)
    # (n - alpha) <= n and (n + alpha) <= (1 + alpha) n
    tail = (coefficient_tail(f.h, 1) + (1.0 + alpha) * coefficient_tail(f.g, 1)) / k
    return CheckResult(total, tail, 1.0)


def check_fully_convex_sum(f, alpha=0.0):
    """Sufficient condition for full convexity of order ``alpha``.

    Weights ``n(n-alpha)/(1-alpha)`` on ``|a_n|`` and ``n(n+alpha)/(1-alpha)``
    on ``|b_n|``.
    """
    alpha = _check_alpha(alpha)
    _require_normalized(f)
    k = 1.0 - alpha
    total = _weighted_sum(f, lambda n: n * (n - alpha) / k, lambda n: n * (n + alpha) / k)
    tail = (coefficient_tail(f.h, 2) + (1.0 + alpha) * coefficient_tail(f.g, 2)) / k
    return CheckResult(total, tail, 1.0)


def check_k2_lambda(f, lam=0.0):
    """Sufficient condition for ``f`` in ``K_H^2(lambda)``.

    ``sum_{n>=2} (1-lam+lam n) n (|a_n| + |b_n|) <= 1 - |b_1|``; requires
    ``J_f(0) = 1 - |b_1|**2 > 0``.
    """
    lam = float(lam)
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")
    _require_normalized(f)
    b1 = abs(f.b1)
    if b1 >= 1.0:
        raise HypothesisError(f"|b_1| = {b1!r} >= 1 violates J_f(0) = 1 - |b_1|^2 > 0")

    def w(n):
        return np.where(n >= 2, (1.0 - lam + lam * n) * n, 0.0)

    total = _weighted_sum(f, w, w)
    # (1 - lam + lam n) n <= max(1, lam) n^2
    tail = max(1.0, lam) * (coefficient_tail(f.h, 2) + coefficient_tail(f.g, 2))
    return CheckResult(total, tail, 1.0 - b1)
