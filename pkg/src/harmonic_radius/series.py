"""Truncated power series with a declared tail, and the closed-form power sums.

A :class:`CoeffSeq` stores finitely many coefficients ``c_n`` of a power
series ``sum c_n z**n`` together with a growth declaration for the part that
was not stored::

    |c_n| <= C * n**d * rho**(n - 1)        for every n > stop

``C = 0`` means the series is exactly the stored polynomial.  The ratio
``rho`` is 1 for a series that merely has polynomial growth; rescaling
``z -> r z`` multiplies it by ``r``, which is what makes the coefficient sums
of a rescaled mapping finite.

Tail majorant
-------------
All truncation control goes through :func:`poly_geometric_tail`, an upper
bound for ``sum_{n > N} C n**d x**n``.  With ``t_n = C n**d x**n`` the ratio
``t_{n+1}/t_n = (1 + 1/n)**d x`` decreases in ``n`` towards ``x < 1``.  Terms
are summed explicitly while that ratio is still >= 1; from the first index
``m`` where ``q = (1 + 1/m)**d x < 1`` the rest is dominated by the geometric
series ``t_m / (1 - q)``.  The bound is nonincreasing in ``N``; a relative
guard of a few ulps keeps it an upper bound after floating-point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError

__all__ = [
    "CoeffSeq",
    "POWER_SUM_NUMERATORS",
    "POWER_SUM_ORDERS",
    "coefficient_tail",
    "poly_geometric_tail",
    "power_sum",
    "power_sum_closed_form",
    "required_length",
    "tail_bound",
    "truncation_length",
]

POWER_SUM_ORDERS = (1, 2, 3, 4, 5)

_ROUNDING_GUARD = 1.0 + 16 * 2.0**-52

# Safety valve for the explicit-summation phase; only reached for x -> 1.
_MAX_EXPLICIT_TERMS = 10_000_000


def _check_unit_interval(r, name="r"):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0) or np.any(arr >= 1.0) or np.any(~np.isfinite(arr)):
        raise DomainError(f"{name} must lie in [0, 1), got {r!r}")
    return arr


# sum_{n>=2} n^k r^(n-1) = r * N_k(r) / (1 - r)^(k+1); ascending coefficients of N_k
POWER_SUM_NUMERATORS = {
    1: (2, -1),
    2: (4, -3, 1),
    3: (8, -5, 4, -1),
    4: (16, 1, 11, -5, 1),
    5: (32, 51, 46, -14, 6, -1),
}


def power_sum_closed_form(k, r):
    """The rational closed form evaluated in the arithmetic of ``r``.

    Works for floats, numpy arrays and :class:`fractions.Fraction`; no domain
    checks.
    """
    acc = 0
    for c in reversed(POWER_SUM_NUMERATORS[k]):
        acc = acc * r + c
    return r * acc / (1 - r) ** (k + 1)


def power_sum(k, r):
    """Closed form of ``sum_{n>=2} n**k r**(n-1)`` for ``k`` in 1..5.

    Accepts a scalar or an array ``r`` in ``[0, 1)``.

    >>> power_sum(1, 0.5)
    3.0
    """
    if k not in POWER_SUM_ORDERS:
        raise DomainError(f"power sum order must be one of {POWER_SUM_ORDERS}, got {k!r}")
    x = _check_unit_interval(r)
    val = power_sum_closed_form(k, x)
    return float(val) if np.ndim(val) == 0 else val


def poly_geometric_tail(C, d, x, N):
    """Upper bound for ``sum_{n > N} C * n**d * x**n`` with ``0 <= x < 1``."""
    if C < 0 or d < 0:
        raise DomainError("tail rate needs C >= 0 and d >= 0")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"tail ratio must lie in [0, 1), got {x!r}")
    if C == 0.0 or x == 0.0:
        return 0.0
    log_x = math.log(x)
    n = max(int(N), 0) + 1
    total = 0.0
    for _ in range(_MAX_EXPLICIT_TERMS):
        term = C * math.exp(d * math.log(n) + n * log_x)
        q = (1.0 + 1.0 / n) ** d * x
        if q < 1.0:
            return (total + term / (1.0 - q)) * _ROUNDING_GUARD
        total += term
        n += 1
    return math.inf


def _doubling_length(C, d, x, tol):
    n = 1
    while poly_geometric_tail(C, d, x, n) >= tol:
        n *= 2
    return n


@dataclass(frozen=True)
class CoeffSeq:
    """Finite block of power-series coefficients plus a tail declaration.

    ``coeffs[i]`` is the coefficient of ``z**(start_index + i)``.  Beyond the
    stored block the caller guarantees
    ``|c_n| <= tail_scale * n**tail_degree * tail_ratio**(n - 1)``.
    """

    coeffs: np.ndarray
    start_index: int = 1
    tail_scale: float = 0.0
    tail_degree: float = 0.0
    tail_ratio: float = 1.0
    _moduli: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex).ravel()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        if int(self.start_index) != self.start_index or self.start_index < 1:
            raise DomainError(f"start_index must be an integer >= 1, got {self.start_index!r}")
        object.__setattr__(self, "start_index", int(self.start_index))
        if self.tail_scale < 0 or self.tail_degree < 0:
            raise DomainError("tail_scale and tail_degree must be nonnegative")
        if not 0.0 < self.tail_ratio <= 1.0:
            raise DomainError(f"tail_ratio must lie in (0, 1], got {self.tail_ratio!r}")
        mod = np.abs(arr)
        mod.setflags(write=False)
        object.__setattr__(self, "_moduli", mod)
        if self.tail_scale > 0 and arr.size:
            envelope = self.rate(self.indices)
            bad = np.nonzero(mod > envelope * (1.0 + 1e-12) + 1e-300)[0]
            if bad.size:
                n = int(self.indices[bad[0]])
                raise DomainError(
                    f"declared tail rate does not dominate stored coefficient at n={n}: "
                    f"|c_n|={mod[bad[0]]!r} > {envelope[bad[0]]!r}"
                )

    @property
    def stop(self):
        """Largest stored index (``start_index - 1`` when nothing is stored)."""
        return self.start_index + self.coeffs.size - 1

    @property
    def indices(self):
        return np.arange(self.start_index, self.stop + 1)

    @property
    def moduli(self):
        return self._moduli

    @property
    def exact(self):
        return self.tail_scale == 0.0

    def rate(self, n):
        """Declared envelope ``C n**d rho**(n-1)`` at index (or indices) ``n``."""
        n = np.asarray(n, dtype=float)
        return self.tail_scale * n**self.tail_degree * self.tail_ratio ** (n - 1.0)

    def coefficient(self, n):
        """Stored coefficient at index ``n``; 0 below ``start_index``."""
        i = n - self.start_index
        if i < 0:
            return 0j
        if i >= self.coeffs.size:
            raise IndexError(f"index {n} beyond stored range (stop={self.stop})")
        return complex(self.coeffs[i])

    def truncated(self, stop):
        """Copy keeping indices up to ``stop``; the tail declaration is kept."""
        keep = max(0, stop - self.start_index + 1)
        return CoeffSeq(
            self.coeffs[:keep],
            self.start_index,
            self.tail_scale,
            self.tail_degree,
            self.tail_ratio,
        )


def tail_bound(seq, r, extra_degree=0):
    """Bound on ``sum_{n > stop} n**extra_degree |c_n| r**n``.

    ``extra_degree`` accounts for derivative-type weights (``extra_degree=1``
    bounds the tail of ``z f'(z)``).
    """
    r = float(_check_unit_interval(r))
    if seq.exact:
        return 0.0
    rho = seq.tail_ratio
    return poly_geometric_tail(seq.tail_scale / rho, seq.tail_degree + extra_degree, rho * r, seq.stop)


def coefficient_tail(seq, extra_degree=0):
    """Bound on ``sum_{n > stop} n**extra_degree |c_n|`` (the series at |z| = 1).

    Finite only when the declaration has ``tail_ratio < 1``; returns ``inf``
    otherwise.
    """
    if seq.exact:
        return 0.0
    rho = seq.tail_ratio
    if rho >= 1.0:
        return math.inf
    return poly_geometric_tail(seq.tail_scale / rho, seq.tail_degree + extra_degree, rho, seq.stop)


def required_length(seq, r, tol, extra_degree=0):
    """Smallest power-of-two stop index whose tail at ``r`` is below ``tol``."""
    r = float(_check_unit_interval(r))
    if seq.exact:
        return seq.stop
    rho = seq.tail_ratio
    return _doubling_length(seq.tail_scale / rho, seq.tail_degree + extra_degree, rho * r, tol)


def truncation_length(family, r, tol, extra_degree=0):
    """Truncation index ``N`` making a family's majorant tail at ``r`` < ``tol``.

    ``family`` is anything with a ``growth_rate()`` method returning
    ``(C, d)`` with ``|a_n|, |b_n| <= C n**d``.  ``extra_degree`` raises the
    degree for operator or checker weights.  ``N`` is found by doubling from 1.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    C, d = family.growth_rate()
    return _doubling_length(C, d + extra_degree, r, tol)
