"""Closed-form Matern kernel profiles for half-integer orders.

The Whittle-Matern radial profile of order ``nu`` is ``c_nu * t^nu * K_nu(t)``
with ``K_nu`` the modified Bessel function of the second kind.  For
half-integer orders ``nu = n + 1/2`` this collapses to an elementary closed
form

    phi(t) = p_n(t) * exp(-t),

where ``p_n`` is a degree-``n`` polynomial with ``p_n(0) = 1``.  We fix the
normalization ``c_nu = 2^(1-nu) / Gamma(nu)`` so that ``phi(0) = 1``, which
gives the familiar profiles ``exp(-t)`` (nu=1/2), ``(1+t) exp(-t)`` (nu=3/2)
and ``(1 + t + t^2/3) exp(-t)`` (nu=5/2).  Derivatives are exact polynomial
manipulations, never finite differences.

Only half-integer orders are accepted; general real orders would need a
Bessel library and none of the supported Sobolev indices require them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly

__all__ = [
    "KernelSpec",
    "RadialProfile",
    "half_integer_index",
    "profile_polynomial",
    "matern_profile",
    "matern_profile_deriv",
    "wendland_phi31",
    "wendland_phi31_deriv",
    "kernel_eval",
]


def half_integer_index(nu: float) -> int:
    """Return n >= 0 with nu == n + 1/2, rejecting any other order."""
    n = round(float(nu) - 0.5)
    if n < 0 or abs(float(nu) - (n + 0.5)) > 1e-12:
        raise ValueError(
            f"order must be a positive half-integer (1/2, 3/2, ...), got nu={nu}"
        )
    return int(n)


@lru_cache(maxsize=None)
def _profile_poly_cached(n: int) -> tuple[float, ...]:
    # coefficient of t^(n-k) is pref * (n+k)! / (k! (n-k)!) / 2^k, ascending order
    pref = 2.0**n * math.factorial(n) / math.factorial(2 * n)
    coeffs = [0.0] * (n + 1)
    for k in range(n + 1):
        a_k = math.factorial(n + k) / (math.factorial(k) * math.factorial(n - k))
        coeffs[n - k] = pref * a_k / 2.0**k
    return tuple(coeffs)


def profile_polynomial(nu: float) -> np.ndarray:
    """Ascending coefficients of p_n with matern_profile(nu, t) = p_n(t) exp(-t)."""
    return np.asarray(_profile_poly_cached(half_integer_index(nu)))


@lru_cache(maxsize=None)
def _deriv_poly_cached(n: int, order: int) -> tuple[float, ...]:
    # d/dt [p(t) exp(-t)] = (p' - p) exp(-t); iterate on the polynomial factor
    c = np.asarray(_profile_poly_cached(n))
    for _ in range(order):
        c = npoly.polysub(npoly.polyder(c), c)
    return tuple(np.atleast_1d(c))


def _phi_deriv_unchecked(nu: float, t, order: int):
    """order-th derivative of the profile, no smoothness gate (t >= 0)."""
    c = np.asarray(_deriv_poly_cached(half_integer_index(nu), order))
    t = np.asarray(t, dtype=float)
    return npoly.polyval(t, c) * np.exp(-t)


def _check_radius(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or not np.all(np.isfinite(t)):
        raise ValueError("radius t must be finite and nonnegative")
    return t


def matern_profile(nu: float, t):
    """Evaluate the normalized Matern profile c_nu t^nu K_nu(t).

    Returns 1 at t = 0 (the limit value); strictly positive and strictly
    decreasing in t.  Accepts scalars or arrays.
    """
    half_integer_index(nu)
    tt = _check_radius(t)
    out = _phi_deriv_unchecked(nu, tt, 0)
    return float(out) if np.isscalar(t) or np.ndim(t) == 0 else out


def matern_profile_deriv(nu: float, t, order: int):
    """Exact radial derivative of the Matern profile, order 0..2.

    The available order is limited by the kernel smoothness: the kernel is
    C^(2n) at the origin for nu = n + 1/2, so at t = 0 only orders <= 2n are
    defined, and away from zero orders up to 2n + 1 (one-sided at the |x|
    kink of the kernel translate).
    """
    n = half_integer_index(nu)
    if not 0 <= order <= 2:
        raise ValueError(f"derivative order must be in 0..2, got {order}")
    tt = _check_radius(t)
    if order > 2 * n + 1:
        raise ValueError(
            f"order {order} exceeds the {2 * n + 1} available derivatives of the "
            f"nu={nu} profile away from zero"
        )
    if order > 2 * n and np.any(tt == 0.0):
        raise ValueError(
            f"order {order} is not defined at t=0 for nu={nu} "
            f"(kernel is C^{2 * n} at the origin)"
        )
    out = _phi_deriv_unchecked(nu, tt, order)
    return float(out) if np.isscalar(t) or np.ndim(t) == 0 else out


def wendland_phi31(t, r: float):
    """Wendland comparator (1 - t/r)_+^4 (1 + 4 t/r); value 1 at 0, 0 for t >= r."""
    if r <= 0:
        raise ValueError("support radius r must be positive")
    tt = _check_radius(t)
    s = tt / r
    out = np.where(s < 1.0, (1.0 - np.minimum(s, 1.0)) ** 4 * (1.0 + 4.0 * s), 0.0)
    return float(out) if np.isscalar(t) or np.ndim(t) == 0 else out


def wendland_phi31_deriv(t, r: float):
    """Radial derivative of wendland_phi31: -20 (t/r) (1 - t/r)_+^3 / r."""
    if r <= 0:
        raise ValueError("support radius r must be positive")
    tt = _check_radius(t)
    s = tt / r
    out = np.where(s < 1.0, -20.0 * s * (1.0 - np.minimum(s, 1.0)) ** 3 / r, 0.0)
    return float(out) if np.isscalar(t) or np.ndim(t) == 0 else out


@dataclass(frozen=True)
class KernelSpec:
    """The pair (d, m) identifying the Sobolev space and its Matern kernel.

    d is the spatial dimension (1 or 2), m the Sobolev smoothness (a positive
    multiple of 1/2 with m > d/2).  The derived Matern order nu = m - d/2 must
    be a half-integer; the constructor rejects everything else (e.g. d=2, m=2,
    where the construction breaks down at the boundary).
    """

    d: int
    m: float
    nu: float = field(init=False)
    cnu: float = field(init=False)

    def __post_init__(self) -> None:
        if self.d not in (1, 2):
            raise ValueError(f"dimension d must be 1 or 2, got {self.d}")
        m = float(self.m)
        if abs(2 * m - round(2 * m)) > 1e-12 or m <= 0:
            raise ValueError(f"smoothness m must be a positive multiple of 1/2, got {m}")
        if m <= self.d / 2:
            raise ValueError(f"need m > d/2 for a continuous native space, got m={m}, d={self.d}")
        nu = m - self.d / 2
        half_integer_index(nu)  # rejects integer nu such as (d=2, m=2)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "cnu", 2.0 ** (1.0 - nu) / math.gamma(nu))

    @property
    def trace_count(self) -> int:
        """Number of boundary conditions: #{j integer : 0 <= j < m - 1/2}."""
        return int(math.ceil(self.m - 0.5))

    def profile(self, t):
        return matern_profile(self.nu, t)


@dataclass
class RadialProfile:
    """A sampled univariate radial function on [0, r] with metadata."""

    spec: KernelSpec
    r: float
    ts: np.ndarray
    values: np.ndarray
    label: str

    def __post_init__(self) -> None:
        self.ts = np.asarray(self.ts, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.ts.shape != self.values.shape or self.ts.ndim != 1 or self.ts.size < 2:
            raise ValueError("ts and values must be 1-d arrays of equal length >= 2")
        if self.ts[0] != 0.0 or self.ts[-1] != self.r:
            raise ValueError("sample abscissae must start at 0 and end at r")
        if np.any(np.diff(self.ts) <= 0):
            raise ValueError("sample abscissae must be strictly increasing")
        if self.label == "b_r_star":
            if self.values[0] != 1.0 or self.values[-1] != 0.0:
                raise ValueError("a bump profile must have value 1 at 0 and 0 at r")


def kernel_eval(spec: KernelSpec, x, y) -> float:
    """Translation-invariant kernel K(x, y) = matern_profile(nu, ||x - y||)."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    ya = np.atleast_1d(np.asarray(y, dtype=float))
    if xa.shape != (spec.d,) or ya.shape != (spec.d,):
        raise ValueError(f"points must have dimension d={spec.d}, got {xa.shape} and {ya.shape}")
    return matern_profile(spec.nu, float(np.linalg.norm(xa - ya)))
