"""Construction of norm-minimal compactly supported kernel-space functions.

The optimal bump on the ball of radius r is obtained by projecting the
kernel translate at the origin onto the zero-trace subspace.  Concretely:
build the boundary-trace functions g_j (j-th normal derivative of the
kernel, integrated over the boundary sphere), solve the small symmetric
positive definite system that zeroes the boundary traces, combine

    g(t) = phi(t) - sum_j c_j * ghat_j(t),

and normalize b(t) = g(t) / g(0).  The squared minimal norm is 1 / g(0).

For d=1 the boundary is two points and everything is closed form; for d=2
the traces are circle integrals evaluated by kink-aware panel quadrature.
Radial derivatives of the traces are taken analytically under the integral
sign; an optional finite-difference cross-check guards the analytic path in
validation mode.

Supported smoothness: up to two trace conditions (m <= 2 for d=1,
m <= 5/2 for d=2).  More conditions would need profile derivatives beyond
second order, which the kernel module deliberately does not expose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from .kernels import (
    KernelSpec,
    RadialProfile,
    _phi_deriv_unchecked,
    half_integer_index,
    profile_polynomial,
)
from .quadrature import (
    BoundaryIntegrand,
    IntegralResult,
    NonConvergence,
    QuadratureConfig,
    integrate_circle,
)

__all__ = [
    "BumpProblem",
    "TraceSystem",
    "OptimalBump",
    "TranslateRepresenter",
    "SingularSystem",
    "NonPositiveG0",
    "g_j_r",
    "g_j_r_at_point",
    "assemble_trace_system",
    "solve_bump",
    "beta_of_r",
    "translate_1d",
    "kernel_Kr_1d",
]

_TWO_PI = 2.0 * math.pi

# Maximum trace-condition count; entries of the trace system need profile
# derivatives of order up to 2*(J-1), capped at 2 by the kernel module.
_MAX_TRACE_CONDITIONS = 2


class SingularSystem(RuntimeError):
    """Trace-system factorization or residual check failed."""


class NonPositiveG0(RuntimeError):
    """Central value of the projected translate is not positive (numerical breakdown)."""


@dataclass(frozen=True)
class BumpProblem:
    """A support radius together with the kernel spec and quadrature policy."""

    spec: KernelSpec
    r: float
    quad: QuadratureConfig = QuadratureConfig()

    def __post_init__(self) -> None:
        if not (np.isfinite(self.r) and self.r > 0):
            raise ValueError(f"support radius must be positive and finite, got {self.r}")
        j = self.spec.trace_count
        if j > _MAX_TRACE_CONDITIONS:
            raise ValueError(
                f"m={self.spec.m} needs {j} trace conditions; only up to "
                f"{_MAX_TRACE_CONDITIONS} are supported (profile derivatives are "
                "capped at second order)"
            )

    @property
    def trace_count(self) -> int:
        return self.spec.trace_count

    @property
    def boundary_weight(self) -> float:
        """Measure of the boundary functional: 2 points in 1d, angle 2*pi in 2d."""
        return 2.0 if self.spec.d == 1 else _TWO_PI


@lru_cache(maxsize=None)
def _poly_bundle(n: int) -> dict[str, tuple[float, ...] | None]:
    """Polynomial factors of the profile and the derivative combinations.

    phi    = p(t) e^-t
    phi'   = s(t) e^-t           with s = p' - p
    phi'/t = q(t) e^-t           (q exists for n >= 1 since s(0) = 0)
    phi'' - phi'/t = w(t) e^-t   with w = s' - s - q
    """
    p = np.asarray(profile_polynomial(n + 0.5))
    s = npoly.polysub(npoly.polyder(p), p)
    if n >= 1:
        q = np.asarray(s[1:])
        w = npoly.polysub(npoly.polysub(npoly.polyder(s), s), q)
    else:
        q = None
        w = None
    return {
        "p": tuple(np.atleast_1d(p)),
        "s": tuple(np.atleast_1d(s)),
        "q": None if q is None else tuple(np.atleast_1d(q)),
        "w": None if w is None else tuple(np.atleast_1d(w)),
    }


def _circle_trace_integrand(
    nu: float, r: float, j: int, k: int, t: np.ndarray, theta: float = 0.0
) -> Callable[[np.ndarray], np.ndarray]:
    """Integrand of the k-th radial derivative of the j-th trace profile.

    Evaluation points sit at radius t (one row per entry of t); boundary
    points at angle phi.  Chord quantities are computed via sin(phi/2) to
    stay accurate near the phi = theta kink:

        rho^2 = (r - t)^2 + 4 r t sin^2((phi - theta)/2)
        u = (r - t) + 2 t sin^2(...)     (d rho / d r', boundary side, times rho)
        v = (t - r) + 2 r sin^2(...)     (d rho / d t times rho)
    """
    bundle = _poly_bundle(half_integer_index(nu))
    p = np.asarray(bundle["p"])
    s = np.asarray(bundle["s"])
    q = None if bundle["q"] is None else np.asarray(bundle["q"])
    w = None if bundle["w"] is None else np.asarray(bundle["w"])
    t_col = np.asarray(t, dtype=float)[:, None]

    def evaluator(phi: np.ndarray) -> np.ndarray:
        sin2 = np.sin(0.5 * (phi - theta))[None, :] ** 2
        cosphi = 1.0 - 2.0 * sin2
        rho = np.sqrt((r - t_col) ** 2 + 4.0 * r * t_col * sin2)
        rho_safe = np.maximum(rho, np.finfo(float).tiny)
        damp = np.exp(-rho)
        if j == 0 and k == 0:
            return npoly.polyval(rho, p) * damp
        u = (r - t_col) + 2.0 * t_col * sin2
        v = (t_col - r) + 2.0 * r * sin2
        if j == 0 and k == 1:
            return npoly.polyval(rho, s) * damp * (v / rho_safe)
        if j == 1 and k == 0:
            return npoly.polyval(rho, q) * damp * u
        if j == 1 and k == 1:
            return damp * (
                npoly.polyval(rho, w) * (u / rho_safe) * (v / rho_safe)
                - npoly.polyval(rho, q) * cosphi
            )
        raise ValueError(f"unsupported trace orders (j={j}, k={k})")

    return evaluator


def _d1_trace_profile(nu: float, r: float, j: int, k: int, t: np.ndarray) -> np.ndarray:
    """(d/dt)^k of the 1-d trace profile ghat_j at radii t (limit from inside at t=r).

    ghat_j(t) = sign(r-t)^j phi^(j)(|t-r|) + phi^(j)(t+r); the kernel is even
    so both boundary points contribute the same radial profile.
    """
    t = np.asarray(t, dtype=float)
    inner = t <= r
    out = np.empty_like(t)
    d = _phi_deriv_unchecked
    out[inner] = (-1.0) ** k * d(nu, r - t[inner], j + k) + d(nu, r + t[inner], j + k)
    if np.any(~inner):
        out[~inner] = (-1.0) ** j * d(nu, t[~inner] - r, j + k) + d(nu, t[~inner] + r, j + k)
    return out


def _trace_profile(problem: BumpProblem, j: int, k: int, t: np.ndarray) -> np.ndarray:
    """(d/dt)^k of the radial profile of g_j at radii t."""
    if problem.spec.d == 1:
        return _d1_trace_profile(problem.spec.nu, problem.r, j, k, t)
    integrand = _circle_trace_integrand(problem.spec.nu, problem.r, j, k, t)
    result = integrate_circle(BoundaryIntegrand(integrand, (0.0,)), problem.quad)
    return np.atleast_1d(np.asarray(result.value, dtype=float))


def g_j_r(problem: BumpProblem, j: int, t):
    """Radial profile of the j-th boundary-trace function at radii t.

    For d=1 this is the closed-form two-point trace sum; for d=2 the circle
    integral of the j-th normal derivative of the kernel, taken on the
    boundary variable.  Propagates quadrature NonConvergence.
    """
    if not 0 <= j < problem.trace_count:
        raise ValueError(f"trace order j={j} outside 0..{problem.trace_count - 1}")
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise ValueError("radial coordinate t must be nonnegative")
    out = _trace_profile(problem, j, 0, tt)
    return float(out[0]) if np.ndim(t) == 0 else out


def g_j_r_at_point(problem: BumpProblem, j: int, x) -> float:
    """Trace function evaluated at an arbitrary 2-d point (non-radial path).

    Used to confirm rotational invariance: the integrand is parameterized by
    the actual point angle, so the quadrature nodes differ from the radial
    path while the result must agree.
    """
    if problem.spec.d != 2:
        raise ValueError("the non-radial path is only meaningful for d=2")
    xa = np.asarray(x, dtype=float)
    if xa.shape != (2,):
        raise ValueError("x must be a 2-d point")
    t = float(np.linalg.norm(xa))
    theta = math.atan2(xa[1], xa[0]) % _TWO_PI
    integrand = _circle_trace_integrand(
        problem.spec.nu, problem.r, j, 0, np.asarray([t]), theta=theta
    )
    result = integrate_circle(BoundaryIntegrand(integrand, (theta,)), problem.quad)
    return float(np.asarray(result.value)[0])


@dataclass
class TraceSystem:
    """The small dense system that zeroes all boundary traces.

    matrix[k][j] applies the k-th trace functional to the j-th trace
    function; it is a Gram matrix of the boundary functionals and therefore
    symmetric positive definite.  rhs[k] is the k-th trace profile at the
    origin.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    coefficients: np.ndarray
    asymmetry: float
    residual: float


def _richardson_fd(fun: Callable[[np.ndarray], np.ndarray], t0: float, h: float) -> np.ndarray:
    vals = fun(np.asarray([t0 + h, t0 - h, t0 + 0.5 * h, t0 - 0.5 * h]))
    coarse = (vals[0] - vals[1]) / (2.0 * h)
    fine = (vals[2] - vals[3]) / h
    return (4.0 * fine - coarse) / 3.0


def assemble_trace_system(problem: BumpProblem, validate: bool = False) -> TraceSystem:
    """Build and solve the boundary-trace system for the given problem.

    Entries are analytic derivatives under the boundary integral.  With
    validate=True every derivative entry is cross-checked against a
    Richardson-extrapolated central difference of the underlying profile
    (step 1e-5 * r), guarding the analytic path near the chord kink.
    """
    nj = problem.trace_count
    weight = problem.boundary_weight
    r = problem.r
    t_r = np.asarray([r])

    a = np.empty((nj, nj))
    for k in range(nj):
        for j in range(nj):
            a[k, j] = weight * float(_trace_profile(problem, j, k, t_r)[0])
    rhs = np.asarray(
        [weight * float(_phi_deriv_unchecked(problem.spec.nu, r, k)) for k in range(nj)]
    )

    if validate:
        h = 1e-5 * r
        for j in range(nj):
            analytic = a[1, j] / weight if nj > 1 else None
            if analytic is None:
                continue
            fd = float(_richardson_fd(lambda tt: _trace_profile(problem, j, 0, tt), r, h))
            if abs(fd - analytic) > 1e-6 * max(1.0, abs(analytic)):
                raise SingularSystem(
                    f"analytic trace derivative {analytic!r} disagrees with "
                    f"finite difference {fd!r} for j={j}"
                )

    scale = float(np.max(np.abs(a)))
    asymmetry = float(np.max(np.abs(a - a.T)))
    if asymmetry > 1e-9 * max(scale, 1.0):
        raise SingularSystem(f"trace matrix asymmetry {asymmetry} exceeds tolerance")
    sym = 0.5 * (a + a.T)

    try:
        chol = np.linalg.cholesky(sym)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(
            "trace matrix is not positive definite (kernel order / quadrature mismatch)"
        ) from exc
    coeff = np.linalg.solve(chol.T, np.linalg.solve(chol, rhs))

    residual = float(np.linalg.norm(sym @ coeff - rhs) / max(np.linalg.norm(rhs), 1e-300))
    if residual > 1e-12:
        raise SingularSystem(f"trace system residual {residual} exceeds 1e-12")
    return TraceSystem(matrix=a, rhs=rhs, coefficients=coeff, asymmetry=asymmetry, residual=residual)


@dataclass
class OptimalBump:
    """Solved norm-minimal bump: coefficients, central value, norm, evaluators.

    evaluate() returns the radial profile of the bump itself: exactly 1 at
    t=0, exactly 0 for t >= r (compact support is a hard contract), and the
    normalized projected-translate profile in between.
    """

    problem: BumpProblem
    system: TraceSystem
    g_r_at_0: float
    beta: float
    _profile_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def r(self) -> float:
        return self.problem.r

    def _raw_profile(self, t: np.ndarray, order: int) -> np.ndarray:
        """(d/dt)^order of g(t) = phi(t) - sum_j c_j ghat_j(t) (inside points only)."""
        nu = self.problem.spec.nu
        out = _phi_deriv_unchecked(nu, t, order)
        for j, c in enumerate(self.system.coefficients):
            out = out - c * _trace_profile(self.problem, j, order, t)
        return out

    def evaluate(self, t):
        """Bump profile at radii t (scalar or array)."""
        tt = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(tt < 0):
            raise ValueError("radial coordinate t must be nonnegative")
        out = np.zeros_like(tt)
        inside = tt < self.r
        if np.any(inside):
            out[inside] = self._raw_profile(tt[inside], 0) / self.g_r_at_0
        out[tt == 0.0] = 1.0
        return float(out[0]) if np.ndim(t) == 0 else out

    def evaluate_deriv(self, t):
        """Radial derivative of the bump profile (right-sided at t=0); 0 outside."""
        tt = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(tt < 0):
            raise ValueError("radial coordinate t must be nonnegative")
        out = np.zeros_like(tt)
        inside = tt < self.r
        if np.any(inside):
            out[inside] = self._raw_profile(tt[inside], 1) / self.g_r_at_0
        return float(out[0]) if np.ndim(t) == 0 else out

    def boundary_residuals(self) -> np.ndarray:
        """Trace functionals applied to the projected translate, freshly evaluated.

        All entries must vanish to tolerance for a correct solve; this
        re-evaluates the boundary integrals rather than reusing the solver's
        residual vector.
        """
        weight = self.problem.boundary_weight
        t_r = np.asarray([self.r])
        vals = []
        for k in range(self.problem.trace_count):
            phi_k = float(_phi_deriv_unchecked(self.problem.spec.nu, self.r, k))
            trace = phi_k - float(
                np.dot(
                    self.system.coefficients,
                    [
                        float(_trace_profile(self.problem, j, k, t_r)[0])
                        for j in range(self.problem.trace_count)
                    ],
                )
            )
            vals.append(weight * trace)
        return np.asarray(vals)

    def radial_profile(self, n: int = 1025) -> RadialProfile:
        """Dense Chebyshev-Lobatto sampling of the bump on [0, r] (cached)."""
        if n < 2:
            raise ValueError("need at least the two endpoint samples")
        if n not in self._profile_cache:
            i = np.arange(n)
            ts = 0.5 * self.r * (1.0 - np.cos(math.pi * i / (n - 1)))
            ts[0], ts[-1] = 0.0, self.r
            self._profile_cache[n] = RadialProfile(
                spec=self.problem.spec,
                r=self.r,
                ts=ts,
                values=self.evaluate(ts),
                label="b_r_star",
            )
        return self._profile_cache[n]


def solve_bump(problem: BumpProblem, validate: bool = False) -> OptimalBump:
    """Solve for the norm-minimal bump of the given problem.

    The central value g(0) = 1 - c . rhs must be strictly positive; the
    minimal norm is g(0)^(-1/2).
    """
    system = assemble_trace_system(problem, validate=validate)
    g0 = 1.0 - float(np.dot(system.coefficients, system.rhs))
    if g0 <= 1e-14:
        raise NonPositiveG0(f"central value {g0} is not positive; numerical breakdown")
    return OptimalBump(problem=problem, system=system, g_r_at_0=g0, beta=g0**-0.5)


def beta_of_r(problem: BumpProblem) -> float:
    """Minimal bump norm for the given support radius."""
    return solve_bump(problem).beta


@dataclass
class TranslateRepresenter:
    """Riesz representer of a point evaluation on the zero-trace space (d=1, m=1).

    g(y) = exp(-|x-y|) - a exp(-|y-r|) - b exp(-|y+r|) inside (-r, r) and
    exactly zero outside, with (a, b) chosen so both boundary values vanish.
    """

    r: float
    x: float
    coeff_plus: float
    coeff_minus: float
    norm: float

    def evaluate(self, y):
        yy = np.atleast_1d(np.asarray(y, dtype=float))
        out = np.zeros_like(yy)
        inside = np.abs(yy) < self.r
        yi = yy[inside]
        out[inside] = (
            np.exp(-np.abs(self.x - yi))
            - self.coeff_plus * np.exp(-(self.r - yi))
            - self.coeff_minus * np.exp(-(self.r + yi))
        )
        return float(out[0]) if np.ndim(y) == 0 else out

    def evaluate_deriv(self, y):
        yy = np.atleast_1d(np.asarray(y, dtype=float))
        out = np.zeros_like(yy)
        inside = np.abs(yy) < self.r
        yi = yy[inside]
        out[inside] = (
            np.sign(self.x - yi) * np.exp(-np.abs(self.x - yi))
            - self.coeff_plus * np.exp(-(self.r - yi))
            + self.coeff_minus * np.exp(-(self.r + yi))
        )
        return float(out[0]) if np.ndim(y) == 0 else out


def translate_1d(r: float, x: float) -> TranslateRepresenter:
    """Project the kernel translate at x onto the zero-trace space (d=1, m=1).

    Subtracting the right combination of boundary kernel translates makes the
    result vanish identically outside (-r, r), so enforcing the two boundary
    values is exact, not approximate.
    """
    if r <= 0:
        raise ValueError("support radius r must be positive")
    if not abs(x) < r:
        raise ValueError(f"center x={x} must lie strictly inside (-{r}, {r})")
    e2r = math.exp(-2.0 * r)
    m = np.asarray([[1.0, e2r], [e2r, 1.0]])
    rhs = np.asarray([math.exp(-(r - x)), math.exp(-(r + x))])
    a, b = np.linalg.solve(m, rhs)
    norm_sq = 1.0 - a * math.exp(-(r - x)) - b * math.exp(-(r + x))
    if norm_sq <= 0:
        raise NonPositiveG0(f"representer norm^2 {norm_sq} is not positive")
    return TranslateRepresenter(r=r, x=x, coeff_plus=float(a), coeff_minus=float(b), norm=math.sqrt(norm_sq))


def kernel_Kr_1d(r: float, x: float, y: float) -> float:
    """Reproducing kernel of the zero-trace space on (-r, r) for d=1, m=1."""
    if not (abs(x) < r and abs(y) < r):
        raise ValueError("both arguments must lie strictly inside (-r, r)")
    return translate_1d(r, y).evaluate(x)
