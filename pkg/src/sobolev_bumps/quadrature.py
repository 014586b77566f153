"""Composite Gauss panel quadrature for boundary functionals.

Boundary traces of kernel translates are smooth except where the chord
distance has a kink (phi = 0 on the circle for radial integrands), so the
domain is split at known kink locations and each piece is integrated with
composite Gauss-Legendre panels.  The panel count doubles until two
successive estimates agree within the requested tolerance.

All node evaluations are vectorized and summed with numpy's pairwise
summation, so results are deterministic and reproducible regardless of how
callers parallelize around this module.  Evaluators may return a batch of
integrands as an array with the node axis last; the integral then has the
matching leading shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "QuadratureConfig",
    "BoundaryIntegrand",
    "IntegralResult",
    "NonConvergence",
    "integrate_interval",
    "integrate_circle",
    "boundary_sum_1d",
]

_TWO_PI = 2.0 * math.pi

_GAUSS_ORDER = 10
_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(_GAUSS_ORDER)


class NonConvergence(RuntimeError):
    """Panel doubling hit the cap without meeting the tolerance."""

    def __init__(self, message: str, last: float, previous: float):
        super().__init__(f"{message} (last two estimates: {previous!r}, {last!r})")
        self.last = last
        self.previous = previous


@dataclass(frozen=True)
class QuadratureConfig:
    """Refinement policy: initial panel count, relative tolerance, doubling cap."""

    n_init: int = 64
    tol: float = 1e-10
    max_doublings: int = 16

    def __post_init__(self) -> None:
        if self.n_init < 16 or self.n_init & (self.n_init - 1):
            raise ValueError(f"n_init must be a power of two >= 16, got {self.n_init}")
        if not 0.0 < self.tol <= 1e-4:
            raise ValueError(f"tol must lie in (0, 1e-4], got {self.tol}")
        if not 1 <= self.max_doublings <= 24:
            raise ValueError(f"max_doublings must lie in 1..24, got {self.max_doublings}")


@dataclass(frozen=True)
class BoundaryIntegrand:
    """Evaluator over the boundary parameter plus its known kink locations.

    For d=2 the parameter is the angle on [0, 2*pi); kink locations are
    angles where the integrand is continuous but not smooth (phi = 0 by
    default, where the chord distance 2 r |sin(phi/2)| has its kink).
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    known_kinks: tuple[float, ...] = (0.0,)


class IntegralResult(NamedTuple):
    value: float | np.ndarray
    error: float
    panels: int


def _evaluate(f: Callable, nodes: np.ndarray) -> np.ndarray:
    """Evaluate f on all nodes, tolerating scalar-only evaluators."""
    try:
        vals = np.asarray(f(nodes), dtype=float)
    except (TypeError, ValueError):
        vals = np.asarray([f(x) for x in nodes], dtype=float)
    if vals.ndim == 0:
        vals = np.full(nodes.shape, float(vals))
    elif vals.shape[-1] != nodes.size:
        raise ValueError(
            f"integrand returned shape {vals.shape} for {nodes.size} nodes; "
            "the node axis must be last"
        )
    return vals


def _piece_bounds(a: float, b: float, kinks) -> list[tuple[float, float]]:
    cuts = sorted({float(k) for k in kinks if a < float(k) < b})
    edges = [a, *cuts, b]
    return [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]


def _panel_nodes(pieces, panels_per_piece: int) -> tuple[np.ndarray, np.ndarray]:
    nodes = []
    weights = []
    for lo, hi in pieces:
        edges = np.linspace(lo, hi, panels_per_piece + 1)
        mid = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1:] - edges[:-1])
        nodes.append((mid[:, None] + half[:, None] * _GAUSS_NODES[None, :]).ravel())
        weights.append((half[:, None] * _GAUSS_WEIGHTS[None, :]).ravel())
    return np.concatenate(nodes), np.concatenate(weights)


def integrate_interval(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    kinks=(),
    cfg: QuadratureConfig | None = None,
) -> IntegralResult:
    """Integrate f over [a, b], splitting at interior kinks.

    Convergence is declared when two successive doublings agree within
    tol * max(|I|, (b - a) * max|f|); the second term keeps near-cancelling
    integrands (e.g. full-period oscillations) from refining forever.
    """
    cfg = cfg or QuadratureConfig()
    if not b > a:
        raise ValueError(f"empty integration interval [{a}, {b}]")
    pieces = _piece_bounds(a, b, kinks)

    previous = None
    absmax = 0.0
    for stage in range(cfg.max_doublings + 1):
        per_piece = cfg.n_init * 2**stage
        nodes, weights = _panel_nodes(pieces, per_piece)
        vals = _evaluate(f, nodes)
        if not np.all(np.isfinite(vals)):
            raise ValueError("integrand returned non-finite values")
        current = np.sum(vals * weights, axis=-1)
        absmax = max(absmax, float(np.max(np.abs(vals), initial=0.0)))
        if previous is not None:
            err = float(np.max(np.abs(current - previous)))
            scale = max(float(np.max(np.abs(current))), absmax * (b - a))
            if scale == 0.0 or err <= cfg.tol * scale:
                value = float(current) if np.ndim(current) == 0 else current
                return IntegralResult(value, err, per_piece * len(pieces))
        previous = current

    raise NonConvergence(
        f"no convergence to tol={cfg.tol} after {cfg.max_doublings} doublings",
        float(np.max(np.abs(current))),
        float(np.max(np.abs(previous))),
    )


def integrate_circle(
    f: BoundaryIntegrand | Callable[[np.ndarray], np.ndarray],
    cfg: QuadratureConfig | None = None,
) -> IntegralResult:
    """Integral over the full angle range [0, 2*pi] with kink-aware panels."""
    if isinstance(f, BoundaryIntegrand):
        evaluator, kinks = f.evaluator, f.known_kinks
    else:
        evaluator, kinks = f, (0.0,)
    folded = tuple(float(k) % _TWO_PI for k in kinks)
    return integrate_interval(evaluator, 0.0, _TWO_PI, folded, cfg)


def boundary_sum_1d(f: Callable[[float], float], r: float) -> float:
    """The 1-d boundary functional: f(-r) + f(r)."""
    if r <= 0:
        raise ValueError("support radius r must be positive")
    return float(f(-r)) + float(f(r))
