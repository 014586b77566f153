"""Matplotlib renderings of the CLI tables.

Each renderer takes the payload assembled by the corresponding CLI command
and writes a figure to the given path (format chosen by the extension).
Kept separate from the data path: the delimited output stays the canonical
interface, figures are a convenience for quick inspection.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["save_figure"]

_FIGSIZE = (6.0, 4.2)


def _new_axes(xlabel: str, ylabel: str):
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    return fig, ax


def _save(fig, path: str) -> None:
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def _render_profile(payload: dict, path: str) -> None:
    meta = payload["metadata"]
    fig, ax = _new_axes("t", "b(t)")
    ax.plot(payload["ts"], payload["values"], "-", color="tab:blue")
    ax.axvline(meta["r"], color="gray", linestyle=":", linewidth=0.8)
    ax.set_title(f"optimal bump, d={meta['d']}, m={meta['m']:g}, r={meta['r']:g}")
    _save(fig, path)


def _render_beta(payload: dict, path: str) -> None:
    curve = payload["curve"]
    summary = payload["summary"]
    good = np.isfinite(curve.betas)
    fig, ax = _new_axes("r", "beta(r)")
    ax.loglog(curve.rs[good], curve.betas[good], "ko-", markersize=4)
    slope = summary["slope"]
    if slope is not None and np.count_nonzero(good) >= 2:
        anchor_r = curve.rs[good][0]
        anchor_b = curve.betas[good][0]
        ax.loglog(
            curve.rs[good],
            anchor_b * (curve.rs[good] / anchor_r) ** slope,
            "k--",
            linewidth=0.8,
            label=f"slope {slope:.3f} (expected {summary['expected']:g})",
        )
        ax.legend()
    ax.set_title(f"bump norm function, d={curve.spec.d}, m={curve.spec.m:g}")
    _save(fig, path)


def _render_compare(payload: dict, path: str) -> None:
    meta = payload["metadata"]
    fig, ax = _new_axes("t", "value")
    ax.plot(payload["ts"], payload["bump"], "-", color="tab:blue", label="optimal bump")
    ax.plot(payload["ts"], payload["wendland"], "--", color="tab:cyan", label="wendland")
    ax.legend()
    ax.set_title(f"bump vs Wendland, r={meta['r']:g}")
    _save(fig, path)


def _render_translates(payload: dict, path: str) -> None:
    meta = payload["metadata"]
    fig, ax = _new_axes("y", "g(y)")
    for x, curve in zip(payload["centers"], payload["curves"]):
        ax.plot(payload["ys"], curve, label=f"x={x:g}")
    ax.legend(fontsize=8)
    ax.set_title(f"zero-trace kernel translates, r={meta['r']:g}")
    _save(fig, path)


def _render_validate(payload: dict, path: str) -> None:
    report = payload["report"]
    names = [c["name"] for c in report["checks"]]
    passed = [1.0 if c["pass"] else 0.0 for c in report["checks"]]
    fig, ax = plt.subplots(figsize=(7.0, 0.3 * len(names) + 1.0))
    colors = ["tab:green" if p else "tab:red" for p in passed]
    ax.barh(range(len(names)), passed, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xlim(0, 1.05)
    ax.set_xlabel("pass")
    ax.invert_yaxis()
    _save(fig, path)


_RENDERERS = {
    "profile": _render_profile,
    "beta": _render_beta,
    "scaling": _render_beta,
    "compare-wendland": _render_compare,
    "translates": _render_translates,
    "validate": _render_validate,
}


def save_figure(command: str, payload: dict, path: str) -> None:
    """Render the payload of a CLI command to an image file."""
    try:
        renderer = _RENDERERS[command]
    except KeyError:
        raise ValueError(f"no figure renderer for command {command!r}") from None
    renderer(payload, path)
