"""Deterministic grid search with shrinking refinement windows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np


@dataclass(frozen=True)
class GridOptimum:
    x: np.ndarray
    value: float
    cell: np.ndarray  # grid spacing of the final round, per axis
    evaluations: int


def _axis(lo: float, hi: float, steps: int, periodic: bool) -> np.ndarray:
    return np.linspace(lo, hi, steps, endpoint=not periodic)


def grid_refine(
    objective: Callable[[Sequence[np.ndarray]], np.ndarray],
    lower: Sequence[float],
    upper: Sequence[float],
    steps: Sequence[int],
    rounds: int,
    shrink: float,
    periodic: Sequence[bool],
    maximize: bool = False,
    refine_steps: Sequence[int] | None = None,
) -> GridOptimum:
    """Optimize ``objective`` over a box by a coarse grid plus local refinement.

    ``objective`` receives one 1-D array per axis and must return the values
    on their outer-product grid (``indexing="ij"``). Among equal values the
    lowest flat index wins, so results do not depend on evaluation order.

    Each refinement round re-grids a window centred on the incumbent, with
    the incumbent's own coordinates added to every axis. The
    window half-width is ``shrink`` times the previous one, but never less
    than one cell of the previous grid. Periodic axes are not clipped and
    their optimum is wrapped back into ``[lower, upper)``. ``refine_steps``
    sets the per-axis grid size of the refinement rounds (default ``steps``).
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    periodic = list(periodic)
    sign = -1.0 if maximize else 1.0

    axes = [_axis(lo, hi, n, p) for lo, hi, n, p in zip(lower, upper, steps, periodic)]
    values = sign * np.asarray(objective(axes), dtype=float)
    flat = int(np.argmin(values))
    idx = np.unravel_index(flat, values.shape)
    best_x = np.array([ax[i] for ax, i in zip(axes, idx)])
    best_v = float(values[idx])
    evaluations = values.size
    cell = np.array([ax[1] - ax[0] for ax in axes])
    half = (upper - lower) / 2.0
    refine_steps = steps if refine_steps is None else refine_steps

    for _ in range(rounds):
        half = np.maximum(half * shrink, cell)
        axes = []
        for k, n in enumerate(refine_steps):
            lo, hi = best_x[k] - half[k], best_x[k] + half[k]
            if not periodic[k]:
                lo, hi = max(lo, lower[k]), min(hi, upper[k])
            # keep the incumbent on the grid so a round never loses ground
            axes.append(np.unique(np.append(np.linspace(lo, hi, n), best_x[k])))
        values = sign * np.asarray(objective(axes), dtype=float)
        evaluations += values.size
        cell = np.array([(ax[-1] - ax[0]) / (n - 1) for ax, n in zip(axes, refine_steps)])
        idx = np.unravel_index(int(np.argmin(values)), values.shape)
        if values[idx] < best_v:
            best_v = float(values[idx])
            best_x = np.array([ax[i] for ax, i in zip(axes, idx)])

    for k, p in enumerate(periodic):
        if p:
            best_x[k] = lower[k] + np.mod(best_x[k] - lower[k], upper[k] - lower[k])
    return GridOptimum(best_x, sign * best_v, cell, evaluations)
