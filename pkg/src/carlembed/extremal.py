"""Derivative-free search for measures with a large embedding-to-Carleson ratio.

The objective A(mu)^2 / c_supp(mu) is bounded by the theorem constants
(2e on the disc), and the search probes how close finite measures get.
Atoms are parameterized without constraints: a raw vector y in R^(2n)
maps to the point tanh(|y|) y/|y| and a raw scalar v maps to the weight
exp(v); the ratio is invariant under a common weight scale, so v is
recentered every step.  Restarts draw from independent seeded streams
and can run on threads; the merge picks the best ratio, ties broken by
the lower restart index, so results are bit-identical for a fixed
configuration regardless of thread count.
"""

import concurrent.futures
import os
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import CarlembedError, InputError, NumericError
from .measure import (
    DiscreteMeasure,
    embedding_norm_sq,
    kernel_constant_on_support,
    theorem_bound_constant,
)
from .numerics import rng_stream

THREAD_ENV_VAR = "CARLEMBED_THREADS"

# Consecutive rejected proposals before the step contracts.
_STALL_WINDOW = 20


@dataclass(frozen=True)
class SearchConfig:
    space: object
    atom_count: int = 2
    iterations: int = 2000
    restarts: int = 4
    seed: int = 0
    step_init: float = 0.5
    step_decay: float = 0.9

    def __post_init__(self):
        if not isinstance(self.atom_count, int) or self.atom_count < 1:
            raise InputError(f"atom_count must be a positive integer, got {self.atom_count!r}")
        if self.iterations < 1 or self.restarts < 1:
            raise InputError("iterations and restarts must be >= 1")
        if self.seed < 0:
            raise InputError("seed must be a non-negative integer")
        if not self.step_init > 0:
            raise InputError("step_init must be positive")
        if not 0.0 < self.step_decay < 1.0:
            raise InputError("step_decay must lie in (0, 1)")


@dataclass(frozen=True)
class SearchResult:
    best_ratio: float
    best_measure: DiscreteMeasure
    trace: tuple
    seed: int
    notes: tuple = ()


def ratio(mu):
    """A(mu)^2 / c_supp(mu); equals 1 for a single atom, scale-invariant."""
    return embedding_norm_sq(mu) / kernel_constant_on_support(mu)


def _build_measure(space, y, v):
    v = v - np.mean(v)
    radii_raw = np.sqrt(np.sum(y * y, axis=1))
    scale = np.where(radii_raw > 1e-12, np.tanh(radii_raw) / np.maximum(radii_raw, 1e-12), 1.0)
    scaled = y * scale[:, None]
    atoms = []
    for row, vj in zip(scaled, v):
        coords = row[::2] + 1j * row[1::2]
        atoms.append((coords, float(np.exp(vj))))
    return DiscreteMeasure(space, atoms)


def _climb(cfg, restart, bound):
    rng = rng_stream(cfg.seed, restart)
    dim2 = 2 * cfg.space.dim
    y = rng.normal(0.0, 0.7, size=(cfg.atom_count, dim2))
    v = rng.normal(0.0, 0.3, size=cfg.atom_count)
    mu = _build_measure(cfg.space, y, v)
    best = ratio(mu)
    best_mu = mu
    trace = [(0, best)]
    step = cfg.step_init
    stall = 0
    for it in range(1, cfg.iterations + 1):
        dy = rng.normal(0.0, 1.0, size=y.shape)
        dv = rng.normal(0.0, 1.0, size=v.shape)
        cand_y = y + step * dy
        cand_v = v + 0.5 * step * dv
        cand_mu = _build_measure(cfg.space, cand_y, cand_v)
        value = ratio(cand_mu)
        if value > bound * (1.0 + 1e-9):
            warnings.warn(
                f"search found ratio {value!r} above the theorem bound {bound!r}; "
                "this falsifies the implementation or the theorem",
                RuntimeWarning,
                stacklevel=2,
            )
        if value > best:
            y, v = cand_y, cand_v
            best, best_mu = value, cand_mu
            trace.append((it, best))
            stall = 0
        else:
            stall += 1
            if stall >= _STALL_WINDOW:
                step *= cfg.step_decay
                stall = 0
    return best, best_mu, tuple(trace)


def _thread_count():
    raw = os.environ.get(THREAD_ENV_VAR)
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{THREAD_ENV_VAR} must be an integer >= 1, got {raw!r}") from exc
    if value < 1:
        raise InputError(f"{THREAD_ENV_VAR} must be an integer >= 1, got {raw!r}")
    return value


def search(cfg):
    """Random-restart hill climbing; deterministic for a fixed config.

    Every restart owns the generator stream (seed, restart index).  A
    restart that dies with a numeric error is recorded as a failed entry
    and does not disturb the others.
    """
    bound = theorem_bound_constant(cfg.space)
    outcomes = [None] * cfg.restarts

    def run(r):
        try:
            return _climb(cfg, r, bound)
        except CarlembedError as exc:
            return None, None, (f"restart {r} aborted: {exc}",)

    workers = min(_thread_count(), cfg.restarts)
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            for r, outcome in enumerate(pool.map(run, range(cfg.restarts))):
                outcomes[r] = outcome
    else:
        for r in range(cfg.restarts):
            outcomes[r] = run(r)

    winner = None
    notes = []
    for r, (value, _, tail) in enumerate(outcomes):
        if value is None:
            notes.extend(tail)
            continue
        if winner is None or value > outcomes[winner][0]:
            winner = r
    if winner is None:
        raise NumericError("all restarts failed: " + "; ".join(notes))
    best, best_mu, trace = outcomes[winner]
    return SearchResult(
        best_ratio=best,
        best_measure=best_mu,
        trace=trace,
        seed=cfg.seed,
        notes=tuple(notes),
    )
