"""Finitely supported measures and their Carleson/embedding constants.

For mu = sum_j w_j delta_{lam_j} the embedding H^2 -> L^2(mu) is a
finite-rank operator whose squared norm A(mu)^2 is the top eigenvalue of
the weighted kernel Gram matrix M[j, k] = sqrt(w_j w_k) K(lam_j, lam_k).
The kernel constant on the support, c_supp = max_k sum_j w_j P_{lam_k}(lam_j),
is the hypothesis constant of the embedding theorems; the theorems bound
A(mu)^2 <= 2e c_supp on the disc and A(mu)^2 <= e (2n)! / (n!)^2 c_supp
on the ball of dimension n.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InputError, UnsupportedError
from .geometry import DISC, SpacePoint, _norm_sq_rows, _poisson_field, _poisson_matrix, _szego_matrix
from .numerics import HermitianMatrix, extreme_eigs, rng_stream

MAX_ATOMS = 2000

# Grid radii stop a hair inside the ball so kernel values stay finite.
_GRID_RADIUS_CAP = 1.0 - 1e-4
_GRID_DIRECTION_SEED = 20231115


class DiscreteMeasure:
    """Finite list of (point, positive weight) atoms on a space.

    Duplicate points are merged at ingestion by summing their weights,
    which keeps the kernel Gram matrix nonsingular for separated data.
    """

    __slots__ = ("space", "atoms")

    def __init__(self, space, atoms):
        merged = {}
        for point, weight in atoms:
            if not isinstance(point, SpacePoint):
                point = SpacePoint(point)
            if point.dim != space.dim:
                raise InputError(
                    f"atom has dimension {point.dim}, space has dimension {space.dim}"
                )
            weight = float(weight)
            if not weight > 0.0:
                raise InputError(f"weights must be positive, got {weight!r}")
            merged[point] = merged.get(point, 0.0) + weight
        if not merged:
            raise InputError("a measure needs at least one atom")
        self.space = space
        self.atoms = tuple(merged.items())

    def __len__(self):
        return len(self.atoms)

    def points_array(self):
        return np.array([p.coords for p, _ in self.atoms], dtype=complex)

    def weights_array(self):
        return np.array([w for _, w in self.atoms], dtype=float)

    def scaled(self, c):
        if not c > 0.0:
            raise InputError("scale factor must be positive")
        return DiscreteMeasure(self.space, [(p, c * w) for p, w in self.atoms])


@dataclass(frozen=True)
class AnalysisReport:
    """All constants of one measure plus the theorem verdict."""

    a_sq: float
    c_supp: float
    c_grid: float
    i_box: Optional[float]
    bound: float
    ratio: float
    holds: bool
    grid_resolution: int


def carleson_potential(mu, z):
    """phi(z) = -sum_j w_j P_z(lam_j), a bounded negative subharmonic function."""
    zs = np.asarray(z.coords, dtype=complex).reshape(1, -1)
    if zs.shape[1] != mu.space.dim:
        raise InputError(f"point has dimension {zs.shape[1]}, space has {mu.space.dim}")
    p = _poisson_matrix(zs, mu.points_array(), mu.space.dim)
    return float(-(p @ mu.weights_array())[0])


def kernel_constant_on_support(mu):
    """c_supp = max over atoms lam_k of sum_j w_j P_{lam_k}(lam_j)."""
    pts = mu.points_array()
    p = _poisson_matrix(pts, pts, mu.space.dim)
    return float(np.max(p @ mu.weights_array()))


def _grid_points(space, resolution):
    """Deterministic interior grid, nested as resolution grows.

    The grid is a union of levels L = 8, 16, ... up to resolution; each
    level pairs L Chebyshev-spaced radii in [0, 1 - 1e-4] with 2L uniform
    angles (disc) or L seeded unit directions (ball).  A level depends
    only on its own L, so grids at lower resolutions are subsets of
    grids at higher ones and the scanned supremum is monotone.
    """
    if not isinstance(resolution, int) or resolution < 8:
        raise InputError(f"resolution must be an integer >= 8, got {resolution!r}")
    blocks = []
    level = 8
    while level <= resolution:
        idx = np.arange(level)
        radii = _GRID_RADIUS_CAP * 0.5 * (1.0 + np.cos(np.pi * (2 * idx + 1) / (2 * level)))
        if space.dim == 1:
            angles = 2.0 * np.pi * np.arange(2 * level) / (2 * level)
            pts = (radii[:, None] * np.exp(1j * angles)[None, :]).reshape(-1, 1)
        else:
            rng = rng_stream(_GRID_DIRECTION_SEED, level)
            raw = rng.normal(size=(level, 2 * space.dim))
            dirs = raw[:, ::2] + 1j * raw[:, 1::2]
            dirs /= np.sqrt(_norm_sq_rows(dirs))[:, None]
            pts = (radii[:, None, None] * dirs[None, :, :]).reshape(-1, space.dim)
        blocks.append(pts)
        level *= 2
    return np.concatenate(blocks, axis=0)


def kernel_constant_grid(mu, resolution):
    """Scanned supremum of sum_j w_j P_z(lam_j) over a grid union the atoms.

    A lower bound of the true supremum over the whole ball; monotone
    nondecreasing in resolution and never below the support constant.
    """
    pts = mu.points_array()
    grid = np.concatenate([_grid_points(mu.space, resolution), pts], axis=0)
    p = _poisson_matrix(grid, pts, mu.space.dim)
    return float(np.max(p @ mu.weights_array()))


def box_constant(mu, directions=64):
    """Lower-bound estimate of I(mu) = sup mu(D cap Q(xi, r)) / r, disc only.

    Q(xi, r) is the euclidean ball of radius r centered at xi on the unit
    circle.  For a fixed center the ratio jumps exactly at the radii
    |lam_j - xi| and decreases in between, so scanning those critical
    radii over a center grid (refined toward each atom's direction)
    yields the estimate.
    """
    if mu.space.kind != DISC:
        raise UnsupportedError("box geometry is defined only on the disc")
    if not isinstance(directions, int) or directions < 16:
        raise InputError(f"directions must be an integer >= 16, got {directions!r}")
    lam = mu.points_array()[:, 0]
    w = mu.weights_array()

    angles = list(2.0 * np.pi * np.arange(directions) / directions)
    base_step = 2.0 * np.pi / directions
    for z in lam:
        if abs(z) == 0.0:
            continue
        t = math.atan2(z.imag, z.real)
        angles.append(t)
        for k in range(1, 7):
            angles.extend((t + base_step * 2.0 ** -k, t - base_step * 2.0 ** -k))
    centers = np.exp(1j * np.asarray(angles))

    dist = np.abs(lam[None, :] - centers[:, None])
    best = 0.0
    for row in dist:
        for r in row:
            mass = float(np.sum(w[row <= r * (1.0 + 1e-12)]))
            best = max(best, mass / r)
    return best


def embedding_norm_sq(mu):
    """Exact best constant A(mu)^2: top eigenvalue of the weighted Gram matrix."""
    if len(mu) > MAX_ATOMS:
        raise InputError(f"measure has {len(mu)} atoms, practical guard is {MAX_ATOMS}")
    pts = mu.points_array()
    root_w = np.sqrt(mu.weights_array())
    m = root_w[:, None] * _szego_matrix(pts, pts, mu.space.dim) * root_w[None, :]
    return extreme_eigs(HermitianMatrix(m))[1]


def theorem_bound_constant(space):
    """2e on the disc; e (2n)! / (n!)^2 on the ball of dimension n."""
    if space.kind == DISC:
        return 2.0 * math.e
    n = space.dim
    return math.e * math.factorial(2 * n) / math.factorial(n) ** 2


def analyze(mu, resolution=64):
    """Compute every constant and the theorem verdict for one measure."""
    a_sq = embedding_norm_sq(mu)
    c_supp = kernel_constant_on_support(mu)
    c_grid = kernel_constant_grid(mu, resolution)
    i_box = box_constant(mu) if mu.space.kind == DISC else None
    const = theorem_bound_constant(mu.space)
    bound = const * c_supp
    return AnalysisReport(
        a_sq=a_sq,
        c_supp=c_supp,
        c_grid=c_grid,
        i_box=i_box,
        bound=bound,
        ratio=a_sq / c_supp,
        holds=bool(a_sq <= bound * (1.0 + 1e-9)),
        grid_resolution=resolution,
    )
