"""Reproducing kernels, Poisson-Szego kernels, and Mobius automorphisms.

Points live in the open unit ball of C^n (n = 1 for the disc).  With
<z, w> the Hermitian inner product sum(z_i * conj(w_i)), the Szego
kernel is K(z, w) = 1 / (1 - <z, w>)^n, its normalization is
k_lam(z) = (1 - |lam|^2)^(n/2) * K(z, lam), and the Poisson-Szego
kernel is P_z(lam) = |k_z(lam)|^2 = (1 - |z|^2)^n / |1 - <lam, z>|^(2n).

The module also exposes private vectorized helpers used by the measure
and calculus modules; those operate on (m, n) complex coordinate arrays
instead of SpacePoint values.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InputError, KernelConditioningWarning, SingularityError

DISC = "disc"
BALL = "ball"

# Construction of a point with norm_sq above 1 - this margin emits a
# KernelConditioningWarning: kernels blow up like (1 - |z|^2)**-n.
CONDITIONING_MARGIN = 1e-8

# Guard against a vanishing kernel denominator; unreachable for genuine
# interior points, catches rounding disasters.
_DENOM_FLOOR = 1e-280


@dataclass(frozen=True)
class Space:
    """Ambient domain: the unit disc or the unit ball of C^dim."""

    kind: str
    dim: int = 1

    def __post_init__(self):
        if self.kind not in (DISC, BALL):
            raise InputError(f"kind must be {DISC!r} or {BALL!r}, got {self.kind!r}")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"dim must be a positive integer, got {self.dim!r}")
        if self.kind == DISC and self.dim != 1:
            raise InputError("the disc has complex dimension 1")

    @classmethod
    def disc(cls):
        return cls(DISC, 1)

    @classmethod
    def ball(cls, dim):
        return cls(BALL, dim)


class SpacePoint:
    """A point of the open unit ball of C^n with its cached squared norm."""

    __slots__ = ("coords", "norm_sq")

    def __init__(self, coords):
        if isinstance(coords, (int, float, complex)):
            coords = (coords,)
        cs = tuple(complex(c) for c in coords)
        if not cs:
            raise InputError("a point needs at least one coordinate")
        norm_sq = math.fsum(c.real * c.real + c.imag * c.imag for c in cs)
        if not norm_sq < 1.0:
            raise InputError(f"point must lie strictly inside the unit ball, |z|^2 = {norm_sq}")
        if norm_sq > 1.0 - CONDITIONING_MARGIN:
            warnings.warn(
                f"point has 1 - |z|^2 = {1.0 - norm_sq:.3e}; kernel values are ill conditioned",
                KernelConditioningWarning,
                stacklevel=2,
            )
        self.coords = cs
        self.norm_sq = norm_sq

    @property
    def dim(self):
        return len(self.coords)

    def as_array(self):
        return np.array(self.coords, dtype=complex)

    def __eq__(self, other):
        return isinstance(other, SpacePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"SpacePoint({list(self.coords)!r})"


def _check_same_dim(z, w):
    if z.dim != w.dim:
        raise InputError(f"dimension mismatch: {z.dim} vs {w.dim}")


def _check_space(z, s):
    if z.dim != s.dim:
        raise InputError(f"point has dimension {z.dim}, space has dimension {s.dim}")


def inner(z, w):
    """Hermitian inner product <z, w> = sum(z_i * conj(w_i))."""
    _check_same_dim(z, w)
    return complex(sum(a * b.conjugate() for a, b in zip(z.coords, w.coords)))


def _ipow(base, n):
    """Integer power by repeated multiplication (no branch ambiguity)."""
    out = base
    for _ in range(n - 1):
        out = out * base
    return out


def szego_kernel(z, w, s):
    """Unnormalized reproducing kernel K(z, w) = 1 / (1 - <z, w>)^n."""
    _check_space(z, s)
    _check_space(w, s)
    denom = 1.0 - inner(z, w)
    if abs(denom) < _DENOM_FLOOR:
        raise SingularityError(f"kernel denominator |1 - <z, w>| = {abs(denom):.3e}")
    return 1.0 / _ipow(denom, s.dim)


def normalized_kernel(lam, z, s):
    """Unit-norm kernel k_lam(z) = (1 - |lam|^2)^(n/2) / (1 - <z, lam>)^n."""
    return (1.0 - lam.norm_sq) ** (s.dim / 2.0) * szego_kernel(z, lam, s)


def poisson_kernel(z, lam, s):
    """Poisson-Szego kernel P_z(lam) = |k_z(lam)|^2, strictly positive."""
    _check_space(z, s)
    _check_space(lam, s)
    d = 1.0 - inner(lam, z)
    if abs(d) < _DENOM_FLOOR:
        raise SingularityError(f"kernel denominator |1 - <lam, z>| = {abs(d):.3e}")
    return (1.0 - z.norm_sq) ** s.dim / _ipow((d * d.conjugate()).real, s.dim)


def mobius(lam, z, s):
    """Involutive automorphism exchanging lam and 0.

    Disc: b_lam(z) = (lam - z) / (1 - conj(lam) z).  Ball: the standard
    projection form (lam - P z - s Q z) / (1 - <z, lam>) with P the
    projection onto span(lam), Q = I - P, s = sqrt(1 - |lam|^2); for
    lam = 0 this degenerates to -z.
    """
    _check_space(lam, s)
    _check_space(z, s)
    if s.dim == 1:
        l0, z0 = lam.coords[0], z.coords[0]
        return SpacePoint((l0 - z0) / (1.0 - l0.conjugate() * z0))
    if lam.norm_sq == 0.0:
        return SpacePoint(tuple(-c for c in z.coords))
    a = inner(z, lam)
    scale = a / lam.norm_sq
    proj = tuple(scale * c for c in lam.coords)
    s_lam = math.sqrt(1.0 - lam.norm_sq)
    denom = 1.0 - a
    coords = tuple(
        (l - p - s_lam * (c - p)) / denom for l, p, c in zip(lam.coords, proj, z.coords)
    )
    return SpacePoint(coords)


def pseudo_hyperbolic(a, b, s):
    """Pseudo-hyperbolic distance |b_a(b)|, a value in [0, 1)."""
    image = mobius(a, b, s)
    return math.sqrt(image.norm_sq)


# ---------------------------------------------------------------------------
# Vectorized internals over (m, n) complex coordinate arrays.


def _norm_sq_rows(zs):
    return np.einsum("ij,ij->i", zs, zs.conj()).real


def _ipow_array(base, n):
    out = base.copy()
    for _ in range(n - 1):
        out *= base
    return out


def _poisson_field(zs, lam, n):
    """P_z(lam) for every row z of zs, one fixed lam (length-n array)."""
    d = 1.0 - zs @ lam.conj()
    return (1.0 - _norm_sq_rows(zs)) ** n / _ipow_array((d * d.conj()).real, n)


def _poisson_matrix(zs, lams, n):
    """Matrix P[i, j] = P_{zs[i]}(lams[j]) of shape (m, N)."""
    d = 1.0 - zs @ lams.conj().T
    num = (1.0 - _norm_sq_rows(zs)) ** n
    return num[:, None] / _ipow_array((d * d.conj()).real, n)


def _szego_matrix(zs, ws, n):
    """Matrix K[i, j] = K(zs[i], ws[j]) of shape (m, N)."""
    d = 1.0 - zs @ ws.conj().T
    return 1.0 / _ipow_array(d, n)
