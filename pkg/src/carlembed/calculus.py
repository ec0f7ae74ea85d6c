"""Differential and integral machinery behind the embedding proofs.

Contents: flat and invariant Laplacians (closed forms and finite
differences), Green weights and Green's-formula verification in both
metrics, the induced measure density e^phi * Lap(phi) * G, the
contraction and pointwise key inequalities, Hardy norms of polynomial
test functions, and the beta-integral constant (n!)^2 / (2n)!.

Function arguments named ``u`` or ``f`` follow two conventions.  The
pointwise stencil ops (laplacian_fd, invariant_laplacian_fd) take a
scalar callable of one SpacePoint.  The quadrature-driven checks take a
vectorized callable mapping an (m, n) complex array to an (m,) real
array, matching the numerics module.
"""

import math

import numpy as np

from .errors import InputError, NumericError
from .geometry import (
    BALL,
    DISC,
    SpacePoint,
    _ipow_array,
    _norm_sq_rows,
    _poisson_matrix,
    inner,
    poisson_kernel,
)
from .measure import kernel_constant_on_support
from .numerics import (
    QuadratureSpec,
    ball_rule,
    boundary_quadrature,
    default_quadrature,
    disc_rule,
)

__all__ = [
    "MultiPoly",
    "QuadratureSpec",
    "default_quadrature",
    "hardy_norm_sq",
    "laplacian_fd",
    "laplacian_poisson_disc",
    "potential_laplacian_closed",
    "invariant_laplacian_fd",
    "invariant_laplacian_poisson_ball",
    "poisson_gradient_ball",
    "green_weight_disc",
    "green_function_ball",
    "greens_formula_check",
    "uchiyama_density",
    "uchiyama_embedding_check",
    "corollary_check",
    "key_inequality_check",
    "beta_constant",
]

# Default central-difference step; near the boundary the step shrinks to
# a quarter of the remaining distance so stencils stay inside the ball.
FD_STEP = 1e-3


class MultiPoly:
    """Analytic polynomial in n complex variables: multi-index -> coefficient."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms):
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"dim must be a positive integer, got {dim!r}")
        items = terms.items() if hasattr(terms, "items") else terms
        cleaned = {}
        for alpha, coeff in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dim or any(a < 0 for a in alpha):
                raise InputError(f"multi-index {alpha!r} invalid for dimension {dim}")
            coeff = complex(coeff)
            if coeff != 0:
                cleaned[alpha] = cleaned.get(alpha, 0.0) + coeff
        self.dim = dim
        self.terms = {a: c for a, c in cleaned.items() if c != 0}

    def __call__(self, z):
        if z.dim != self.dim:
            raise InputError(f"point has dimension {z.dim}, polynomial has {self.dim}")
        total = 0j
        for alpha, coeff in self.terms.items():
            term = coeff
            for c, a in zip(z.coords, alpha):
                if a:
                    term *= c ** a
            total += term
        return total

    def eval_array(self, zs):
        out = np.zeros(zs.shape[0], dtype=complex)
        for alpha, coeff in self.terms.items():
            term = np.full(zs.shape[0], coeff)
            for i, a in enumerate(alpha):
                if a:
                    term *= zs[:, i] ** a
            out += term
        return out


def hardy_norm_sq(f, space):
    """Squared Hardy norm of an analytic polynomial.

    Disc: sum of squared coefficient moduli.  Ball with sigma(S) = 1:
    ||z^alpha||^2 = (n-1)! alpha! / (n-1+|alpha|)!, the standard monomial
    orthogonality on the sphere.
    """
    if f.dim != space.dim:
        raise InputError(f"polynomial has dimension {f.dim}, space has {space.dim}")
    if space.dim == 1:
        return float(sum((c * c.conjugate()).real for c in f.terms.values()))
    n = space.dim
    total = 0.0
    for alpha, coeff in f.terms.items():
        monomial = math.factorial(n - 1)
        for a in alpha:
            monomial *= math.factorial(a)
        monomial /= math.factorial(n - 1 + sum(alpha))
        total += (coeff * coeff.conjugate()).real * monomial
    return float(total)


# ---------------------------------------------------------------------------
# Finite-difference stencils.


def _shift(zs, col, step):
    out = zs.copy()
    out[:, col] = out[:, col] + step
    return out


def _flat_laplacian_field(u, zs, h):
    """5-point Laplacian of u at the rows of zs; h scalar or per-row array."""
    acc = -4.0 * np.asarray(u(zs), dtype=float)
    for step in (h, -h, 1j * h, -1j * h):
        acc = acc + np.asarray(u(_shift(zs, 0, step)), dtype=float)
    return acc / (h * h)


def _invariant_laplacian_field(u, zs, h):
    """Invariant Laplacian 4 sum g^{ij} dbar_i d_j u via central differences.

    g^{ij}(z) = ((1 - |z|^2)/(n + 1)) (delta_ij - conj(z_i) z_j) are the
    inverse Bergman metric components.  Diagonal terms need 4 points per
    coordinate, off-diagonal pairs need the 16 corners of the four mixed
    second partials; u real makes the (j, i) term the conjugate of (i, j).
    """
    n = zs.shape[1]
    c = (1.0 - _norm_sq_rows(zs)) / (n + 1)
    h = np.asarray(h, dtype=float)
    h2 = h * h
    u0 = np.asarray(u(zs), dtype=float)

    total = np.zeros(zs.shape[0])
    for i in range(n):
        stencil = -4.0 * u0
        for step in (h, -h, 1j * h, -1j * h):
            stencil = stencil + np.asarray(u(_shift(zs, i, step)), dtype=float)
        dbar_ii = stencil / (4.0 * h2)
        g_ii = c * (1.0 - (zs[:, i] * zs[:, i].conj()).real)
        total += g_ii * dbar_ii

    for i in range(n):
        for j in range(i + 1, n):
            partials = []
            for si, sj in ((1.0, 1.0), (1j, 1j), (1j, 1.0), (1.0, 1j)):
                cross = (
                    np.asarray(u(_shift(_shift(zs, i, si * h), j, sj * h)), dtype=float)
                    - np.asarray(u(_shift(_shift(zs, i, si * h), j, -sj * h)), dtype=float)
                    - np.asarray(u(_shift(_shift(zs, i, -si * h), j, sj * h)), dtype=float)
                    + np.asarray(u(_shift(_shift(zs, i, -si * h), j, -sj * h)), dtype=float)
                ) / (4.0 * h2)
                partials.append(cross)
            u_xx, u_yy, u_yx, u_xy = partials
            dbar_ij = 0.25 * (u_xx + u_yy + 1j * (u_yx - u_xy))
            g_ij = c * (-(zs[:, i].conj() * zs[:, j]))
            total += 2.0 * (g_ij * dbar_ij).real

    return 4.0 * total


def _as_field(u):
    """Wrap a scalar SpacePoint callable as a vectorized field."""

    def field(zs):
        return np.array([float(u(SpacePoint(row))) for row in zs], dtype=float)

    return field


def _stencil_margin(z, h):
    if not h > 0:
        raise InputError(f"step h must be positive, got {h!r}")
    if 1.0 - math.sqrt(z.norm_sq) <= 2.0 * h:
        raise InputError(
            f"stencil escapes the ball: 1 - |z| = {1.0 - math.sqrt(z.norm_sq):.3e} <= 2h"
        )


def laplacian_fd(u, z, h=FD_STEP):
    """Flat Laplacian of a scalar function by the 5-point central stencil.

    Second-order accurate for C^4 functions; exact on quadratics.
    """
    if z.dim != 1:
        raise InputError("the flat 5-point stencil is defined on the disc")
    _stencil_margin(z, h)
    zs = np.array([[z.coords[0]]], dtype=complex)
    return float(_flat_laplacian_field(_as_field(u), zs, h)[0])


def invariant_laplacian_fd(u, z, space, h=FD_STEP):
    """Invariant (Bergman) Laplacian of a scalar function by central stencils."""
    if z.dim != space.dim:
        raise InputError(f"point has dimension {z.dim}, space has {space.dim}")
    _stencil_margin(z, h)
    zs = z.as_array().reshape(1, -1)
    return float(_invariant_laplacian_field(_as_field(u), zs, h)[0])


# ---------------------------------------------------------------------------
# Closed-form derivatives of the Poisson-Szego kernel.


def laplacian_poisson_disc(z, lam):
    """Delta_z P_z(lam) = 4 (|lam|^2 - 1) / |1 - conj(lam) z|^4, always <= 0."""
    if z.dim != 1 or lam.dim != 1:
        raise InputError("disc formula needs one-dimensional points")
    d = 1.0 - lam.coords[0].conjugate() * z.coords[0]
    d2 = (d * d.conjugate()).real
    return 4.0 * (lam.norm_sq - 1.0) / (d2 * d2)


def invariant_laplacian_poisson_ball(z, lam, space):
    """Closed form of Lemma-type identity for the ball kernel.

    Lap~_z P_z(lam) = -(4 n^2 / (n + 1)) (1 - |z|^2) P_z(lam) P_lam(z)^(1/n),
    and P_lam(z)^(1/n) = (1 - |lam|^2) / |1 - <z, lam>|^2 without any
    fractional power.
    """
    if space.kind != BALL:
        raise InputError("invariant Laplacian formula needs a ball space")
    n = space.dim
    d = 1.0 - inner(z, lam)
    root = (1.0 - lam.norm_sq) / (d * d.conjugate()).real
    return -(4.0 * n * n / (n + 1.0)) * (1.0 - z.norm_sq) * poisson_kernel(z, lam, space) * root


def poisson_gradient_ball(z, lam, j, space):
    """Holomorphic partial d_j P_z(lam) in the z variable, 1-based index j.

    d_j P = n [conj(lam_j)/(1 - <z, lam>) - conj(z_j)/(1 - |z|^2)] P_z(lam);
    the conjugate partial is the complex conjugate since P is real.
    """
    n = space.dim
    if not 1 <= j <= n:
        raise InputError(f"coordinate index {j} out of range 1..{n}")
    d = 1.0 - inner(z, lam)
    bracket = lam.coords[j - 1].conjugate() / d - z.coords[j - 1].conjugate() / (1.0 - z.norm_sq)
    return n * bracket * poisson_kernel(z, lam, space)


def _potential_field(mu, zs):
    return -(_poisson_matrix(zs, mu.points_array(), mu.space.dim) @ mu.weights_array())


def _potential_laplacian_field(mu, zs):
    n = mu.space.dim
    lams = mu.points_array()
    w = mu.weights_array()
    a_lam = 1.0 - _norm_sq_rows(lams)
    d = 1.0 - zs @ lams.conj().T
    d2 = (d * d.conj()).real
    if mu.space.kind == DISC:
        return 4.0 * (1.0 / (d2 * d2)) @ (w * a_lam)
    a_z = 1.0 - _norm_sq_rows(zs)
    core = (1.0 / _ipow_array(d2, n + 1)) @ (w * a_lam)
    return (4.0 * n * n / (n + 1.0)) * a_z ** (n + 1) * core


def potential_laplacian_closed(mu, z):
    """Laplacian of the Carleson potential, exactly, summed over atoms.

    Disc: Delta phi(z) = 4 sum_j w_j (1 - |lam_j|^2) / |1 - conj(lam_j) z|^4.
    Ball: Lap~ phi(z) = (4 n^2/(n+1)) (1-|z|^2) sum_j w_j P_z(lam_j) P_{lam_j}(z)^(1/n).
    Both are nonnegative: the potential is (invariant) subharmonic.
    """
    zs = np.asarray(z.coords, dtype=complex).reshape(1, -1)
    if zs.shape[1] != mu.space.dim:
        raise InputError(f"point has dimension {zs.shape[1]}, space has {mu.space.dim}")
    return float(_potential_laplacian_field(mu, zs)[0])


# ---------------------------------------------------------------------------
# Green weights and Green's formulas.


def green_weight_disc(z):
    """Disc Green weight log(1/|z|); positive, +inf sentinel at the origin."""
    if z.dim != 1:
        raise InputError("disc weight needs a one-dimensional point")
    if z.norm_sq == 0.0:
        return math.inf
    return -0.5 * math.log(z.norm_sq)


def _green_ball_field(r, n):
    """Invariant Green's function with pole at 0 as a function of r = |z|.

    G = ((n+1)/(2n)) * int_r^1 (1 - t^2)^(n-1) t^(1-2n) dt; the binomial
    expansion integrates termwise, the k = n-1 term giving log(1/r).
    """
    out = 0.0
    for k in range(n):
        c = math.comb(n - 1, k) * (-1) ** k
        e = 2 * k + 2 - 2 * n
        if e == 0:
            out = out - c * np.log(r)
        else:
            out = out + c * (1.0 - r ** e) / e
    return (n + 1.0) / (2.0 * n) * out


def green_function_ball(lam, space):
    """G(lam) for the invariant Laplacian, pole at 0; log(1/|lam|) when n = 1.

    Satisfies ((n+1)/(4 n^2)) (1 - |lam|^2)^n <= G(lam) and decreases in
    |lam|; +inf sentinel at the origin.
    """
    if space.kind != BALL:
        raise InputError("invariant Green's function needs a ball space")
    if lam.dim != space.dim:
        raise InputError(f"point has dimension {lam.dim}, space has {space.dim}")
    if lam.norm_sq == 0.0:
        return math.inf
    return float(_green_ball_field(math.sqrt(lam.norm_sq), space.dim))


def _domain_rule(space, q):
    if space.kind == DISC:
        return disc_rule(q)
    return ball_rule(q, space.dim)


def _check_finite(name, value):
    if not math.isfinite(value):
        raise NumericError(f"{name} is not finite: {value!r}")
    return value


def greens_formula_check(u, space, q=None, laplacian=None):
    """Both sides of the Green's formula for a C^2 function u.

    Disc: (1/2pi) int Delta(u) log(1/|z|) dA = int_T u dm - u(0).
    Ball: (n!/pi^n) int Lap~(u) G dg = int_S u dsigma - u(0), with
    dg = dV / (1 - |z|^2)^(n+1).

    u must be vectorized ((m, n) complex -> (m,) real).  The Laplacian
    comes from ``laplacian`` (same vectorized signature) when supplied,
    else from central differences with a per-node step capped at a
    quarter of the boundary distance.  Returns (lhs, rhs, gap).
    """
    if q is None:
        q = default_quadrature(space)
    points, weights = _domain_rule(space, q)
    nrm2 = _norm_sq_rows(points)
    r = np.sqrt(nrm2)
    if laplacian is not None:
        lap = np.asarray(laplacian(points), dtype=float)
    else:
        h_eff = np.minimum(FD_STEP, 0.25 * (1.0 - r))
        if space.kind == DISC:
            lap = _flat_laplacian_field(u, points, h_eff)
        else:
            lap = _invariant_laplacian_field(u, points, h_eff)
    if space.kind == DISC:
        lhs = float(np.sum(weights * lap * (-np.log(r)))) / (2.0 * np.pi)
    else:
        n = space.dim
        density = _green_ball_field(r, n) / (1.0 - nrm2) ** (n + 1)
        lhs = math.factorial(n) / np.pi ** n * float(np.sum(weights * lap * density))
    origin = np.zeros((1, space.dim), dtype=complex)
    rhs = boundary_quadrature(u, q, space) - float(np.asarray(u(origin), dtype=float)[0])
    _check_finite("Green's formula lhs", lhs)
    _check_finite("Green's formula rhs", rhs)
    return lhs, rhs, abs(lhs - rhs)


# ---------------------------------------------------------------------------
# The induced measure density and the proof inequalities.


def _uchiyama_density_field(mu, zs):
    n = mu.space.dim
    phi = _potential_field(mu, zs)
    if mu.space.kind == DISC:
        r = np.abs(zs[:, 0])
        lap = _potential_laplacian_field(mu, zs)
        return np.exp(phi) * lap * (-np.log(r)) / (2.0 * np.pi)
    # Ball branch with the (1 - |z|^2)^(n+1) cancellation between
    # Lap~(phi) and dg/dV folded in analytically, so nothing blows up
    # at the boundary:
    #   e^phi Lap~(phi) G / (1-|z|^2)^(n+1)
    #     = (4 n^2/(n+1)) e^phi G sum_j w_j (1-|lam_j|^2) / |1-<z,lam_j>|^(2n+2).
    lams = mu.points_array()
    w = mu.weights_array()
    a_lam = 1.0 - _norm_sq_rows(lams)
    d = 1.0 - zs @ lams.conj().T
    core = (1.0 / _ipow_array((d * d.conj()).real, n + 1)) @ (w * a_lam)
    r = np.sqrt(_norm_sq_rows(zs))
    scale = math.factorial(n) / np.pi ** n * (4.0 * n * n / (n + 1.0))
    return scale * np.exp(phi) * _green_ball_field(r, n) * core


def uchiyama_density(mu, z):
    """Density of d(nu) = e^phi Lap(phi) Green-weight against dA or dV.

    Disc: (1/2pi) e^phi Delta(phi) log(1/|z|); ball: (n!/pi^n) e^phi
    Lap~(phi) G / (1 - |z|^2)^(n+1).  Nonnegative; +inf sentinel at 0.
    """
    if z.dim != mu.space.dim:
        raise InputError(f"point has dimension {z.dim}, space has {mu.space.dim}")
    if z.norm_sq == 0.0:
        return math.inf
    zs = z.as_array().reshape(1, -1)
    return float(_uchiyama_density_field(mu, zs)[0])


def uchiyama_embedding_check(mu, f, q=None):
    """Contraction check: returns (integral of |f|^2 d(nu), ||f||^2).

    The lemma guarantees integral <= norm for every discrete measure;
    callers assert with their quadrature slack.
    """
    if f.dim != mu.space.dim:
        raise InputError(f"polynomial has dimension {f.dim}, space has {mu.space.dim}")
    if q is None:
        q = default_quadrature(mu.space)
    points, weights = _domain_rule(mu.space, q)
    values = np.abs(f.eval_array(points)) ** 2 * _uchiyama_density_field(mu, points)
    integral = _check_finite("Uchiyama integral", float(np.sum(weights * values)))
    return integral, hardy_norm_sq(f, mu.space)


def corollary_check(mu, f, q=None):
    """Bounded-potential corollary: returns (integral, e * ||phi||_inf * ||f||^2).

    The integral drops the e^phi factor from the density.  ||phi||_inf is
    estimated as the max of -phi over the quadrature nodes and the atoms,
    a lower bound of the true supremum.
    """
    if f.dim != mu.space.dim:
        raise InputError(f"polynomial has dimension {f.dim}, space has {mu.space.dim}")
    if q is None:
        q = default_quadrature(mu.space)
    points, weights = _domain_rule(mu.space, q)
    n = mu.space.dim
    if mu.space.kind == DISC:
        r = np.abs(points[:, 0])
        density = _potential_laplacian_field(mu, points) * (-np.log(r)) / (2.0 * np.pi)
    else:
        lams = mu.points_array()
        w = mu.weights_array()
        a_lam = 1.0 - _norm_sq_rows(lams)
        d = 1.0 - points @ lams.conj().T
        core = (1.0 / _ipow_array((d * d.conj()).real, n + 1)) @ (w * a_lam)
        r = np.sqrt(_norm_sq_rows(points))
        scale = math.factorial(n) / np.pi ** n * (4.0 * n * n / (n + 1.0))
        density = scale * _green_ball_field(r, n) * core
    values = np.abs(f.eval_array(points)) ** 2 * density
    integral = _check_finite("corollary integral", float(np.sum(weights * values)))
    phi_sup = max(
        kernel_constant_on_support(mu), float(np.max(-_potential_field(mu, points)))
    )
    return integral, math.e * phi_sup * hardy_norm_sq(f, mu.space)


def key_inequality_check(mu, f, lambda_idx, q=None):
    """Pointwise key inequality at an atom; returns (lhs, rhs), lhs >= rhs.

    Disc: (1/pi) int |f|^2 e^phi (1-|lam|^2)(1-|z|^2)/|1-conj(lam) z|^4 dA
    >= (1/2) e^(phi(lam)) |f(lam)|^2.  Ball: prefactor n!/pi^n, kernel
    (1-|lam|^2)(1-|z|^2)^n / |1-<z,lam>|^(2n+2), constant (n!)^2/(2n)!.
    """
    if f.dim != mu.space.dim:
        raise InputError(f"polynomial has dimension {f.dim}, space has {mu.space.dim}")
    if not 0 <= lambda_idx < len(mu):
        raise InputError(f"atom index {lambda_idx} out of range 0..{len(mu) - 1}")
    if q is None:
        q = default_quadrature(mu.space)
    lam, _ = mu.atoms[lambda_idx]
    n = mu.space.dim
    points, weights = _domain_rule(mu.space, q)
    phi = _potential_field(mu, points)
    lam_arr = lam.as_array()
    d = 1.0 - points @ lam_arr.conj()
    d2 = (d * d.conj()).real
    a_z = 1.0 - _norm_sq_rows(points)
    kernel = (1.0 - lam.norm_sq) * a_z ** n / _ipow_array(d2, n + 1)
    if mu.space.kind == DISC:
        prefactor, constant = 1.0 / math.pi, 0.5
    else:
        prefactor = math.factorial(n) / math.pi ** n
        constant = beta_constant(n)
    values = np.abs(f.eval_array(points)) ** 2 * np.exp(phi) * kernel
    lhs = _check_finite("key inequality lhs", prefactor * float(np.sum(weights * values)))
    phi_lam = -float(
        (_poisson_matrix(lam_arr.reshape(1, -1), mu.points_array(), n) @ mu.weights_array())[0]
    )
    f_lam = f(lam)
    rhs = constant * math.exp(phi_lam) * (f_lam * f_lam.conjugate()).real
    return lhs, rhs


def beta_constant(n):
    """(n!)^2 / (2n)! = 2n * int_0^1 (1 - r^2)^n r^(2n-1) dr."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    return math.factorial(n) ** 2 / math.factorial(2 * n)
