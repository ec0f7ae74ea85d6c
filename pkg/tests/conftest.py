"""Shared corpus builders for the test suite.

All randomness flows through seeded counter-based streams so every test
is reproducible bit for bit.  Radius caps are chosen so that stencil and
quadrature truncation stay well inside the tolerances asserted by the
tests that consume the corpus.
"""

import cmath
import math

import numpy as np

from carlembed.calculus import MultiPoly
from carlembed.geometry import Space, SpacePoint
from carlembed.measure import DiscreteMeasure
from carlembed.numerics import rng_stream


def random_point(rng, dim, rmax):
    """Uniform direction, uniform radius in [0, rmax)."""
    if dim == 1:
        return SpacePoint(cmath.rect(rmax * rng.random(), 2.0 * math.pi * rng.random()))
    raw = rng.normal(size=2 * dim)
    vec = raw[::2] + 1j * raw[1::2]
    vec /= math.sqrt(float(np.sum((vec * vec.conj()).real)))
    return SpacePoint(vec * (rmax * rng.random()))


def random_measure(rng, space, max_atoms, rmax):
    count = int(rng.integers(1, max_atoms + 1))
    atoms = [
        (random_point(rng, space.dim, rmax), math.exp(rng.normal(0.0, 0.5)))
        for _ in range(count)
    ]
    return DiscreteMeasure(space, atoms)


def random_poly(rng, dim, max_degree):
    """Dense random polynomial of total degree <= max_degree."""
    terms = {}
    if dim == 1:
        for k in range(max_degree + 1):
            terms[(k,)] = complex(rng.normal(), rng.normal())
    else:
        for a in range(max_degree + 1):
            for b in range(max_degree + 1 - a):
                terms[(a, b)] = complex(rng.normal(), rng.normal())
    return MultiPoly(dim, terms)


def disc_measure_corpus(count, max_atoms, rmax, seed, stream):
    rng = rng_stream(seed, stream)
    space = Space.disc()
    return [random_measure(rng, space, max_atoms, rmax) for _ in range(count)]


def ball_measure_corpus(count, max_atoms, rmax, seed, stream):
    rng = rng_stream(seed, stream)
    space = Space.ball(2)
    return [random_measure(rng, space, max_atoms, rmax) for _ in range(count)]


def pair_corpus(count, dim, rmax, seed, stream):
    """(z, lambda) point pairs for differential-operator oracles."""
    rng = rng_stream(seed, stream)
    return [
        (random_point(rng, dim, rmax), random_point(rng, dim, rmax))
        for _ in range(count)
    ]


def measure_poly_corpus(count, space, max_atoms, rmax, max_degree, seed, stream):
    rng = rng_stream(seed, stream)
    out = []
    for _ in range(count):
        mu = random_measure(rng, space, max_atoms, rmax)
        f = random_poly(rng, space.dim, max_degree)
        out.append((mu, f))
    return out


def sequence_corpus(count, max_points, rmax, min_delta, seed, stream):
    """Finite disc sequences with separation constant above min_delta.

    Rejection-samples until the product separation clears the floor, so
    the Gram matrices stay honestly conditioned.
    """
    from carlembed.interpolation import PointSequence, carleson_delta

    rng = rng_stream(seed, stream)
    space = Space.disc()
    out = []
    while len(out) < count:
        n = int(rng.integers(2, max_points + 1))
        pts = [random_point(rng, 1, rmax) for _ in range(n)]
        try:
            seq = PointSequence(space, pts)
        except Exception:
            continue
        if carleson_delta(seq) > min_delta:
            out.append(seq)
    return out
