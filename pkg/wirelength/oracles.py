"""Independent checks on the closed forms.

Adaptive Simpson quadrature of the moment integrals, exhaustive socket
pair counting on a square grid, and a seeded occupancy sampler.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from wirelength.distribution import WireLengthDistribution
from wirelength.exceptions.convergence import ConvergenceException
from wirelength.exceptions.domain import DomainException
from wirelength.types import ChipConfiguration, RentParameters

logger = logging.getLogger(__name__)

# Subdivide at least this deep before trusting the error estimate.
_MIN_DEPTH = 4
_MAGNITUDE_PANELS = 64


@dataclass(frozen=True)
class QuadratureSettings:
    relative_tolerance: float = 1e-9
    max_subdivisions: int = 60

    def __post_init__(self):
        if not 0 < self.relative_tolerance <= 1e-3:
            raise DomainException(
                f"relative tolerance must lie in (0, 1e-3], got {self.relative_tolerance!r}",
                "relative_tolerance")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainException(
                f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}",
                "max_subdivisions")


def _simpson(fa, fm, fb, h):
    return h / 3.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(f: Callable[[float], float], a, b, settings=QuadratureSettings()):
    """Integrate `f` over [a, b] to the relative tolerance in `settings`.

    Raises ConvergenceException when some subinterval still misses its
    share of the tolerance at `max_subdivisions` levels.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, settings)

    fa, fb = f(a), f(b)
    m = (a + b) / 2.0
    fm = f(m)
    whole = _simpson(fa, fm, fb, (b - a) / 2.0)
    # scale the tolerance by a midpoint-rule magnitude, not the 3-point estimate
    width = (b - a) / _MAGNITUDE_PANELS
    magnitude = width * sum(abs(f(a + (i + 0.5) * width)) for i in range(_MAGNITUDE_PANELS))
    tol = settings.relative_tolerance * (magnitude or 1.0)
    deepest = [0]

    def _adaptive(a, b, fa, fm, fb, whole, tol, depth):
        m = (a + b) / 2.0
        h = (b - a) / 4.0
        lm, rm = (a + m) / 2.0, (m + b) / 2.0
        flm, frm = f(lm), f(rm)
        left = _simpson(fa, flm, fm, h)
        right = _simpson(fm, frm, fb, h)
        delta = left + right - whole
        if depth >= min(_MIN_DEPTH, settings.max_subdivisions) and abs(delta) <= 15.0 * tol:
            deepest[0] = max(deepest[0], depth)
            # Richardson extrapolation
            return left + right + delta / 15.0
        if depth >= settings.max_subdivisions:
            raise ConvergenceException(
                f"quadrature missed tolerance {tol:.3g} on [{a:.12g}, {b:.12g}] "
                f"after {depth} subdivisions", (a, b))
        return (_adaptive(a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
                _adaptive(m, b, fm, frm, fb, right, tol / 2.0, depth + 1))

    result = _adaptive(a, b, fa, fm, fb, whole, tol, 0)
    logger.debug("adaptive simpson on [%g, %g] reached depth %d", a, b, deepest[0])
    return result


def _split_integral(f, distribution, settings):
    # the knee is the only derivative discontinuity of i(l)
    return (adaptive_simpson(f, 1.0, distribution.knee, settings) +
            adaptive_simpson(f, distribution.knee, distribution.max_length, settings))


def wire_count_by_quadrature(chip: ChipConfiguration, rent: RentParameters,
                             settings=QuadratureSettings()):
    """Integral of i(l) over [1, 2 sqrt(N_soc)]."""
    distribution = WireLengthDistribution(chip, rent)
    return _split_integral(distribution.density, distribution, settings)


def lavg_by_quadrature(chip: ChipConfiguration, rent: RentParameters,
                       settings=QuadratureSettings()):
    """L_avg in socket lengths as the ratio of the first two moments of i(l)."""
    distribution = WireLengthDistribution(chip, rent)
    first = _split_integral(lambda l: l * distribution.density(l), distribution, settings)
    zeroth = _split_integral(distribution.density, distribution, settings)
    return first / zeroth


def grid_pair_histogram(side):
    """Unordered socket pairs per Manhattan distance on a side x side grid.

    Index d holds the count at distance d, for d in 0..2(side-1); index 0
    is always zero. Every displacement vector is enumerated together with
    the number of placements it has on the grid, so all side^2 (side^2-1)/2
    pairs are counted without forming them.
    """
    if int(side) != side or side < 2:
        raise DomainException(f"grid side must be an integer >= 2, got {side!r}", "side")
    side = int(side)
    offsets = np.arange(-(side - 1), side, dtype=np.int64)
    dx, dy = np.meshgrid(offsets, offsets, indexing="ij")
    placements = (side - np.abs(dx)) * (side - np.abs(dy))
    distance = np.abs(dx) + np.abs(dy)
    ordered = np.zeros(2 * side - 1, dtype=np.int64)
    np.add.at(ordered, distance.ravel(), placements.ravel())
    ordered[0] = 0
    return ordered // 2


def grid_pair_count(l, side):
    if int(side) != side or side < 2:
        raise DomainException(f"grid side must be an integer >= 2, got {side!r}", "side")
    if int(l) != l or not 1 <= l <= 2 * (side - 1):
        raise DomainException(f"distance l={l!r} outside [1, {2 * (int(side) - 1)}]", "l")
    return int(grid_pair_histogram(side)[int(l)])


@dataclass(frozen=True)
class OccupancySample:
    mean_n_b: float
    mean_n_c: float
    n_b_sockets: int
    n_c_sockets: int


def occupancy_monte_carlo(occupancy: Union[ChipConfiguration, float], l, trials, seed):
    """Empirical gate counts in blocks B and C at separation `l`.

    `occupancy` is a chip or a bare occupancy probability; a bare 0 is
    accepted here for testing. Each socket holds a gate independently
    with that probability; numpy's PCG64 generator seeded with `seed`
    makes the result reproducible.
    """
    p_gates = occupancy.p_gates if isinstance(occupancy, ChipConfiguration) else occupancy
    if not 0 <= p_gates <= 1:
        raise DomainException(f"occupancy must lie in [0, 1], got {p_gates!r}", "p_gates")
    if not l >= 1:
        raise DomainException(f"separation l={l!r} must be >= 1", "l")
    if int(trials) != trials or trials < 1:
        raise DomainException(f"trials must be a positive integer, got {trials!r}", "trials")

    n_b_sockets = math.ceil(l * l - 1)
    n_c_sockets = math.ceil(2 * l)
    rng = np.random.Generator(np.random.PCG64(seed))
    # a binomial draw is the sum of that many Bernoulli socket draws
    n_b = rng.binomial(n_b_sockets, p_gates, size=int(trials))
    n_c = rng.binomial(n_c_sockets, p_gates, size=int(trials))
    return OccupancySample(
        mean_n_b=float(n_b.mean()),
        mean_n_c=float(n_c.mean()),
        n_b_sockets=n_b_sockets,
        n_c_sockets=n_c_sockets,
    )
