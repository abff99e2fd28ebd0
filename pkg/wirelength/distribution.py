"""Stochastic wire-length distribution over a square array of gate sockets.

All lengths here are in gate socket lengths. `convert_length` is the
only place gate pitches appear.
"""
from __future__ import annotations

import logging
import math
from functools import cached_property

from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.singularity import SingularityException
from wirelength.types import BlockPopulation, ChipConfiguration, LengthUnit, RentParameters

logger = logging.getLogger(__name__)

SINGULAR_BAND = 1e-9

# Poles of the closed-form brackets: p - 0.5, p - 1 and p - 1.5.
GAMMA_POLES = (0.5, 1.0, 1.5)


def check_exponent(p, poles=GAMMA_POLES, band=SINGULAR_BAND):
    for pole in poles:
        if abs(p - pole) <= band:
            raise SingularityException(p, pole)


def _check_separation(l, n_sockets):
    upper = 2 * math.sqrt(n_sockets)
    if not 1 <= l <= upper:
        raise DomainException(
            f"separation l={l!r} outside [1, {upper:.12g}] socket lengths", "l")


def socket_pair_count(l, n_sockets):
    """Number of socket pairs at Manhattan distance `l`, M(l).

    A continuous approximation of the discrete count on a
    sqrt(n_sockets) x sqrt(n_sockets) array; see
    `wirelength.oracles.grid_pair_count` for the exact one.
    """
    _check_separation(l, n_sockets)
    side = math.sqrt(n_sockets)
    if l <= side:
        return l**3 / 3 - 2 * l**2 * side + 2 * l * n_sockets
    return (2 * side - l)**3 / 3


def block_population(l, chip: ChipConfiguration):
    if not l >= 1:
        raise DomainException(f"separation l={l!r} must be >= 1", "l")
    return BlockPopulation(
        n_a=1.0,
        n_b=chip.p_gates * (l * l - 1),
        n_c=2 * l * chip.p_gates,
        separation=l,
    )


def interconnect_expectation(l, chip: ChipConfiguration, rent: RentParameters):
    """Average interconnect count between a socket pair `l` apart, I_exp(l)."""
    blocks = block_population(l, chip)
    if blocks.n_c == 0:
        raise ZeroDivisionError("block C holds no gates")
    p = rent.p
    n_a, n_b, n_c = blocks.n_a, blocks.n_b, blocks.n_c
    a_to_c = rent.alpha * rent.k * ((n_a + n_b)**p - n_b**p + (n_b + n_c)**p -
                                    (n_a + n_b + n_c)**p)
    return chip.p_gates * a_to_c / n_c


def count_bracket(n, p):
    """Closed form of the integral of M(l) l^(2p-4) over [1, 2 sqrt(n)].

    This is the denominator of Gamma and of the exact L_avg model.
    """
    return (-n**p * (1 + 2 * p - 2**(2 * p - 1)) / (p * (p - 1) * (2 * p - 1) *
                                                    (2 * p - 3)) - 1 / (6 * p) +
            2 * math.sqrt(n) / (2 * p - 1) - n / (p - 1))


def normalization_gamma(chip: ChipConfiguration, rent: RentParameters):
    check_exponent(rent.p)
    n = chip.n_gates
    return 2 * n * (1 - n**(rent.p - 1)) / count_bracket(chip.n_sockets, rent.p)


def total_wire_count(chip: ChipConfiguration, rent: RentParameters):
    """Interconnects in the whole array; Gamma makes i(l) integrate to this."""
    n = chip.n_gates
    return rent.alpha * rent.k * n * (1 - n**(rent.p - 1))


class WireLengthDistribution:
    """i(l) for one chip and Rent characterisation, with Gamma computed once.

    Instances are immutable; share them freely between threads.
    """

    def __init__(self, chip: ChipConfiguration, rent: RentParameters):
        check_exponent(rent.p)
        self.chip = chip
        self.rent = rent

    @cached_property
    def gamma(self):
        gamma = normalization_gamma(self.chip, self.rent)
        logger.debug("gamma=%.12g at n_gates=%s p_gates=%s p=%s", gamma, self.chip.n_gates,
                     self.chip.p_gates, self.rent.p)
        return gamma

    @property
    def knee(self):
        return self.chip.side

    @property
    def max_length(self):
        return 2 * self.chip.side

    def pair_count(self, l):
        return socket_pair_count(l, self.chip.n_sockets)

    def density(self, l):
        # both branches of the piecewise form are (alpha k Gamma / 2) M(l) l^(2p-4)
        scale = self.rent.alpha * self.rent.k * self.gamma / 2
        return scale * self.pair_count(l) * l**(2 * self.rent.p - 4)

    def pair_product_density(self, l):
        return self.pair_count(l) * interconnect_expectation(l, self.chip, self.rent)

    def total_wire_count(self):
        return total_wire_count(self.chip, self.rent)


def wire_density(l, chip: ChipConfiguration, rent: RentParameters):
    return WireLengthDistribution(chip, rent).density(l)


def pair_product_density(l, chip: ChipConfiguration, rent: RentParameters):
    """M(l) * I_exp(l), the density before the power-law approximation."""
    return WireLengthDistribution(chip, rent).pair_product_density(l)


def convert_length(value, from_unit, to_unit, p_gates):
    """One socket length is sqrt(p_gates) gate pitches."""
    from_unit = LengthUnit.parse(from_unit)
    to_unit = LengthUnit.parse(to_unit)
    if not 0 < p_gates <= 1:
        raise DomainException(
            f"gate occupancy p_gates must lie in (0, 1], got {p_gates!r}", "p_gates")
    if from_unit is to_unit:
        return value
    if from_unit is LengthUnit.SOCKET_LENGTHS:
        return value * math.sqrt(p_gates)
    return value / math.sqrt(p_gates)
