import math

import numpy as np
import pytest

from wirelength.distribution import (WireLengthDistribution, block_population, convert_length,
                                     count_bracket, interconnect_expectation,
                                     normalization_gamma, pair_product_density,
                                     socket_pair_count, total_wire_count, wire_density)
from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.singularity import SingularityException
from wirelength.types import ChipConfiguration, LengthUnit, RentParameters


def test_socket_pair_count_small_grid():
    assert socket_pair_count(2, 16) == pytest.approx(104 / 3)


def test_socket_pair_count_vanishes_at_chip_diagonal():
    assert socket_pair_count(8, 16) == 0


@pytest.mark.parametrize("n_sockets", [16, 100, 2861.33, 1e6])
def test_socket_pair_count_continuous_at_knee(n_sockets):
    knee = math.sqrt(n_sockets)

    assert socket_pair_count(knee, n_sockets) == pytest.approx(n_sockets**1.5 / 3, rel=1e-12)


@pytest.mark.parametrize("l", [0.5, 8.01])
def test_socket_pair_count_domain(l):
    with pytest.raises(DomainException) as err:
        socket_pair_count(l, 16)

    assert err.value.parameter == "l"


def test_block_population():
    adjacent = block_population(1, ChipConfiguration(100, 0.75))
    assert (adjacent.n_a, adjacent.n_b, adjacent.n_c) == (1.0, 0.0, 1.5)

    full = block_population(1, ChipConfiguration(100, 1.0))
    assert (full.n_a, full.n_b, full.n_c) == (1.0, 0.0, 2.0)

    far = block_population(10, ChipConfiguration(100, 0.5))
    assert (far.n_a, far.n_b, far.n_c) == (1.0, 49.5, 10.0)


def test_interconnect_expectation_pinned():
    chip = ChipConfiguration(576, 0.75)
    rent = RentParameters(k=4.0, p=0.75, fanout=3.0)

    assert interconnect_expectation(4, chip, rent) == pytest.approx(0.0148946848909208,
                                                                    rel=1e-9)


def test_interconnect_expectation_linear_in_k():
    chip = ChipConfiguration(576, 0.75)
    once = interconnect_expectation(4, chip, RentParameters(k=4.0, p=0.75))
    twice = interconnect_expectation(4, chip, RentParameters(k=8.0, p=0.75))

    assert twice == pytest.approx(2 * once, rel=1e-14)


def test_interconnect_expectation_telescopes_near_one():
    chip = ChipConfiguration(576, 0.75)
    rent = RentParameters(k=4.0, p=1 - 1e-12)

    assert abs(interconnect_expectation(4, chip, rent)) < 1e-8


def test_normalization_gamma_pinned():
    chip = ChipConfiguration(2146, 1.0)
    rent = RentParameters(k=4.0, p=0.75, fanout=3.0)

    assert count_bracket(2146, 0.75) == pytest.approx(6334.60900177774, rel=1e-12)
    assert normalization_gamma(chip, rent) == pytest.approx(0.577999753735675, rel=1e-12)


@pytest.mark.parametrize("p", [0.5, 0.5 + 1e-10, 1 - 1e-10])
def test_normalization_gamma_rejects_poles(p):
    chip = ChipConfiguration(2146, 1.0)

    with pytest.raises(SingularityException) as err:
        normalization_gamma(chip, RentParameters(k=4.0, p=p))

    assert err.value.parameter == "rent_p"


def test_wire_density_pinned():
    chip = ChipConfiguration(2146, 1.0)
    rent = RentParameters(k=4.0, p=0.75, fanout=3.0)

    assert wire_density(5, chip, rent) == pytest.approx(297.553597873254, rel=1e-12)


def test_wire_density_continuous_at_knee():
    chip = ChipConfiguration(2146, 0.75)
    distribution = WireLengthDistribution(chip, RentParameters(k=4.0, p=0.667))
    knee = distribution.knee
    epsilon = 1e-6 * knee

    assert distribution.density(knee - epsilon) == pytest.approx(
        distribution.density(knee + epsilon), rel=1e-5)


def test_total_wire_count_pinned():
    chip = ChipConfiguration(2146, 1.0)
    rent = RentParameters(k=4.0, p=0.75, fanout=3.0)

    assert total_wire_count(chip, rent) == pytest.approx(5492.10366455898, rel=1e-12)
    assert WireLengthDistribution(chip, rent).total_wire_count() == total_wire_count(chip, rent)


def test_pair_product_density_is_pairs_times_expectation():
    chip = ChipConfiguration(576, 0.75)
    rent = RentParameters(k=4.0, p=0.75, fanout=3.0)
    expected = socket_pair_count(4, chip.n_sockets) * 0.0148946848909208

    assert pair_product_density(4, chip, rent) == pytest.approx(expected, rel=1e-9)
    assert pair_product_density(20, chip, rent) >= 0


def test_distribution_bounds():
    distribution = WireLengthDistribution(ChipConfiguration(400, 1.0), RentParameters(4, 0.6))

    assert distribution.knee == pytest.approx(20)
    assert distribution.max_length == pytest.approx(40)
    assert distribution.density(40) == 0


def test_convert_length():
    assert convert_length(3.2, LengthUnit.SOCKET_LENGTHS, LengthUnit.SOCKET_LENGTHS, 0.3) == 3.2
    assert convert_length(3.2, "sockets", "pitches", 1.0) == 3.2
    assert convert_length(5.624915, "sockets", "pitches", 0.75) == pytest.approx(4.871319,
                                                                                rel=1e-6)
    assert convert_length(4.871319, "pitches", "sockets", 0.75) == pytest.approx(5.624915,
                                                                                rel=1e-6)

    with pytest.raises(DomainException):
        convert_length(1.0, "sockets", "pitches", 0.0)


@pytest.mark.parametrize("l", [1.0, 7.5, 24.0, 40.0])
def test_wire_density_linear_in_k(l):
    chip = ChipConfiguration(576, 0.75)
    once = wire_density(l, chip, RentParameters(k=4.0, p=0.667))
    twice = wire_density(l, chip, RentParameters(k=8.0, p=0.667))

    assert twice == pytest.approx(2 * once, rel=1e-12)


@pytest.mark.parametrize("l", [1.0, 7.5, 24.0, 40.0])
def test_wire_density_linear_in_alpha(l):
    chip = ChipConfiguration(576, 0.75)
    # alpha is 1/2 at fan-out 1 and 3/4 at fan-out 3
    single = wire_density(l, chip, RentParameters(k=4.0, p=0.667, fanout=1.0))
    triple = wire_density(l, chip, RentParameters(k=4.0, p=0.667, fanout=3.0))

    assert triple == pytest.approx(1.5 * single, rel=1e-12)


def test_interconnect_expectation_linear_in_alpha():
    chip = ChipConfiguration(576, 0.75)
    single = interconnect_expectation(4, chip, RentParameters(k=4.0, p=0.75, fanout=1.0))
    triple = interconnect_expectation(4, chip, RentParameters(k=4.0, p=0.75, fanout=3.0))

    assert triple == pytest.approx(1.5 * single, rel=1e-14)


@pytest.mark.parametrize("n_gates, p_gates, p", [
    (55, 1.0, 0.47),
    (576, 0.75, 0.667),
    (2146, 0.5, 0.75),
    (1e5, 1.0, 0.95),
])
def test_wire_density_non_negative(n_gates, p_gates, p):
    distribution = WireLengthDistribution(ChipConfiguration(n_gates, p_gates),
                                          RentParameters(k=4.0, p=p))
    lengths = np.linspace(1, distribution.max_length, 2001)
    values = np.array([distribution.density(l) for l in lengths.tolist()])

    assert np.all(values >= 0)
    assert values[-1] == 0
