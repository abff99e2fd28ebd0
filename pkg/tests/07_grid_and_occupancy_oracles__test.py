import math

import pytest

from wirelength.exceptions.domain import DomainException
from wirelength.oracles import grid_pair_count, grid_pair_histogram, occupancy_monte_carlo
from wirelength.types import ChipConfiguration
from wirelength.verification import grid_deviation


def test_grid_pair_count_small_grids():
    assert grid_pair_count(1, 2) == 4
    assert grid_pair_count(2, 2) == 2
    assert grid_pair_count(2, 4) == 34


@pytest.mark.parametrize("side", [2, 3, 5, 10])
def test_grid_pair_count_opposite_corners(side):
    assert grid_pair_count(2 * (side - 1), side) == 2


@pytest.mark.parametrize("side", [2, 4, 10, 50])
def test_grid_histogram_counts_every_pair(side):
    histogram = grid_pair_histogram(side)

    assert len(histogram) == 2 * side - 1
    assert histogram[0] == 0
    assert int(histogram.sum()) == side * side * (side * side - 1) // 2


def test_grid_histogram_matches_brute_force():
    side = 5
    sockets = [(x, y) for x in range(side) for y in range(side)]
    expected = [0] * (2 * side - 1)
    for i, (x1, y1) in enumerate(sockets):
        for x2, y2 in sockets[i + 1:]:
            expected[abs(x1 - x2) + abs(y1 - y2)] += 1

    assert grid_pair_histogram(side).tolist() == expected


def test_continuous_pair_count_converges_to_grid():
    deviations = [grid_deviation(side) for side in (2, 4, 10, 50, 100)]

    assert deviations == pytest.approx([0.333, 0.0667, 0.0101, 4.0e-4, 1.0e-4], rel=2e-2)
    assert all(later <= earlier for earlier, later in zip(deviations, deviations[1:]))


@pytest.mark.parametrize("l, side", [(0, 4), (7, 4), (1.5, 4), (1, 1), (1, 2.5)])
def test_grid_pair_count_domain(l, side):
    with pytest.raises(DomainException):
        grid_pair_count(l, side)


def test_full_occupancy_is_deterministic():
    sample = occupancy_monte_carlo(ChipConfiguration(100, 1.0), 10, 1000, seed=7)

    assert (sample.n_b_sockets, sample.n_c_sockets) == (99, 20)
    assert sample.mean_n_b == 99.0
    assert sample.mean_n_c == 20.0


def test_empty_occupancy():
    sample = occupancy_monte_carlo(0.0, 10, 1000, seed=7)

    assert sample.mean_n_b == 0.0
    assert sample.mean_n_c == 0.0


def test_occupancy_means_match_expectation():
    trials = 1_000_000
    sample = occupancy_monte_carlo(0.75, 10, trials, seed=2146)

    assert abs(sample.mean_n_c - 15) <= 5 * math.sqrt(20 * 0.75 * 0.25 / trials)
    assert abs(sample.mean_n_b - 74.25) <= 5 * math.sqrt(99 * 0.75 * 0.25 / trials)


def test_occupancy_is_reproducible():
    first = occupancy_monte_carlo(0.5, 4.5, 5000, seed=11)
    second = occupancy_monte_carlo(0.5, 4.5, 5000, seed=11)

    assert first == second
    assert (first.n_b_sockets, first.n_c_sockets) == (20, 9)


@pytest.mark.parametrize("occupancy, l, trials", [(1.5, 10, 10), (0.5, 0.5, 10),
                                                  (0.5, 10, 0)])
def test_occupancy_domain(occupancy, l, trials):
    with pytest.raises(DomainException):
        occupancy_monte_carlo(occupancy, l, trials, seed=1)
