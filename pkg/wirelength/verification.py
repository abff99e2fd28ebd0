"""The oracle suite: closed forms checked against independent computations."""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

from wirelength.distribution import socket_pair_count, total_wire_count
from wirelength.estimators import estimate, exact_lavg
from wirelength.exceptions.convergence import ConvergenceException
from wirelength.oracles import (QuadratureSettings, grid_pair_histogram, lavg_by_quadrature,
                                occupancy_monte_carlo, wire_count_by_quadrature)
from wirelength.types import ChipConfiguration, LengthUnit, ModelId, RentParameters

logger = logging.getLogger(__name__)

GATE_COUNTS = (55, 252, 576, 2146, 100_000)
RENT_EXPONENTS = (0.47, 0.57, 0.667, 0.75)
OCCUPANCIES = (0.5, 0.75, 1.0)
GRID_SIDES = (2, 4, 10, 50)
CONVERGENCE_SIDES = (4, 10, 50, 100)
SOCKET_COUNTS = (16, 1e2, 1e4, 1e6)


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.max_deviation <= self.tolerance


def _relative(a, b):
    return abs(a - b) / abs(b)


def _grid():
    for n_gates, p, p_gates in itertools.product(GATE_COUNTS, RENT_EXPONENTS, OCCUPANCIES):
        yield ChipConfiguration(n_gates, p_gates), RentParameters(k=4.0, p=p, fanout=3.0)


def check_quadrature(settings, tolerance):
    worst = max(
        _relative(lavg_by_quadrature(chip, rent, settings),
                  exact_lavg(chip, rent.p, LengthUnit.SOCKET_LENGTHS).value)
        for chip, rent in _grid())
    return CheckResult("closed-form-vs-quadrature", worst, tolerance)


def check_normalization(settings, tolerance):
    worst = max(
        _relative(wire_count_by_quadrature(chip, rent, settings), total_wire_count(chip, rent))
        for chip, rent in _grid())
    return CheckResult("normalization", worst, tolerance)


def check_pair_count_continuity():
    worst = 0.0
    for n_sockets in SOCKET_COUNTS:
        knee = math.sqrt(n_sockets)
        upper_branch = (2 * knee - knee)**3 / 3
        worst = max(worst, _relative(socket_pair_count(knee, n_sockets), upper_branch))
    return CheckResult("pair-count-continuity", worst, 1e-9)


def check_grid_totals():
    worst = 0
    for side in GRID_SIDES:
        total = int(grid_pair_histogram(side).sum())
        worst = max(worst, abs(total - side * side * (side * side - 1) // 2))
    return CheckResult("grid-pair-total", float(worst), 0.0)


def grid_deviation(side):
    """Largest relative gap between M(l) and the exact count over integer l in [1, side]."""
    counts = grid_pair_histogram(side)
    return max(
        _relative(socket_pair_count(l, side * side), int(counts[l]))
        for l in range(1, side + 1))


def check_grid_convergence():
    deviations = [grid_deviation(side) for side in CONVERGENCE_SIDES]
    logger.debug("grid deviations %s", deviations)
    # report the largest increase between consecutive sides; 0 when non-increasing
    increase = max(max(later - earlier, 0.0)
                   for earlier, later in zip(deviations, deviations[1:]))
    return CheckResult("grid-convergence", increase, 0.0)


def check_occupancy(trials, seed):
    p_gates, l = 0.75, 10
    sample = occupancy_monte_carlo(p_gates, l, trials, seed)
    worst = 0.0
    for mean, sockets in ((sample.mean_n_b, sample.n_b_sockets),
                          (sample.mean_n_c, sample.n_c_sockets)):
        standard_error = math.sqrt(sockets * p_gates * (1 - p_gates) / trials)
        worst = max(worst, abs(mean - sockets * p_gates) / standard_error)
    return CheckResult("occupancy-sigmas", worst, 5.0)


def check_rent_constant_invariance(settings, tolerance):
    """L_avg from the integrated distribution at (k=1, f.o.=1) against (k=7, f.o.=4)."""
    worst = 0.0
    for n_gates, p in itertools.product(GATE_COUNTS, RENT_EXPONENTS):
        chip = ChipConfiguration(n_gates, 0.75)
        first = lavg_by_quadrature(chip, RentParameters(k=1.0, p=p, fanout=1.0), settings)
        second = lavg_by_quadrature(chip, RentParameters(k=7.0, p=p, fanout=4.0), settings)
        worst = max(worst, _relative(second, first))
    return CheckResult("k-fanout-invariance", worst, tolerance)


def check_half_occupancy_coincidence():
    chip = ChipConfiguration(2146, 0.5)
    pairs = ((ModelId.MODIFIED_SEKAR_EXACT, ModelId.SEKAR_EXACT),
             (ModelId.MODIFIED_SEKAR_APPROX, ModelId.SEKAR_APPROX))
    worst = 0.0
    for p in (0.667, 0.75):
        for modified, original in pairs:
            worst = max(
                worst,
                _relative(estimate(modified, chip, p).value, estimate(original, chip, p).value))
    return CheckResult("half-occupancy-coincidence", worst, 1e-12)


def _integrated(name, check, settings, tolerance):
    """Run a quadrature-backed check; an unconverged integral fails it."""
    try:
        return check(settings, tolerance)
    except ConvergenceException as err:
        logger.warning("%s: %s", name, err)
        return CheckResult(name, math.inf, tolerance)


def run_verification(settings=QuadratureSettings(), tolerance=1e-6, trials=200_000,
                     seed=2146):
    results = [
        _integrated("closed-form-vs-quadrature", check_quadrature, settings, tolerance),
        _integrated("normalization", check_normalization, settings, tolerance),
        check_pair_count_continuity(),
        check_grid_totals(),
        check_grid_convergence(),
        check_occupancy(trials, seed),
        _integrated("k-fanout-invariance", check_rent_constant_invariance, settings,
                    tolerance),
        check_half_occupancy_coincidence(),
    ]
    for result in results:
        logger.info("%s: %.3g (tolerance %.3g) %s", result.name, result.max_deviation,
                    result.tolerance, "ok" if result.passed else "FAILED")
    return results
