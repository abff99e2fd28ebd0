"""Closed-form average interconnect length estimators.

Exact models evaluate the ratio of the first two moments of i(l) in
closed form; approximate models keep only the leading power of N.
Each model has a native unit (socket lengths for the Sekar exact family,
gate pitches for everything else) and results are converted on request.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from wirelength.distribution import check_exponent, convert_length, count_bracket
from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.invalidexponent import InvalidExponentException
from wirelength.types import (Advisory, ChipConfiguration, EstimateResult, LengthUnit,
                              ModelId, RentParameters)

logger = logging.getLogger(__name__)

RENT_THRESHOLD = 0.65

EXACT_MODELS = (ModelId.DAVIS_EXACT, ModelId.SEKAR_EXACT, ModelId.MODIFIED_DAVIS_EXACT,
                ModelId.MODIFIED_SEKAR_EXACT)
APPROXIMATE_MODELS = (ModelId.DAVIS_APPROX, ModelId.SEKAR_APPROX,
                      ModelId.MODIFIED_DAVIS_APPROX, ModelId.MODIFIED_SEKAR_APPROX)


def length_bracket(n, p):
    """First-moment bracket of the exact model, before the sqrt(n)/(p-0.5) factor."""
    root = math.sqrt(n)
    return ((p - 0.5) / p - root - (p - 0.5) / (6 * (p + 0.5) * root) + n**p *
            (-p - 1 + 4**(p - 0.5)) / (2 * p * (p + 0.5) * (p - 1)))


def closed_form_lavg(n, p):
    """L_avg over an n-socket array, in socket lengths."""
    check_exponent(p)
    return math.sqrt(n) / (p - 0.5) * length_bracket(n, p) / count_bracket(n, p)


def _approx_core(n_gates, p):
    return n_gates**(p - 0.5) * (p + 1 - 4**(p - 0.5)) / (2 * p * (p - 0.5) * (p + 0.5))


def _exponent(rent):
    return rent.p if isinstance(rent, RentParameters) else float(rent)


def _check_exact(p):
    if not 0 < p < 1:
        raise DomainException(f"rent exponent p must lie in (0, 1), got {p!r}", "rent_p")
    check_exponent(p)


def _check_approx(p, model):
    if not p > 0.5:
        raise InvalidExponentException(p, model.value)
    if not p < 1:
        raise DomainException(f"rent exponent p must lie in (0.5, 1), got {p!r}", "rent_p")


def _native(model, chip, p):
    """(value, native unit) of `model` before any unit conversion."""
    n, occupancy = chip.n_gates, chip.p_gates
    if model is ModelId.SEKAR_EXACT:
        return closed_form_lavg(chip.n_sockets, p), LengthUnit.SOCKET_LENGTHS
    if model is ModelId.MODIFIED_SEKAR_EXACT:
        return (closed_form_lavg(chip.n_sockets, p) / (2 * occupancy)**0.25,
                LengthUnit.SOCKET_LENGTHS)
    if model is ModelId.DAVIS_EXACT:
        return closed_form_lavg(n, p), LengthUnit.GATE_PITCHES
    if model is ModelId.MODIFIED_DAVIS_EXACT:
        return closed_form_lavg(n, p) / (2 * occupancy)**0.25, LengthUnit.GATE_PITCHES
    if model is ModelId.DAVIS_APPROX:
        return _approx_core(n, p), LengthUnit.GATE_PITCHES
    if model is ModelId.SEKAR_APPROX:
        return occupancy**(1 - p) * _approx_core(n, p), LengthUnit.GATE_PITCHES
    if model is ModelId.MODIFIED_DAVIS_APPROX:
        return _approx_core(n, p) / math.sqrt(2 * occupancy), LengthUnit.GATE_PITCHES
    if model is ModelId.MODIFIED_SEKAR_APPROX:
        return (occupancy**(0.5 - p) * _approx_core(n, p) / math.sqrt(2),
                LengthUnit.GATE_PITCHES)
    raise DomainException(f"unsupported model {model!r}", "model")


def _result(model, chip, p, unit):
    unit = LengthUnit.parse(unit)
    value, native = _native(model, chip, p)
    warnings = ()
    if model.is_approximate and p < RENT_THRESHOLD:
        logger.debug("%s evaluated below the p=%s threshold (p=%s)", model.value,
                     RENT_THRESHOLD, p)
        warnings = (Advisory.BELOW_RENT_THRESHOLD,)
    return EstimateResult(
        value=convert_length(value, native, unit, chip.p_gates),
        unit=unit,
        model=model,
        warnings=warnings,
    )


def exact_lavg(chip: ChipConfiguration, p, unit=LengthUnit.GATE_PITCHES):
    """Exact closed form at N_soc = n_gates / p_gates (the Sekar exact model).

    Independent of k and the fan-out: alpha k Gamma cancels in the ratio.
    """
    _check_exact(p)
    return _result(ModelId.SEKAR_EXACT, chip, p, unit)


def modified_exact_lavg(chip: ChipConfiguration, p, model, unit=LengthUnit.GATE_PITCHES):
    model = ModelId.parse(model)
    if model not in (ModelId.MODIFIED_SEKAR_EXACT, ModelId.MODIFIED_DAVIS_EXACT):
        raise DomainException(f"{model.value} is not a modified exact model", "model")
    _check_exact(p)
    return _result(model, chip, p, unit)


def approx_lavg(chip: ChipConfiguration, p, model, unit=LengthUnit.GATE_PITCHES):
    model = ModelId.parse(model)
    if not model.is_approximate:
        raise DomainException(f"{model.value} is not an approximate model", "model")
    _check_approx(p, model)
    return _result(model, chip, p, unit)


def estimate(model, chip: ChipConfiguration, rent: Union[RentParameters, float],
             unit=LengthUnit.GATE_PITCHES):
    """Evaluate any model. `rent` may be RentParameters or a bare exponent."""
    model = ModelId.parse(model)
    p = _exponent(rent)
    if model.is_approximate:
        return approx_lavg(chip, p, model, unit)
    if model.is_modified:
        return modified_exact_lavg(chip, p, model, unit)
    _check_exact(p)
    return _result(model, chip, p, unit)


@dataclass(frozen=True)
class SweepRow:
    n_gates: float
    p: float
    lavg: Optional[float]
    error: Optional[str] = None


def _axis(lo, hi, steps, spacing):
    if spacing == "log":
        if not lo > 0:
            raise DomainException(f"log spacing needs a positive gate range, got min {lo!r}",
                                  "range")
        return np.geomspace(lo, hi, steps)
    if spacing == "linear":
        return np.linspace(lo, hi, steps)
    raise DomainException(f"unknown spacing {spacing!r}; expected linear or log", "spacing")


def sweep(gates_range, p_range, model, steps, p_gates=1.0, unit=LengthUnit.GATE_PITCHES,
          spacing="linear"):
    """Sample `model` along a straight path through (n_gates, p) space.

    Both axes get `steps` evenly spaced samples and are walked together;
    give equal endpoints to hold an axis fixed. Points a model rejects
    come back as rows with `lavg=None` and the error message.
    """
    model = ModelId.parse(model)
    if int(steps) != steps or steps < 2:
        raise DomainException(f"steps must be an integer >= 2, got {steps!r}", "steps")
    steps = int(steps)
    (gates_lo, gates_hi), (p_lo, p_hi) = gates_range, p_range
    if gates_lo > gates_hi or p_lo > p_hi:
        raise DomainException("sweep ranges must be given as (min, max)", "range")
    gates_axis = _axis(gates_lo, gates_hi, steps, spacing)
    p_axis = np.linspace(p_lo, p_hi, steps)

    rows = []
    for n_gates, p in zip(gates_axis.tolist(), p_axis.tolist()):
        try:
            chip = ChipConfiguration(n_gates, p_gates)
            value = estimate(model, chip, p, unit).value
        except DomainException as err:
            logger.debug("sweep gap at n_gates=%s p=%s: %s", n_gates, p, err)
            rows.append(SweepRow(n_gates, p, None, str(err)))
        else:
            rows.append(SweepRow(n_gates, p, value))
    return rows
