from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from wirelength.exceptions.domain import DomainException


class LengthUnit(Enum):
    SOCKET_LENGTHS = "sockets"
    GATE_PITCHES = "pitches"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise DomainException(
                f"unknown length unit {value!r}; expected one of "
                f"{', '.join(u.value for u in cls)}", "unit") from None


class ModelId(Enum):
    """The closed-form average wire length estimators.

    Values double as the CLI spelling.
    """

    DAVIS_EXACT = "davis-exact"
    SEKAR_EXACT = "sekar-exact"
    MODIFIED_DAVIS_EXACT = "modified-davis-exact"
    MODIFIED_SEKAR_EXACT = "modified-sekar-exact"
    DAVIS_APPROX = "davis-approx"
    SEKAR_APPROX = "sekar-approx"
    MODIFIED_DAVIS_APPROX = "modified-davis-approx"
    MODIFIED_SEKAR_APPROX = "modified-sekar-approx"

    @property
    def is_approximate(self):
        return self in _APPROXIMATE

    @property
    def is_modified(self):
        return self in _MODIFIED

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise DomainException(
                f"unknown model {value!r}; expected one of "
                f"{', '.join(m.value for m in cls)}", "model") from None


_APPROXIMATE = frozenset({
    ModelId.DAVIS_APPROX,
    ModelId.SEKAR_APPROX,
    ModelId.MODIFIED_DAVIS_APPROX,
    ModelId.MODIFIED_SEKAR_APPROX,
})

_MODIFIED = frozenset({
    ModelId.MODIFIED_DAVIS_EXACT,
    ModelId.MODIFIED_SEKAR_EXACT,
    ModelId.MODIFIED_DAVIS_APPROX,
    ModelId.MODIFIED_SEKAR_APPROX,
})


class Advisory(Enum):
    BELOW_RENT_THRESHOLD = "below-rent-threshold"


@dataclass(frozen=True)
class RentParameters:
    """Rent's rule T = k * N^p plus the average fan-out of the design."""

    k: float
    p: float
    fanout: float = 3.0

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k > 0):
            raise DomainException(f"rent constant k must be > 0, got {self.k!r}", "k")
        if not (math.isfinite(self.fanout) and self.fanout > 0):
            raise DomainException(f"fan-out must be > 0, got {self.fanout!r}", "fanout")
        if not 0 < self.p < 1:
            raise DomainException(f"rent exponent p must lie in (0, 1), got {self.p!r}",
                                  "rent_p")

    @property
    def alpha(self):
        # net count -> point-to-point interconnect count
        return self.fanout / (self.fanout + 1)


@dataclass(frozen=True)
class ChipConfiguration:
    """A square array of gate sockets, a fraction `p_gates` of them occupied."""

    n_gates: float
    p_gates: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.n_gates) and self.n_gates > 1):
            raise DomainException(f"gate count must be > 1, got {self.n_gates!r}", "gates")
        if not 0 < self.p_gates <= 1:
            raise DomainException(
                f"gate occupancy p_gates must lie in (0, 1], got {self.p_gates!r}",
                "p_gates")

    @property
    def n_sockets(self):
        return self.n_gates / self.p_gates

    @property
    def side(self):
        """Socket array side length in socket lengths."""
        return math.sqrt(self.n_sockets)


@dataclass(frozen=True)
class BlockPopulation:
    n_a: float
    n_b: float
    n_c: float
    separation: float


@dataclass(frozen=True)
class ModelSpec:
    """A model paired with the occupancy it is evaluated at, e.g. a table column."""

    model: ModelId
    p_gates: float = 1.0

    def __post_init__(self):
        if not 0 < self.p_gates <= 1:
            raise DomainException(
                f"gate occupancy p_gates must lie in (0, 1], got {self.p_gates!r}",
                "p_gates")

    @property
    def label(self):
        return f"{self.model.value}@{self.p_gates:g}"

    @classmethod
    def parse(cls, text, default_p_gates=1.0):
        """Read `name` or `name@p_gates`."""
        name, sep, occupancy = str(text).partition("@")
        if not sep:
            return cls(ModelId.parse(name), default_p_gates)
        try:
            p_gates = float(occupancy)
        except ValueError:
            raise DomainException(f"bad p_gates suffix in {text!r}", "model") from None
        return cls(ModelId.parse(name), p_gates)


@dataclass(frozen=True)
class EstimateResult:
    value: float
    unit: LengthUnit
    model: ModelId
    warnings: tuple[Advisory, ...] = field(default_factory=tuple)

    @property
    def below_threshold(self):
        return Advisory.BELOW_RENT_THRESHOLD in self.warnings


@dataclass(frozen=True)
class BenchmarkRecord:
    name: str
    n_gates: int
    rent_p: float
    actual_lavg: Optional[float] = None

    def __post_init__(self):
        if self.n_gates < 2:
            raise DomainException(f"gate count must be >= 2, got {self.n_gates!r}",
                                  "n_gates")
        if not 0 < self.rent_p < 1:
            raise DomainException(f"rent exponent must lie in (0, 1), got {self.rent_p!r}",
                                  "rent_p")
        if self.actual_lavg is not None and not self.actual_lavg > 0:
            raise DomainException(
                f"actual average length must be > 0, got {self.actual_lavg!r}",
                "actual_lavg")
