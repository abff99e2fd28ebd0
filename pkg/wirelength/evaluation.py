"""Benchmark ingestion and error metrics for the estimators."""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from statistics import fmean
from typing import BinaryIO, Iterable, Optional, Sequence

from wirelength.distribution import convert_length
from wirelength.estimators import RENT_THRESHOLD, estimate
from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.parse import ParseException
from wirelength.exceptions.validation import ValidationException
from wirelength.types import (BenchmarkRecord, ChipConfiguration, LengthUnit, ModelId,
                              ModelSpec)

logger = logging.getLogger(__name__)

HEADER = ("name", "n_gates", "rent_p", "actual_lavg")

# Modified approximate columns of the threshold table.
THRESHOLD_MODELS = (
    ModelSpec(ModelId.MODIFIED_DAVIS_APPROX, 1.0),
    ModelSpec(ModelId.MODIFIED_SEKAR_APPROX, 0.5),
    ModelSpec(ModelId.MODIFIED_SEKAR_APPROX, 0.75),
)


def _data_lines(text):
    """(line number, line) pairs, skipping blank and '#' provenance lines."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def _parse_int(value, field_name, line):
    try:
        return int(value)
    except ValueError:
        raise ParseException(f"{field_name} must be an integer, got {value!r}", line) from None


def _parse_float(value, field_name, line):
    try:
        return float(value)
    except ValueError:
        raise ParseException(f"{field_name} must be a decimal number, got {value!r}",
                             line) from None


def load_benchmarks(source: BinaryIO, format="csv"):
    """Read benchmark records from a UTF-8 CSV byte stream.

    The header must be `name,n_gates,rent_p,actual_lavg`; `actual_lavg`
    may be empty. Lines starting with '#' carry provenance and are skipped.
    A leading byte-order mark is ignored.
    """
    if format != "csv":
        raise DomainException(f"unsupported benchmark format {format!r}", "format")
    raw = source.read()
    try:
        text = raw.decode("utf-8-sig") if isinstance(raw, bytes) else raw.lstrip("\ufeff")
    except UnicodeDecodeError as err:
        raise ParseException(f"not UTF-8: {err.reason}", 1) from None

    lines = list(_data_lines(text))
    if not lines:
        raise ParseException("missing header", 1)
    numbers = [number for number, _ in lines]
    rows = csv.reader(io.StringIO("\n".join(line for _, line in lines)))

    header = [cell.strip() for cell in next(rows)]
    if tuple(header) != HEADER:
        raise ParseException(f"expected header {','.join(HEADER)}, got {','.join(header)}",
                             numbers[0])

    records = []
    for number, cells in zip(numbers[1:], rows):
        cells = [cell.strip() for cell in cells]
        if len(cells) != len(HEADER):
            raise ParseException(f"expected {len(HEADER)} fields, got {len(cells)}", number)
        name, n_gates, rent_p, actual = cells
        n_gates = _parse_int(n_gates, "n_gates", number)
        rent_p = _parse_float(rent_p, "rent_p", number)
        actual = _parse_float(actual, "actual_lavg", number) if actual else None
        try:
            records.append(BenchmarkRecord(name, n_gates, rent_p, actual))
        except DomainException as err:
            raise ValidationException(err.message, {
                "line": number,
                err.parameter: err.message
            }) from None
    logger.debug("loaded %d benchmark records", len(records))
    return records


@dataclass(frozen=True)
class EvaluationRow:
    record: BenchmarkRecord
    model: ModelSpec
    estimate: Optional[float]
    percent_error: Optional[float] = None
    skip_reason: Optional[str] = None
    below_threshold: bool = False
    estimate_pitches: Optional[float] = None

    @property
    def signed_error(self):
        if self.estimate is None or self.record.actual_lavg is None:
            return None
        return 100 * (self.estimate_pitches - self.record.actual_lavg) / self.record.actual_lavg


@dataclass(frozen=True)
class EvaluationReport:
    rows: tuple[EvaluationRow, ...]
    models: tuple[ModelSpec, ...]
    unit: LengthUnit = LengthUnit.GATE_PITCHES
    per_model_mae: dict = field(default_factory=dict)
    per_model_mean_error: dict = field(default_factory=dict)

    def rows_for(self, model: ModelSpec):
        return [row for row in self.rows if row.model == model]

    def used(self, model: ModelSpec):
        return sum(1 for row in self.rows_for(model) if row.percent_error is not None)

    def skipped(self, model: ModelSpec):
        return sum(1 for row in self.rows_for(model) if row.skip_reason is not None)


@dataclass(frozen=True)
class ThresholdReport:
    threshold: float
    included: EvaluationReport
    excluded: tuple[BenchmarkRecord, ...]


def _evaluate_one(record, spec, unit):
    try:
        chip = ChipConfiguration(record.n_gates, spec.p_gates)
        result = estimate(spec.model, chip, record.rent_p, LengthUnit.GATE_PITCHES)
    except DomainException as err:
        logger.debug("%s skipped under %s: %s", record.name, spec.label, err)
        return EvaluationRow(record, spec, None, skip_reason=str(err))

    pitches = result.value
    percent_error = None
    if record.actual_lavg is not None:
        percent_error = 100 * abs(pitches - record.actual_lavg) / record.actual_lavg
    return EvaluationRow(
        record,
        spec,
        convert_length(pitches, LengthUnit.GATE_PITCHES, unit, spec.p_gates),
        percent_error=percent_error,
        below_threshold=result.below_threshold,
        estimate_pitches=pitches,
    )


def _as_spec(model):
    if isinstance(model, ModelSpec):
        return model
    model_id, p_gates = model
    return ModelSpec(ModelId.parse(model_id), p_gates)


def evaluate(records: Iterable[BenchmarkRecord], models: Sequence,
             unit=LengthUnit.GATE_PITCHES):
    """Estimate every record under every (model, p_gates) pair.

    Errors are always measured in gate pitches, against `actual_lavg`.
    Rows a model rejects carry a skip reason and stay out of its MAE;
    a model with no usable rows has MAE None.
    """
    unit = LengthUnit.parse(unit)
    specs = tuple(_as_spec(model) for model in models)
    rows = tuple(_evaluate_one(record, spec, unit) for record in records for spec in specs)

    mae, mean_error = {}, {}
    for spec in specs:
        errors = [row.percent_error for row in rows if row.model == spec and
                  row.percent_error is not None]
        signed = [row.signed_error for row in rows if row.model == spec and
                  row.signed_error is not None]
        mae[spec] = fmean(errors) if errors else None
        mean_error[spec] = fmean(signed) if signed else None
    return EvaluationReport(rows, specs, unit, mae, mean_error)


def threshold_report(records: Iterable[BenchmarkRecord], threshold=RENT_THRESHOLD,
                     models: Sequence = THRESHOLD_MODELS, unit=LengthUnit.GATE_PITCHES):
    """Evaluate only the records whose Rent exponent reaches `threshold`."""
    if not 0.5 < threshold < 1:
        raise DomainException(f"threshold must lie in (0.5, 1), got {threshold!r}",
                              "threshold")
    records = list(records)
    included = [record for record in records if record.rent_p >= threshold]
    excluded = tuple(record for record in records if record.rent_p < threshold)
    logger.info("threshold p >= %s keeps %d of %d records", threshold, len(included),
                len(records))
    return ThresholdReport(threshold, evaluate(included, models, unit), excluded)
