"""Regenerates the five published comparison tables from the bundled benchmarks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from wirelength.evaluation import THRESHOLD_MODELS, evaluate, threshold_report
from wirelength.estimators import RENT_THRESHOLD
from wirelength.exceptions.domain import DomainException
from wirelength.types import ModelId, ModelSpec

ESTIMATE_DIGITS = 4
ERROR_DIGITS = 4


@dataclass(frozen=True)
class Layout:
    title: str
    benchmark: str
    models: tuple[ModelSpec, ...]
    threshold: Optional[float] = None


LAYOUTS = {
    1: Layout(
        "exact and modified exact models, benchmark set 1",
        "table1",
        (
            ModelSpec(ModelId.DAVIS_EXACT, 1.0),
            ModelSpec(ModelId.MODIFIED_DAVIS_EXACT, 1.0),
            ModelSpec(ModelId.SEKAR_EXACT, 0.75),
            ModelSpec(ModelId.MODIFIED_SEKAR_EXACT, 0.75),
        ),
    ),
    2: Layout(
        "modified exact models, benchmark set 2",
        "table2",
        (
            ModelSpec(ModelId.DAVIS_EXACT, 1.0),
            ModelSpec(ModelId.MODIFIED_DAVIS_EXACT, 1.0),
            ModelSpec(ModelId.MODIFIED_SEKAR_EXACT, 0.5),
            ModelSpec(ModelId.SEKAR_EXACT, 0.75),
            ModelSpec(ModelId.MODIFIED_SEKAR_EXACT, 0.75),
        ),
    ),
    3: Layout(
        "approximate models, benchmark set 1",
        "table1",
        (
            ModelSpec(ModelId.DAVIS_APPROX, 1.0),
            ModelSpec(ModelId.SEKAR_APPROX, 0.5),
            ModelSpec(ModelId.SEKAR_APPROX, 0.75),
        ),
    ),
    4: Layout("modified approximate models, benchmark set 1", "table1", THRESHOLD_MODELS),
    5: Layout(
        "modified approximate models above the Rent exponent threshold, benchmark set 1",
        "table1",
        THRESHOLD_MODELS,
        threshold=RENT_THRESHOLD,
    ),
}


@dataclass(frozen=True)
class Column:
    name: str
    digits: Optional[int] = None


@dataclass(frozen=True)
class Table:
    number: int
    title: str
    columns: tuple[Column, ...]
    rows: tuple[tuple, ...]
    report: object

    @property
    def average_errors(self):
        return tuple(self.report.per_model_mae[spec] for spec in self.report.models)


def _columns(models):
    columns = [Column("n_gates"), Column("rent_p", 3), Column("actual", 3)]
    for spec in models:
        columns.append(Column(spec.label, ESTIMATE_DIGITS))
        columns.append(Column(f"{spec.label} %error", ERROR_DIGITS))
    return tuple(columns)


def reproduce_table(number, dao):
    """Build table `number` (1-5) from the benchmark sets `dao` serves.

    Cells a model cannot produce are None; the last row holds each
    model's mean absolute percent error under its %error column.
    """
    if number not in LAYOUTS:
        raise DomainException(f"table must be one of 1-{len(LAYOUTS)}, got {number!r}",
                              "table")
    layout = LAYOUTS[number]
    records = dao.find(layout.benchmark)
    if layout.threshold is None:
        report = evaluate(records, layout.models)
    else:
        report = threshold_report(records, layout.threshold, layout.models).included

    rows = []
    for record in {row.record: None for row in report.rows}:
        cells = [record.n_gates, record.rent_p, record.actual_lavg]
        for row in report.rows:
            if row.record == record:
                cells.extend([row.estimate, row.percent_error])
        rows.append(tuple(cells))

    average = ["Avg error", None, None]
    for spec in report.models:
        average.extend([None, report.per_model_mae[spec]])
    rows.append(tuple(average))

    return Table(number, layout.title, _columns(report.models), tuple(rows), report)
