import click
from flask import Blueprint, current_app

from wirelength.commands.options import CliConfig, chip_options, emit, output_options
from wirelength.dao.benchmarks import BenchmarkDAO
from wirelength.evaluation import evaluate, load_benchmarks, threshold_report
from wirelength.middleware.errors import reports_errors
from wirelength.output import render
from wirelength.types import ModelSpec

evaluate_commands = Blueprint("evaluate", __name__, cli_group=None)

DEFAULT_BENCHMARK = "table1"

COLUMNS = ("name", "n_gates", "rent_p", "actual_lavg", "model", "estimate", "percent_error",
           "mean_error", "used", "skipped", "below_threshold", "skip_reason")


def _records(input_path):
    if input_path is None:
        # Create the DAO
        dao = BenchmarkDAO(current_app.config["BENCHMARK_DIR"])
        return dao.find(DEFAULT_BENCHMARK)
    with open(input_path, "rb") as source:
        return load_benchmarks(source)


def _report_rows(report):
    rows = [{
        "name": row.record.name,
        "n_gates": row.record.n_gates,
        "rent_p": row.record.rent_p,
        "actual_lavg": row.record.actual_lavg,
        "model": row.model.label,
        "estimate": row.estimate,
        "percent_error": row.percent_error,
        "below_threshold": row.below_threshold,
        "skip_reason": row.skip_reason,
    } for row in report.rows]

    # One summary row per model: MAE under percent_error
    for spec in report.models:
        rows.append({
            "name": "Avg error",
            "model": spec.label,
            "percent_error": report.per_model_mae[spec],
            "mean_error": report.per_model_mean_error[spec],
            "used": report.used(spec),
            "skipped": report.skipped(spec),
        })
    return rows


@evaluate_commands.cli.command("evaluate")
@click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None,
              help="Benchmark CSV (name,n_gates,rent_p,actual_lavg). "
              "Defaults to the bundled first benchmark set.")
@click.option("--model", "models", multiple=True, required=True, metavar="NAME[@P_GATES]",
              help="Model column to evaluate; repeat for several.")
@click.option("--threshold", type=float, default=None,
              help="Only evaluate records with rent_p >= THRESHOLD.")
@chip_options
@output_options
@reports_errors
def evaluate_benchmarks(input_path, models, threshold, p_gates, unit, output_format,
                        output_path, digits):
    """Compare model estimates with measured average lengths."""
    config = CliConfig.resolve("evaluate", p_gates=p_gates, unit=unit,
                               output_format=output_format, input_path=input_path,
                               output_path=output_path, digits=digits)
    specs = [ModelSpec.parse(text, config.p_gates) for text in models]

    # Get the records
    records = _records(config.input_path)

    if threshold is None:
        report = evaluate(records, specs, config.unit)
    else:
        report = threshold_report(records, threshold, specs, config.unit).included

    for spec in report.models:
        current_app.logger.info("%s: MAE %s over %d rows, %d skipped", spec.label,
                                report.per_model_mae[spec], report.used(spec),
                                report.skipped(spec))

    output = render(COLUMNS, _report_rows(report), config.output_format, config.digits)

    emit(config, output)
