import click
from flask import Blueprint, current_app

from wirelength.commands.options import CliConfig, emit
from wirelength.dao.benchmarks import BenchmarkDAO
from wirelength.middleware.errors import reports_errors
from wirelength.output import render_tables
from wirelength.tables import LAYOUTS, reproduce_table

table_commands = Blueprint("tables", __name__, cli_group=None)


@table_commands.cli.command("tables")
@click.option("--table", "number", type=click.IntRange(1, len(LAYOUTS)), default=None,
              help="Table to regenerate; all of them when omitted.")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None)
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None)
@reports_errors
def regenerate_tables(number, output_format, output_path):
    """Regenerate the published comparison tables from the bundled benchmarks."""
    config = CliConfig.resolve("tables", output_format=output_format, output_path=output_path)

    # Create the DAO
    dao = BenchmarkDAO(current_app.config["BENCHMARK_DIR"])

    tables = []
    for table_number in (sorted(LAYOUTS) if number is None else [number]):
        table = reproduce_table(table_number, dao)
        current_app.logger.info("table %d: average errors %s", table_number,
                                table.average_errors)
        tables.append(table)

    emit(config, render_tables(tables, config.output_format))
