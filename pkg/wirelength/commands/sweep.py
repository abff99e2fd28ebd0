import click
from flask import Blueprint, current_app

from wirelength.commands.options import MODEL_CHOICE, CliConfig, chip_options, emit, output_options
from wirelength.estimators import sweep
from wirelength.middleware.errors import reports_errors
from wirelength.output import render

sweep_commands = Blueprint("sweep", __name__, cli_group=None)

COLUMNS = ("n_gates", "rent_p", "lavg", "error")


@sweep_commands.cli.command("sweep")
@click.option("--model", type=MODEL_CHOICE, required=True, help="Estimator to evaluate.")
@click.option("--gates-min", type=float, required=True)
@click.option("--gates-max", type=float, required=True)
@click.option("--p-min", type=float, required=True)
@click.option("--p-max", type=float, required=True)
@click.option("--steps", type=int, default=None, help="Samples along the path (default 50).")
@click.option("--spacing", type=click.Choice(["linear", "log"]), default="linear",
              help="Spacing of the gate-count axis.")
@chip_options
@output_options
@reports_errors
def sweep_lavg(model, gates_min, gates_max, p_min, p_max, steps, spacing, p_gates, unit,
               output_format, output_path, digits):
    """Print L_avg along a path from (gates-min, p-min) to (gates-max, p-max).

    Hold an axis fixed by giving equal endpoints. Points the model cannot
    evaluate keep their row, with the reason in the error column.
    """
    config = CliConfig.resolve("sweep", model=model, p_gates=p_gates, unit=unit,
                               output_format=output_format, output_path=output_path,
                               digits=digits)
    steps = current_app.config["SWEEP_STEPS"] if steps is None else steps

    # Walk the path
    rows = sweep((gates_min, gates_max), (p_min, p_max), config.model, steps,
                 p_gates=config.p_gates, unit=config.unit, spacing=spacing)
    gaps = sum(1 for row in rows if row.error is not None)
    current_app.logger.info("sweep of %s: %d points, %d gaps", config.model.value, len(rows),
                            gaps)

    output = render(COLUMNS, [{
        "n_gates": row.n_gates,
        "rent_p": row.p,
        "lavg": row.lavg,
        "error": row.error,
    } for row in rows], config.output_format, config.digits)

    emit(config, output)
