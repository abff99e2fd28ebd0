import click
from flask import Blueprint, current_app

from wirelength.commands.options import MODEL_CHOICE, CliConfig, chip_options, emit, output_options
from wirelength.estimators import estimate
from wirelength.middleware.errors import reports_errors
from wirelength.output import render
from wirelength.types import ChipConfiguration

estimate_commands = Blueprint("estimate", __name__, cli_group=None)

COLUMNS = ("model", "n_gates", "rent_p", "p_gates", "unit", "lavg", "warnings")


@estimate_commands.cli.command("estimate")
@click.option("--model", type=MODEL_CHOICE, required=True, help="Estimator to evaluate.")
@click.option("--gates", type=float, required=True, help="Number of gates N_gates.")
@click.option("--rent-p", type=float, required=True, help="Rent exponent p.")
@chip_options
@output_options
@reports_errors
def estimate_lavg(model, gates, rent_p, p_gates, unit, output_format, output_path, digits):
    """Print the average interconnect length of one chip under one model."""
    config = CliConfig.resolve("estimate", model=model, p_gates=p_gates, unit=unit,
                               output_format=output_format, output_path=output_path,
                               digits=digits)

    # Evaluate the model
    chip = ChipConfiguration(gates, config.p_gates)
    result = estimate(config.model, chip, rent_p, config.unit)
    if result.below_threshold:
        current_app.logger.warning(
            "%s is unreliable for p=%s below %s", config.model.value, rent_p,
            current_app.config["RENT_THRESHOLD"])

    output = render(COLUMNS, [{
        "model": result.model,
        "n_gates": gates,
        "rent_p": rent_p,
        "p_gates": config.p_gates,
        "unit": result.unit,
        "lavg": result.value,
        "warnings": ";".join(advisory.value for advisory in result.warnings),
    }], config.output_format, config.digits)

    emit(config, output)
