import math

import click
from flask import Blueprint, current_app

from wirelength.commands.options import CliConfig, emit, output_options
from wirelength.middleware.errors import reports_errors
from wirelength.oracles import QuadratureSettings
from wirelength.output import render
from wirelength.verification import run_verification

verify_commands = Blueprint("verify", __name__, cli_group=None)

COLUMNS = ("check", "max_deviation", "tolerance", "passed")


@verify_commands.cli.command("verify")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None,
              help="Monte Carlo seed (default 2146).")
@output_options
@click.pass_context
@reports_errors
def verify_oracles(ctx, seed, output_format, output_path, digits):
    """Check the closed forms against independent computations.

    Exits with status 2 when any check exceeds its tolerance.
    """
    config = CliConfig.resolve("verify", seed=seed, output_format=output_format,
                               output_path=output_path, digits=digits)
    settings = QuadratureSettings(
        relative_tolerance=current_app.config["QUADRATURE_TOLERANCE"],
        max_subdivisions=current_app.config["QUADRATURE_MAX_SUBDIVISIONS"],
    )

    # Run the suite
    results = run_verification(settings, tolerance=current_app.config["VERIFY_TOLERANCE"],
                               trials=current_app.config["MONTE_CARLO_TRIALS"],
                               seed=config.seed)

    output = render(COLUMNS, [{
        "check": result.name,
        "max_deviation": result.max_deviation if math.isfinite(result.max_deviation) else None,
        "tolerance": result.tolerance,
        "passed": result.passed,
    } for result in results], config.output_format, config.digits)

    emit(config, output)

    failed = [result.name for result in results if not result.passed]
    if failed:
        current_app.logger.warning("verification failed: %s", ", ".join(failed))
        ctx.exit(2)
