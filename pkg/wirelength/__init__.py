import os
import sys

import click
from flask import Flask
from flask.cli import ScriptInfo

from .commands.estimate import estimate_commands
from .commands.evaluate import evaluate_commands
from .commands.sweep import sweep_commands
from .commands.tables import table_commands
from .commands.verify import verify_commands


def create_app(test_config=None):
    # Create and configure app
    app = Flask(__name__, static_folder=None)

    app.config.from_mapping(
        DEFAULT_P_GATES=1.0,
        DEFAULT_UNIT="pitches",
        OUTPUT_FORMAT="csv",
        DIGITS=12,
        RENT_THRESHOLD=0.65,
        QUADRATURE_TOLERANCE=1e-9,
        QUADRATURE_MAX_SUBDIVISIONS=60,
        VERIFY_TOLERANCE=1e-6,
        MONTE_CARLO_TRIALS=200_000,
        DEFAULT_SEED=2146,
        SWEEP_STEPS=50,
        LOG_LEVEL="WARNING",
        BENCHMARK_DIR=os.path.join(os.path.dirname(__file__), 'data'),
    )

    # Apply Test Config
    if test_config is not None:
        app.config.update(test_config)

    app.logger.setLevel(app.config["LOG_LEVEL"])

    # Register Commands
    app.register_blueprint(estimate_commands)
    app.register_blueprint(sweep_commands)
    app.register_blueprint(evaluate_commands)
    app.register_blueprint(verify_commands)
    app.register_blueprint(table_commands)

    return app


def run(argv=None, app=None):
    """Run one CLI command and return its exit status.

    0 on success, 1 on bad input, 2 when `verify` finds a failing check.
    """
    app = app or create_app()
    try:
        result = app.cli.main(
            args=sys.argv[1:] if argv is None else list(argv),
            prog_name="wirelength",
            obj=ScriptInfo(create_app=lambda: app),
            standalone_mode=False,
        )
    except click.ClickException as err:
        err.show()
        return 1
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return 0 if result is None else result
