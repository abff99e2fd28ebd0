from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import click
from flask import current_app

from wirelength.types import LengthUnit, ModelId

MODEL_CHOICE = click.Choice([model.value for model in ModelId])


@dataclass(frozen=True)
class CliConfig:
    """One invocation's settings, with unset flags filled from app config."""

    command: str
    model: Optional[ModelId] = None
    p_gates: float = 1.0
    unit: LengthUnit = LengthUnit.GATE_PITCHES
    output_format: str = "csv"
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    seed: Optional[int] = None
    digits: int = 12

    @classmethod
    def resolve(cls, command, model=None, p_gates=None, unit=None, output_format=None,
                input_path=None, output_path=None, seed=None, digits=None):
        config = current_app.config
        return cls(
            command=command,
            model=ModelId.parse(model) if model else None,
            p_gates=config["DEFAULT_P_GATES"] if p_gates is None else p_gates,
            unit=LengthUnit.parse(unit or config["DEFAULT_UNIT"]),
            output_format=output_format or config["OUTPUT_FORMAT"],
            input_path=input_path,
            output_path=output_path,
            seed=config["DEFAULT_SEED"] if seed is None else seed,
            digits=config["DIGITS"] if digits is None else digits,
        )


OUTPUT_OPTIONS = (
    click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None,
                 help="Report format (default from config: csv)."),
    click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None,
                 help="Write the report here instead of stdout."),
    click.option("--digits", type=click.IntRange(1, 17), default=None,
                 help="Significant digits for numbers (default 12)."),
)

CHIP_OPTIONS = (
    click.option("--p-gates", type=float, default=None,
                 help="Gate occupancy probability (default 1)."),
    click.option("--unit", type=click.Choice([unit.value for unit in LengthUnit]), default=None,
                 help="Length unit of the estimates (default pitches)."),
)


def _apply(options, command):
    for option in reversed(options):
        command = option(command)
    return command


def output_options(command):
    """--format, --output and --digits, shared by every command."""
    return _apply(OUTPUT_OPTIONS, command)


def chip_options(command):
    return _apply(CHIP_OPTIONS, command)


def emit(config: CliConfig, text):
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="") as target:
            target.write(text)
        current_app.logger.info("wrote %s report to %s", config.command, config.output_path)
    else:
        click.echo(text, nl=False)
