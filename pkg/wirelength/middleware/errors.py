import functools

import click
from flask import current_app

from wirelength.exceptions.convergence import ConvergenceException
from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.notfound import NotFoundException
from wirelength.exceptions.parse import ParseException
from wirelength.exceptions.validation import ValidationException


class InputError(click.ClickException):
    exit_code = 1


def reports_errors(command):
    """Turn library exceptions into click errors that name the bad input."""

    @functools.wraps(command)
    def wrapped_command(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except DomainException as err:
            parameter = f" [{err.parameter}]" if err.parameter else ""
            raise InputError(f"{err.message}{parameter}") from err
        except (ParseException, ValidationException) as err:
            raise InputError(f"invalid benchmark file: {err}") from err
        except NotFoundException as err:
            raise InputError(str(err)) from err
        except ConvergenceException as err:
            current_app.logger.warning("quadrature did not converge: %s", err.message)
            raise InputError(err.message) from err
        except OSError as err:
            raise InputError(f"cannot access {err.filename}: {err.strerror}") from err

    return wrapped_command
