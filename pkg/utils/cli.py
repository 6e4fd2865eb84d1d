# utils/cli.py
import os
import sys
from functools import wraps

import click

from utils.errors import ToolkitError
from utils.graph_io import dump_json, rows_to_csv, write_output

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_TOOLKIT_ERROR = 2

TOOLKIT_VERSION = "1.0.0"
REPORT_FORMAT = os.getenv("REPORT_FORMAT", "json")

tolerance_option = click.option("--tol", "tolerance", type=float, default=None,
                                help="Width of the certified spectral interval (default SPECTRAL_TOLERANCE).")
format_option = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None,
                             help="Report format (default REPORT_FORMAT).")
output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                             help="Write the report here instead of stdout.")


def toolkit_command(f):
    """Print toolkit errors on stderr and exit with code 2."""
    @wraps(f)
    def decorated(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ToolkitError as e:
            click.echo(f"error [{e.code}]: {e.message}", err=True)
            sys.exit(EXIT_TOOLKIT_ERROR)

    return decorated


def emit(data, fmt: str = None, output: str = None, rows=None):
    """JSON is canonical; csv is only offered for row tables."""
    fmt = fmt or REPORT_FORMAT
    if fmt == "csv" and rows is not None:
        write_output(rows_to_csv(rows), output)
    else:
        write_output(dump_json(data), output)


def finish(passed: bool):
    sys.exit(EXIT_OK if passed else EXIT_CHECK_FAILED)


def envelope(command: str, params: dict, result) -> dict:
    """Every report carries the toolkit version and the parameters it was produced with."""
    return {"command": command, "version": TOOLKIT_VERSION, "params": params, "result": result}
