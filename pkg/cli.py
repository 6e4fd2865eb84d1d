# cli.py
"""Command-line entry point: `python cli.py <command> ...`."""
from flask.cli import FlaskGroup

from app import create_app

cli = FlaskGroup(create_app=create_app, add_default_commands=False, load_dotenv=True,
                 help="Spectral radius bounds for sparse graphs.")

if __name__ == "__main__":
    cli()
