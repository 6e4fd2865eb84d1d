# routes/spectral/rho.py
import click
from flask import Blueprint, request

from algorithms.spectral import SPECTRAL_TOLERANCE, rho_power
from utils.cli import emit, envelope, output_option, tolerance_option, toolkit_command
from utils.graph_io import graph_from_payload, number_param, plain_graph, read_graph
from utils.response import api_errors, response

rho_bp = Blueprint("rho_bp", __name__, cli_group=None)


def estimate(graph, tolerance: float = None, witness: bool = False) -> dict:
    graph = plain_graph(graph)
    result = rho_power(graph, tolerance).to_json(include_witness=witness)
    result.update({"n": graph.num_vertices, "m": graph.num_edges, "delta": graph.max_degree})
    return result


@rho_bp.route("/", methods=["POST"])
@api_errors
def rho():
    data = request.get_json() or {}
    graph = graph_from_payload(data)
    tolerance = number_param(data, "tol", SPECTRAL_TOLERANCE)
    return response(True, "Spectral radius estimated", estimate(graph, tolerance, bool(data.get("witness")))), 200


@rho_bp.cli.command("rho")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@tolerance_option
@click.option("--witness", is_flag=True, help="Include the Collatz–Wielandt witness vector.")
@output_option
@toolkit_command
def rho_command(input_path, tolerance, witness, output):
    """Certified interval for the spectral radius of INPUT."""
    tolerance = SPECTRAL_TOLERANCE if tolerance is None else tolerance
    result = estimate(read_graph(input_path), tolerance, witness)
    emit(envelope("rho", {"input": input_path, "tol": tolerance}, result), "json", output)
