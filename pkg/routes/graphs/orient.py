# routes/graphs/orient.py
import click
from flask import Blueprint, request

from algorithms.graph_ops import densest_witness, orient_max_indegree
from utils.cli import emit, envelope, finish, output_option, toolkit_command
from utils.graph_io import graph_from_payload, number_param, plain_graph, read_graph
from utils.response import api_errors, response

orient_bp = Blueprint("orient_bp", __name__, cli_group=None)


def orient(graph, k: int) -> dict:
    orientation = orient_max_indegree(graph, k)
    if orientation is not None:
        return {"exists": True, "orientation": orientation.to_json(k)}
    return {"exists": False, "witness": densest_witness(graph, k)}


@orient_bp.route("/", methods=["POST"])
@api_errors
def orient_graph():
    data = request.get_json() or {}
    graph = plain_graph(graph_from_payload(data))
    k = number_param(data, "k", 2, int)
    result = orient(graph, k)
    message = "Orientation found" if result["exists"] else f"No orientation with indegree <= {k}"
    return response(True, message, result), 200


@orient_bp.cli.command("orient")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", type=int, required=True, help="Maximum indegree.")
@output_option
@toolkit_command
def orient_command(input_path, k, output):
    """Orient INPUT with every indegree at most k, or print a subgraph denser than k."""
    graph = plain_graph(read_graph(input_path))
    result = orient(graph, k)
    emit(envelope("orient", {"input": input_path, "k": k}, result), "json", output)
    finish(result["exists"])
