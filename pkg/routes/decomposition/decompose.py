# routes/decomposition/decompose.py
import click
from flask import Blueprint, request

from algorithms.bounds import decomposition_bound
from algorithms.decompose import decompose, verify_decomposition
from utils.cli import emit, envelope, finish, output_option, toolkit_command
from utils.graph_io import graph_from_payload, number_param, plain_graph, read_graph
from utils.response import api_errors, response

decompose_bp = Blueprint("decompose_bp", __name__, cli_group=None)


def decompose_and_verify(graph, variant: str, genus: int, k: int = None, with_bound: bool = False,
                         epsilon: float = None) -> dict:
    graph = plain_graph(graph)
    decomposition = decompose(graph, variant, genus, k)
    report = verify_decomposition(graph, decomposition)
    result = {"decomposition": decomposition.to_json(), "report": report.to_json()}
    if with_bound:
        result["bound"] = decomposition_bound(graph, genus, variant, epsilon, k)
    return result


@decompose_bp.route("/", methods=["POST"])
@api_errors
def decompose_graph():
    data = request.get_json() or {}
    graph = graph_from_payload(data)
    result = decompose_and_verify(
        graph,
        data.get("variant", "a"),
        number_param(data, "genus", 0, int),
        number_param(data, "k", None, int),
        bool(data.get("bound")),
        number_param(data, "epsilon"),
    )
    passed = result["report"]["passed"]
    return response(passed, "Decomposition verified" if passed else "Decomposition violates its contract", result), 200


@decompose_bp.cli.command("decompose")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(["a", "b", "c"]), default="a", show_default=True)
@click.option("--genus", type=int, default=0, show_default=True, help="Euler genus the graph embeds in.")
@click.option("--k", type=int, default=None, help="Excluded K_(2,k) order (variant c).")
@click.option("--bound", "with_bound", is_flag=True, help="Also report the spectral bound the decomposition gives.")
@click.option("--epsilon", type=float, default=None, help="Split L by threshold peeling before bounding it.")
@output_option
@toolkit_command
def decompose_command(input_path, variant, genus, k, with_bound, epsilon, output):
    """Edge decomposition of INPUT into T (and T1) plus L, checked against its contract."""
    result = decompose_and_verify(read_graph(input_path), variant, genus, k, with_bound, epsilon)
    params = {"input": input_path, "variant": variant, "genus": genus, "k": k}
    emit(envelope("decompose", params, result), "json", output)
    finish(result["report"]["passed"])
