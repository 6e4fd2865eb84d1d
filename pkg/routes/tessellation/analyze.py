# routes/tessellation/analyze.py
import click
from flask import Blueprint, request

from algorithms.generators import gen_tessellation
from algorithms.tessellation import analyze_patch
from utils.cli import emit, envelope, finish, output_option, tolerance_option, toolkit_command
from utils.graph_io import number_param
from utils.response import api_errors, response

tessellation_bp = Blueprint("tessellation_bp", __name__, cli_group=None)


@tessellation_bp.route("/analyze", methods=["POST"])
@api_errors
def analyze():
    data = request.get_json() or {}
    try:
        p, q, r = int(data["p"]), int(data["q"]), int(data.get("r", 3))
    except (KeyError, TypeError, ValueError):
        return response(False, "p and q are required integers"), 400
    result = analyze_patch(gen_tessellation(p, q, r), number_param(data, "tol"))
    return response(result["passed"], "Patch analysed", result), 200


@tessellation_bp.cli.command("tess-analyze")
@click.option("--p", type=int, required=True, help="Vertex degree.")
@click.option("--q", type=int, required=True, help="Face size.")
@click.option("--r", type=int, default=3, show_default=True, help="Patch radius in face layers.")
@tolerance_option
@output_option
@toolkit_command
def tess_analyze_command(p, q, r, tolerance, output):
    """Layer, boundary, earthworm and forest checks on a {p,q} patch, with ρ against the bounds."""
    result = analyze_patch(gen_tessellation(p, q, r), tolerance)
    emit(envelope("tess-analyze", {"p": p, "q": q, "r": r, "tol": tolerance}, result), "json", output)
    finish(result["passed"])
