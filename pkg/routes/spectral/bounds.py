# routes/spectral/bounds.py
import click
from flask import Blueprint, request

from algorithms.bounds import BOUNDS, bound_table, evaluate_bound, lower_bound_sequence
from utils.cli import emit, envelope, format_option, output_option, tolerance_option, toolkit_command
from utils.errors import GraphError
from utils.graph_io import parse_params
from utils.response import api_errors, response

bounds_bp = Blueprint("bounds_bp", __name__, cli_group=None)


def _int_range(text: str) -> range:
    """'4..8' or '6' as an inclusive range."""
    low, _, high = str(text).partition("..")
    try:
        return range(int(low), int(high or low) + 1)
    except ValueError:
        raise GraphError(f"Expected 'a..b' or a single integer, got '{text}'", {"range": text})


@bounds_bp.route("/", methods=["GET"])
def list_bounds():
    return response(True, "Registered bounds", [formula.to_json() for formula in BOUNDS.values()]), 200


@bounds_bp.route("/evaluate", methods=["POST"])
@api_errors
def evaluate():
    data = request.get_json() or {}
    bound_id = data.get("bound_id")
    if not bound_id:
        return response(False, "bound_id is required"), 400
    params = data.get("params") or {}
    value = evaluate_bound(bound_id, **params)
    return response(True, "Bound evaluated", {"bound_id": bound_id, "params": params, "value": value}), 200


@bounds_bp.route("/table", methods=["GET"])
@api_errors
def table():
    p_values = _int_range(request.args.get("p", "4..8"))
    q_values = _int_range(request.args.get("q", "4..8"))
    return response(True, "Bound table", bound_table(p_values, q_values)), 200


@bounds_bp.cli.command("bound")
@click.argument("bound_id")
@click.option("--param", "pairs", multiple=True, help="key=value, repeatable (e.g. --param delta=12).")
@output_option
@toolkit_command
def bound_command(bound_id, pairs, output):
    """Evaluate one registered bound."""
    params = parse_params(pairs)
    value = evaluate_bound(bound_id, **params)
    emit(envelope("bound", {"bound_id": bound_id, **params}, {"value": value}), "json", output)


@bounds_bp.cli.command("bound-table")
@click.option("--p", "p_range", default="4..8", show_default=True, help="Vertex degrees, as 'a..b' or a single value.")
@click.option("--q", "q_range", default="4..8", show_default=True, help="Face sizes, as 'a..b' or a single value.")
@format_option
@output_option
@toolkit_command
def bound_table_command(p_range, q_range, fmt, output):
    """Tessellation, Higuchi–Shirai and Paschke values for each hyperbolic (p, q)."""
    rows = bound_table(_int_range(p_range), _int_range(q_range))
    emit(envelope("bound-table", {"p": p_range, "q": q_range}, rows), fmt, output, rows=rows)


@bounds_bp.cli.command("lower-sequence")
@click.option("--k", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--depth", type=int, default=4, show_default=True)
@click.option("--q", "decay", type=float, default=None, help="Geometric ratio of the test vector; must stay below √(k/(d-k)) (default 0.99 of that).")
@tolerance_option
@format_option
@output_option
@toolkit_command
def lower_sequence_command(k, d, depth, decay, tolerance, fmt, output):
    """ρ(H^(k,d)_i) for i = 0..depth beside the Rayleigh certificate and the limit 2√(k(d-k))."""
    if decay is None:
        decay = 0.99 * (k / (d - k)) ** 0.5 if 1 <= k < d else 1.0
    rows = lower_bound_sequence(k, d, depth, decay, tolerance)
    params = {"k": k, "d": d, "depth": depth, "q": decay, "tol": tolerance}
    emit(envelope("lower-sequence", params, rows), fmt, output, rows=rows)
