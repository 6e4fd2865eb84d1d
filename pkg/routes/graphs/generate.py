# routes/graphs/generate.py
import logging

import click
from flask import Blueprint, request

from algorithms.generators import gen_hkd, gen_named, gen_tessellation
from utils.cli import TOOLKIT_VERSION, emit, output_option, toolkit_command
from utils.graph_io import number_param
from utils.response import api_errors, response

logger = logging.getLogger(__name__)

generate_bp = Blueprint("generate_bp", __name__, cli_group=None)


def generate(family: str, params: dict) -> dict:
    """Graph JSON for a family; hkd adds layers (and a rotation for k = 2), tess adds the patch annotations."""
    if family == "hkd":
        data = gen_hkd(number_param(params, "k", 2, int), number_param(params, "d", 8, int),
                       number_param(params, "i", 0, int)).to_json()
    elif family == "tess":
        data = gen_tessellation(number_param(params, "p", 4, int), number_param(params, "q", 5, int),
                                number_param(params, "r", 2, int)).to_json()
    else:
        data = gen_named(family, **params).to_json()
        data["params"] = {"family": family, **params}
    data["version"] = TOOLKIT_VERSION
    return data


@generate_bp.route("/", methods=["POST"])
@api_errors
def generate_graph():
    data = request.get_json() or {}
    family = data.get("family")
    if not family:
        return response(False, "family is required"), 400
    graph = generate(family, data.get("params") or {})
    return response(True, "Graph generated", graph), 200


@generate_bp.cli.group("gen")
def gen():
    """Generate graph families as JSON."""


@gen.command("hkd")
@click.option("--k", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--i", "steps", type=int, default=0, show_default=True)
@click.option("--seed", type=int, default=None, help="Reserved; generators are deterministic.")
@output_option
@toolkit_command
def gen_hkd_command(k, d, steps, seed, output):
    """H^(k,d)_i with its layers."""
    emit(generate("hkd", {"k": k, "d": d, "i": steps}), "json", output)


@gen.command("tess")
@click.option("--p", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, default=2, show_default=True)
@click.option("--seed", type=int, default=None, help="Reserved; generators are deterministic.")
@output_option
@toolkit_command
def gen_tess_command(p, q, r, seed, output):
    """Ball of face radius r in the {p,q} tessellation."""
    emit(generate("tess", {"p": p, "q": q, "r": r}), "json", output)


@gen.command("named")
@click.option("--family", required=True)
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--d", type=int, default=None)
@click.option("--h", type=int, default=None)
@click.option("--rounds", type=int, default=None)
@click.option("--seed", type=int, default=None, help="Reserved; generators are deterministic.")
@output_option
@toolkit_command
def gen_named_command(family, n, m, d, h, rounds, seed, output):
    """Named families: complete, complete-bipartite, star, cycle, path, dary-tree, grid, wheel, apollonian."""
    params = {key: value for key, value in
              {"n": n, "m": m, "d": d, "h": h, "rounds": rounds}.items() if value is not None}
    emit(generate(family, params), "json", output)
