# routes/verification/verify.py
import json
import logging

import click
from flask import Blueprint, current_app, request

from algorithms.corpus import DEFAULT_CORPUS, summarize, verify_corpus
from algorithms.spectral import SPECTRAL_TOLERANCE
from models.verification import VerificationRun
from tasks.verify_tasks import verify_in_parallel
from utils.cli import (TOOLKIT_VERSION, emit, envelope, finish, format_option, output_option,
                       tolerance_option, toolkit_command)
from utils.errors import GraphError
from utils.graph_io import ROW_FIELDS, number_param
from utils.response import api_errors, response

logger = logging.getLogger(__name__)

verify_bp = Blueprint("verify_bp", __name__, cli_group=None)


def load_corpus(path: str = None) -> list:
    """A JSON list of corpus entries, or the built-in corpus."""
    if path is None:
        return list(DEFAULT_CORPUS)
    with open(path, encoding="utf-8") as handle:
        try:
            entries = json.load(handle)
        except json.JSONDecodeError as e:
            raise GraphError(f"Corpus file is not valid JSON: {e.msg}", {"line": e.lineno})
    if not isinstance(entries, list):
        raise GraphError("Corpus file must hold a JSON list of entries")
    return entries


def run_verification(entries: list, tolerance: float = None, timings: bool = False, parallel: bool = False) -> list:
    if parallel:
        return verify_in_parallel(entries, tolerance, timings)
    return verify_corpus(entries, tolerance, timings)


def store_run(rows: list, tolerance: float, corpus: str):
    """Persist a run when MongoDB is configured; returns the stored id or None."""
    if not current_app.config.get("MONGO_URI"):
        logger.warning("MONGO_URI is not set; verification run not stored")
        return None
    run = VerificationRun.from_rows(rows, tolerance, TOOLKIT_VERSION, corpus)
    run.save()
    logger.info("Stored verification run %s", run.id)
    return str(run.id)


@verify_bp.route("/", methods=["POST"])
@api_errors
def verify():
    data = request.get_json(silent=True) or {}
    entries = data.get("entries") or list(DEFAULT_CORPUS)
    tolerance = number_param(data, "tol", SPECTRAL_TOLERANCE)
    rows = run_verification(entries, tolerance, bool(data.get("timings")), bool(data.get("parallel")))
    result = {"summary": summarize(rows), "rows": rows}
    if data.get("store"):
        result["run_id"] = store_run(rows, tolerance, "request" if data.get("entries") else "default")
    passed = result["summary"]["unsatisfied"] == 0
    return response(passed, "All bounds hold" if passed else "Some bounds are violated", result), 200


@verify_bp.route("/runs", methods=["GET"])
@api_errors
def list_runs():
    if not current_app.config.get("MONGO_URI"):
        return response(False, "Run storage is not configured"), 503
    limit = request.args.get("limit", default=20, type=int)
    runs = VerificationRun.objects.order_by("-created_at").limit(limit)
    return response(True, "Verification runs", [run.to_json() for run in runs]), 200


@verify_bp.route("/runs/<run_id>", methods=["GET"])
@api_errors
def get_run(run_id):
    if not current_app.config.get("MONGO_URI"):
        return response(False, "Run storage is not configured"), 503
    run = VerificationRun.objects(id=run_id).first()
    if not run:
        return response(False, "Run not found"), 404
    return response(True, "Verification run", run.to_json()), 200


@verify_bp.cli.command("verify")
@click.argument("corpus", required=False, type=click.Path(exists=True, dir_okay=False))
@tolerance_option
@format_option
@output_option
@click.option("--parallel", is_flag=True, help="Verify entries as a Celery group.")
@click.option("--store", is_flag=True, help="Save the run to MongoDB (needs MONGO_URI).")
@click.option("--timings", is_flag=True, help="Record runtime_ms per entry.")
@click.option("--seed", type=int, default=None, help="Reserved; the corpus is deterministic.")
@toolkit_command
def verify_command(corpus, tolerance, fmt, output, parallel, store, timings, seed):
    """Check every applicable bound on every graph of CORPUS (default: the built-in corpus)."""
    tolerance = SPECTRAL_TOLERANCE if tolerance is None else tolerance
    rows = run_verification(load_corpus(corpus), tolerance, timings, parallel)
    summary = summarize(rows)
    result = {"summary": summary, "rows": rows}
    if store:
        result["run_id"] = store_run(rows, tolerance, corpus or "default")
    params = {"corpus": corpus or "default", "tol": tolerance, "parallel": parallel}
    csv_rows = [{name: row.get(name) for name in ROW_FIELDS} for row in rows]
    emit(envelope("verify", params, result), fmt, output, rows=csv_rows)
    finish(summary["unsatisfied"] == 0)
