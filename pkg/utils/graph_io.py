# utils/graph_io.py
import csv
import io
import json
import math
from typing import Callable, Iterable, List, Optional, Union

from algorithms.embedding import check_declared_genus
from models.embedding import EmbeddedGraph
from models.graph import Graph
from utils.errors import GraphError

ROW_FIELDS = [
    "graph_id", "family", "params", "delta", "genus", "rho_lower", "rho_upper",
    "bound_id", "bound_value", "satisfied", "runtime_ms",
]


def parse_edge_list(text: str) -> Graph:
    """One 'u v' pair per line; blank lines and '#' comments are skipped."""
    edges = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise GraphError(f"Line {number}: expected 'u v', got '{line}'", {"line": number})
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"Line {number}: vertex ids must be integers", {"line": number})
    return Graph.from_edges(edges)


def parse_graph(text: str) -> Union[Graph, EmbeddedGraph]:
    """Graph JSON (with an optional rotation system, checked against its declared genus) or a plain edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphError(f"Invalid graph JSON: {e}")
        if data.get("rotation"):
            return check_declared_genus(EmbeddedGraph.from_json(data))
        return Graph.from_json(data)
    return parse_edge_list(text)


def read_graph(path: str) -> Union[Graph, EmbeddedGraph]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_graph(handle.read())
    except OSError as e:
        raise GraphError(f"Cannot read graph file '{path}': {e.strerror}", {"path": path})


def plain_graph(graph: Union[Graph, EmbeddedGraph]) -> Graph:
    return graph.graph if isinstance(graph, EmbeddedGraph) else graph


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def rows_to_csv(rows: Iterable[dict], fields: Optional[List[str]] = None) -> str:
    """Columns follow `fields`, else the keys of the first row."""
    rows = list(rows)
    fields = fields or (list(rows[0]) if rows else ROW_FIELDS)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        flat = dict(row)
        if isinstance(flat.get("params"), dict):
            flat["params"] = json.dumps(flat["params"], sort_keys=True)
        writer.writerow(flat)
    return buffer.getvalue()


def write_output(text: str, path: Optional[str] = None):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def graph_from_payload(data: dict) -> Union[Graph, EmbeddedGraph]:
    """The 'graph' object of an API request body."""
    graph = (data or {}).get("graph")
    if not isinstance(graph, dict):
        raise GraphError("Request body needs a 'graph' object with 'n' and 'edges'")
    if graph.get("rotation"):
        return check_declared_genus(EmbeddedGraph.from_json(graph))
    return Graph.from_json(graph)


def number_param(data: dict, key: str, default=None, cast: Callable = float):
    """Numeric field of a request body; absent or null gives `default`."""
    value = (data or {}).get(key)
    if value is None:
        return default
    try:
        number = cast(value)
    except (TypeError, ValueError):
        raise GraphError(f"'{key}' must be a number, got {value!r}", {"param": key, "value": value})
    if isinstance(number, float) and not math.isfinite(number):
        raise GraphError(f"'{key}' must be finite, got {value!r}", {"param": key, "value": value})
    return number


def parse_params(pairs: Iterable[str]) -> dict:
    """key=value strings into a dict; values become int or float when they parse as one."""
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise GraphError(f"Expected key=value, got '{pair}'", {"param": pair})
        key, value = pair.split("=", 1)
        for cast in (int, float):
            try:
                value = cast(value)
                break
            except ValueError:
                continue
        params[key.strip()] = value
    return params
