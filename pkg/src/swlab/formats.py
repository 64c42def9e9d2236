"""JSON/CSV file formats.

Graph:    {"n": int, "edges": [[u, v], ...]}       u < v, 0-based
Alpha:    {"n": int, "alpha": [a_1, ..., a_{n-1}]}
Summary:  {"n", "diameter", "mean": {"num", "den"}, "mean_float", "median"}
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .graph import AlphaArray, DistanceSummary, Graph, GraphError


class FormatError(ValueError):
    """A file does not match the expected schema."""


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def alpha_to_json(a: AlphaArray) -> dict:
    return {"n": a.n, "alpha": list(a.alpha)}


def summary_to_json(s: DistanceSummary) -> dict:
    return {
        "n": s.n,
        "diameter": s.diameter,
        "mean": {"num": s.mean.numerator, "den": s.mean.denominator},
        "mean_float": s.mean_float,
        "median": s.median,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read(path: str | Path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise FormatError(f"{path}: expected an object with integer 'n'")
    return data


def graph_from_json(data: dict) -> Graph:
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise FormatError("graph file needs an 'edges' list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(data["n"], tuple(pairs))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def alpha_from_json(data: dict) -> AlphaArray:
    alpha = data.get("alpha")
    if not (isinstance(alpha, list) and all(isinstance(x, int) for x in alpha)):
        raise FormatError("alpha file needs an integer 'alpha' list")
    try:
        return AlphaArray(data["n"], tuple(alpha))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(_read(path))


def load_alpha(path: str | Path) -> AlphaArray | Graph:
    """Load an alpha-array file, or a graph file (returned as a Graph)."""
    data = _read(path)
    if "alpha" in data:
        return alpha_from_json(data)
    if "edges" in data:
        return graph_from_json(data)
    raise FormatError(f"{path}: neither 'alpha' nor 'edges' present")


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
