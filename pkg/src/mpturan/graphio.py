"""Reading and writing graphs.

Two formats:

* a canonical JSON document (schema_version 1) holding the part sizes
  and the sorted edge list; serialization is byte-stable, so a load
  followed by a dump reproduces the input exactly, and digests of the
  serialized form are meaningful;
* DIMACS edge format with a ``c part-sizes`` comment carrying the
  partition, 1-indexed as usual.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphStructureError
from .graphs import MultipartiteGraph, from_edges

__all__ = [
    "SCHEMA_VERSION",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "dumps_graph",
    "loads_graph",
    "write_graph",
    "read_graph",
    "to_dimacs",
    "from_dimacs",
]

SCHEMA_VERSION = 1


def graph_to_json_dict(g: MultipartiteGraph) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "part_sizes": list(g.part_sizes),
        "edges": [[u, v] for u, v in g.edges()],
    }


def graph_from_json_dict(doc: dict) -> MultipartiteGraph:
    if not isinstance(doc, dict):
        raise GraphStructureError("graph document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise GraphStructureError(
            f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION}"
        )
    try:
        part_sizes = tuple(int(x) for x in doc["part_sizes"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphStructureError(f"malformed graph document: {exc}") from exc
    return from_edges(part_sizes, edges)


def dumps_graph(g: MultipartiteGraph) -> str:
    """Canonical serialization: sorted keys, no whitespace, sorted edges."""
    return json.dumps(graph_to_json_dict(g), sort_keys=True, separators=(",", ":"))


def loads_graph(text: str) -> MultipartiteGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphStructureError(f"not valid JSON: {exc}") from exc
    return graph_from_json_dict(doc)


def write_graph(g: MultipartiteGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(g) + "\n", encoding="utf-8")


def read_graph(path: str | Path) -> MultipartiteGraph:
    return loads_graph(Path(path).read_text(encoding="utf-8"))


def to_dimacs(g: MultipartiteGraph) -> str:
    lines = ["c part-sizes " + " ".join(str(s) for s in g.part_sizes)]
    lines.append(f"p edge {g.n_vertices} {g.edge_count()}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> MultipartiteGraph:
    part_sizes: tuple[int, ...] | None = None
    declared: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "c":
            if len(fields) >= 2 and fields[1] == "part-sizes":
                try:
                    part_sizes = tuple(int(x) for x in fields[2:])
                except ValueError as exc:
                    raise GraphStructureError(
                        f"line {lineno}: bad part-sizes comment"
                    ) from exc
        elif tag == "p":
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphStructureError(f"line {lineno}: malformed problem line")
            declared = (int(fields[2]), int(fields[3]))
        elif tag == "e":
            if len(fields) != 3:
                raise GraphStructureError(f"line {lineno}: malformed edge line")
            u, v = int(fields[1]) - 1, int(fields[2]) - 1
            edges.append((u, v) if u < v else (v, u))
        else:
            raise GraphStructureError(f"line {lineno}: unknown record {tag!r}")
    if part_sizes is None:
        raise GraphStructureError(
            "missing 'c part-sizes' comment; the partition cannot be recovered"
        )
    if declared is not None:
        if declared[0] != sum(part_sizes):
            raise GraphStructureError(
                f"problem line declares {declared[0]} vertices, "
                f"part sizes sum to {sum(part_sizes)}"
            )
        if declared[1] != len(edges):
            raise GraphStructureError(
                f"problem line declares {declared[1]} edges, found {len(edges)}"
            )
    return from_edges(part_sizes, edges)
