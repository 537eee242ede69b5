import json

import pytest

from mpturan.constructions import sliced_blowup, turan_blowup
from mpturan.errors import GraphStructureError
from mpturan.graphio import dumps_graph, from_dimacs, loads_graph, to_dimacs


def test_json_round_trip_preserves_graph():
    g = sliced_blowup(2, 10, 3).graph
    doc = dumps_graph(g)
    back = loads_graph(doc)
    assert back.part_sizes == g.part_sizes
    assert list(back.edges()) == list(g.edges())
    assert back.digest() == g.digest()


def test_json_serialization_is_canonical():
    g = turan_blowup(2, 5, 3).graph
    doc = dumps_graph(g)
    assert dumps_graph(loads_graph(doc)) == doc
    parsed = json.loads(doc)
    assert parsed["schema_version"] == 1
    assert parsed["part_sizes"] == [2, 2, 2, 2, 2]
    assert all(u < v for u, v in parsed["edges"])
    assert parsed["edges"] == sorted(parsed["edges"])


def test_dimacs_round_trip():
    g = turan_blowup(1, 6, 3).graph
    text = to_dimacs(g)
    back = from_dimacs(text)
    assert back.part_sizes == g.part_sizes
    assert list(back.edges()) == list(g.edges())
    lines = text.strip().splitlines()
    assert lines[0] == "c part-sizes 1 1 1 1 1 1"
    assert lines[1] == f"p edge 6 {g.edge_count()}"
    assert lines[2].startswith("e ")


def test_dimacs_vertices_are_one_indexed():
    g = turan_blowup(1, 3, 2).graph
    text = to_dimacs(g)
    entries = [line for line in text.splitlines() if line.startswith("e ")]
    endpoints = {int(tok) for line in entries for tok in line.split()[1:]}
    assert min(endpoints) == 1
    assert max(endpoints) == 3


def test_loads_rejects_malformed_documents():
    g = turan_blowup(1, 4, 2).graph
    doc = json.loads(dumps_graph(g))

    bad_version = dict(doc, schema_version=99)
    with pytest.raises(GraphStructureError):
        loads_graph(json.dumps(bad_version))

    missing_parts = {k: v for k, v in doc.items() if k != "part_sizes"}
    with pytest.raises(GraphStructureError):
        loads_graph(json.dumps(missing_parts))

    intra_part = dict(doc, part_sizes=[2, 2], edges=[[0, 1]])
    with pytest.raises(GraphStructureError):
        loads_graph(json.dumps(intra_part))

    with pytest.raises(GraphStructureError):
        loads_graph("not json at all {")

    with pytest.raises(GraphStructureError):
        loads_graph(json.dumps([1, 2, 3]))


def test_from_dimacs_rejects_malformed_documents():
    g = turan_blowup(1, 4, 2).graph
    text = to_dimacs(g)

    no_comment = "\n".join(
        line for line in text.splitlines() if not line.startswith("c part-sizes")
    )
    with pytest.raises(GraphStructureError):
        from_dimacs(no_comment)

    lines = text.splitlines()
    lines[1] = "p edge 4 999"
    with pytest.raises(GraphStructureError):
        from_dimacs("\n".join(lines))

    with pytest.raises(GraphStructureError):
        from_dimacs("c part-sizes 2 2\np edge 4 1\ne 1 2\n")
