import json
import random

import pytest

from mpturan.constructions import (
    apex_blowup,
    block_composition,
    default_inner_graph,
    sliced_blowup,
    turan_blowup,
)
from mpturan.errors import DomainError, UnknownClaimError
from mpturan.graphs import complete_multipartite, empty_graph, from_edges
from mpturan.verifier import (
    CONFIRMED,
    REFUTED,
    VACUOUS,
    aes_check,
    certify,
    find_clique,
    find_coloring,
    find_crossing_independent,
    max_clique,
    max_clique_size,
    max_crossing_independent,
    max_crossing_independent_size,
)


def _is_clique(g, vs):
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def test_max_clique_on_blowup():
    g = turan_blowup(2, 5, 3).graph
    size, witness = max_clique(g)
    assert size == 3
    assert _is_clique(g, witness)


def test_max_clique_edgeless():
    assert max_clique_size(empty_graph([3, 3])) == 1


def test_max_clique_complete():
    assert max_clique_size(complete_multipartite([2, 2, 2, 2])) == 4


def test_max_clique_apex():
    # one apex color above a 4-chromatic core: clique number exactly 5
    g = apex_blowup(6, 7, 5).graph
    assert max_clique_size(g) == 5
    assert find_clique(g, 6) is None


def test_find_clique_bounds():
    g = complete_multipartite([1] * 5)
    w = find_clique(g, 5)
    assert w is not None and len(w) == 5
    assert find_clique(g, 6) is None
    with pytest.raises(DomainError):
        find_clique(g, 0)


def test_crossing_independent_extremes():
    assert max_crossing_independent_size(complete_multipartite([2, 2, 2])) == 1
    size, witness = max_crossing_independent(empty_graph([2, 2, 2]))
    assert size == 3
    assert len({v // 2 for v in witness}) == 3


def test_crossing_independent_is_crossing():
    # two vertices of one part never count, however nonadjacent they are
    g = from_edges([2, 2], [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert max_crossing_independent_size(g) == 1


def test_composition_has_no_large_crossing_independent_set():
    out = block_composition(4, default_inner_graph(2, 2, 1), 2, 1, 2)
    assert find_crossing_independent(out.graph, 4) is None
    assert max_crossing_independent_size(out.graph) == 3


def test_find_coloring_blowup():
    g = sliced_blowup(10, 10, 3).graph
    coloring = find_coloring(g, 3)
    assert coloring is not None
    assert coloring.is_proper(g)


def test_find_coloring_odd_cycle():
    cycle = from_edges([1] * 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert find_coloring(cycle, 2) is None
    three = find_coloring(cycle, 3)
    assert three is not None and three.is_proper(cycle)


def test_find_coloring_complete():
    g = complete_multipartite([1] * 4)
    assert find_coloring(g, 3) is None
    four = find_coloring(g, 4)
    assert four is not None and four.is_proper(g)


def test_aes_confirmed():
    assert aes_check(turan_blowup(3, 6, 3).graph, 3) == CONFIRMED


def test_aes_vacuous_low_degree():
    # min degree 12 is below the 13.125 threshold on 21 vertices
    assert aes_check(turan_blowup(3, 7, 3).graph, 3) == VACUOUS


def test_aes_vacuous_clique():
    assert aes_check(complete_multipartite([1] * 4), 3) == VACUOUS


def test_aes_statuses_distinct():
    assert len({VACUOUS, CONFIRMED, REFUTED}) == 3


def test_certify_complete_graph():
    g = complete_multipartite([1] * 5)
    cert = certify(
        g,
        [
            ("kfree", 5),
            ("min_degree", 4),
            ("max_degree", 4),
            ("colorable", 5),
            ("no_crossing_independent", 2),
        ],
    )
    verdicts = {p.kind: p for p in cert.properties}
    assert not verdicts["kfree"].verdict
    assert len(verdicts["kfree"].witness) == 5  # the offending clique
    assert verdicts["min_degree"].verdict
    assert verdicts["max_degree"].verdict
    assert verdicts["colorable"].verdict
    assert verdicts["no_crossing_independent"].verdict
    assert not cert.all_true
    assert cert.graph_digest == g.digest()


def test_certify_construction_with_supplied_coloring():
    out = sliced_blowup(10, 10, 3)
    cert = certify(
        out.graph,
        [("kfree", 4), ("min_degree", 63), ("colorable", 3)],
        witnesses={"colorable": out.coloring},
    )
    assert cert.all_true


def test_certify_rejects_wrong_supplied_coloring():
    g = complete_multipartite([1, 1])
    from mpturan.graphs import ColorPartition

    bad = ColorPartition((0, 0), 2)  # both endpoints of an edge
    cert = certify(g, [("colorable", 2)], witnesses={"colorable": bad})
    assert not cert.all_true


def test_certify_unknown_claim():
    with pytest.raises(UnknownClaimError):
        certify(empty_graph([1, 1]), [("girth", 3)])


def test_certificate_json_round_trip():
    cert = certify(complete_multipartite([2, 2]), {"kfree": 3, "min_degree": 2})
    doc = json.loads(cert.to_json())
    assert doc["all_true"] is True
    assert doc["graph_digest"].startswith("sha256:")
    assert len(doc["properties"]) == 2


def test_clique_crossing_duality_random():
    rng = random.Random(7)
    for _ in range(25):
        sizes = rng.choice([[2, 2, 2], [3, 2], [1, 1, 1, 1], [2, 1, 2]])
        pairs = [
            (u, v)
            for u in range(sum(sizes))
            for v in range(u + 1, sum(sizes))
        ]
        g = empty_graph(sizes)
        for u, v in pairs:
            if g.part_of[u] != g.part_of[v] and rng.random() < 0.5:
                g = g.with_edge(u, v)
        comp = g.cross_complement()
        assert max_clique_size(g) == max_crossing_independent_size(comp)
        assert max_crossing_independent_size(g) == max_clique_size(comp)
