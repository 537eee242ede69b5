from collections import Counter

import pytest

from mpturan.bounds import apex_value, composition_bound, sliced_value, turan_sandwich
from mpturan.constructions import (
    apex_blowup,
    block_composition,
    default_inner_graph,
    sliced_blowup,
    turan_blowup,
)
from mpturan.errors import DomainError, NotApplicableError
from mpturan.graphs import complete_multipartite, empty_graph


def test_turan_blowup_balanced_classes():
    out = turan_blowup(2, 5, 3)
    assert out.graph.min_degree() == 6
    assert out.claimed_min_degree == 6
    assert out.source == "turan-blowup"
    assert out.coloring.is_proper(out.graph)
    # 5 = 2 + 2 + 1 parts across the three classes, each part has 2 vertices
    sizes = sorted(Counter(out.coloring.colors).values())
    assert sizes == [2, 4, 4]


def test_turan_blowup_divisible():
    out = turan_blowup(1, 6, 3)
    assert out.graph.min_degree() == 4
    assert out.coloring.num_colors == 3


def test_turan_blowup_bipartite():
    out = turan_blowup(3, 4, 2)
    assert out.graph.min_degree() == 6
    assert out.graph.max_degree() == 6


def test_turan_blowup_matches_sandwich_lower():
    for t in (2, 3, 4):
        for r in range(t + 1, 3 * t + 1):
            for n in (1, 2, 5):
                lo, _ = turan_sandwich(n, r, t)
                assert turan_blowup(n, r, t).graph.min_degree() == lo


def test_sliced_blowup_value_and_classes():
    out = sliced_blowup(10, 10, 3)
    assert out.graph.n_vertices == 100
    assert out.graph.min_degree() == 63
    assert out.claimed_min_degree == sliced_value(10, 10, 3)
    assert out.source == "sliced-blowup"
    assert out.coloring.is_proper(out.graph)
    # slices of size 9 in 4 parts for each of the first two classes,
    # everything else in the last class
    sizes = sorted(Counter(out.coloring.colors).values())
    assert sizes == [28, 36, 36]


def test_sliced_blowup_small():
    assert sliced_blowup(1, 10, 3).graph.min_degree() == 6
    assert sliced_blowup(60, 7, 3).claimed_min_degree == 256


def test_sliced_blowup_delegates_at_a1():
    out = sliced_blowup(2, 5, 3)  # a = 1: slicing degenerates to the blow-up
    assert out.source == "turan-blowup"
    assert out.graph.min_degree() == 6


def test_apex_blowup():
    out = apex_blowup(6, 7, 5)
    assert out.graph.min_degree() == 31
    assert out.claimed_min_degree == apex_value(6, 7, 5)
    assert out.source == "apex-blowup"
    assert out.coloring.is_proper(out.graph)
    assert out.coloring.num_colors == 5
    assert apex_blowup(1, 7, 5).graph.min_degree() == 5


def test_apex_blowup_out_of_range():
    with pytest.raises(NotApplicableError):
        apex_blowup(6, 10, 3)


def test_block_composition_small():
    inner = default_inner_graph(2, 2, 1)
    out = block_composition(4, inner, 2, 1, 2)
    g = out.graph
    assert g.n_parts == 4
    assert g.part_sizes == (4, 4, 4, 4)
    assert g.max_degree() == 3
    assert out.claimed_max_degree == 3
    assert composition_bound(4, 2, 2, 2, 1) == 3
    assert out.source == "block-composition"


def test_block_composition_larger_part():
    inner = default_inner_graph(2, 2, 1)
    out = block_composition(6, inner, 2, 1, 2)
    assert out.graph.max_degree() == 5
    assert out.claimed_max_degree <= composition_bound(6, 2, 2, 2, 1)


def test_block_composition_three_blocks():
    inner = default_inner_graph(2, 2, 1)
    out = block_composition(6, inner, 2, 1, 3)
    assert out.graph.n_parts == 6
    assert out.graph.max_degree() <= composition_bound(6, 2, 2, 3, 1)


def test_block_composition_rejects_empty_slice():
    with pytest.raises(DomainError):
        block_composition(4, default_inner_graph(2, 2, 1), 2, 1, 3)


def test_block_composition_rejects_bad_inner():
    # wrong part size: the slice width for these parameters is 1, not 2
    with pytest.raises(DomainError):
        block_composition(4, complete_multipartite([2, 2]), 2, 1, 2)
    # max degree above the declared density
    with pytest.raises(DomainError):
        block_composition(4, complete_multipartite([1, 1]), 2, 0, 2)
    # crossing independent pair inside the inner graph
    with pytest.raises(DomainError):
        block_composition(4, empty_graph([1, 1]), 2, 1, 2)


def test_default_inner_graph_families():
    g = default_inner_graph(2, 2, 3)
    assert g == complete_multipartite([3, 3])
    h = default_inner_graph(3, 3, 2)
    assert h.n_parts == 3
    assert h.max_degree() == 2  # (ceil(3/2) - 1) * part size


def test_constructions_deterministic():
    for build in (
        lambda: turan_blowup(3, 7, 3).graph,
        lambda: sliced_blowup(4, 10, 3).graph,
        lambda: apex_blowup(2, 7, 5).graph,
        lambda: block_composition(4, default_inner_graph(2, 2, 1), 2, 1, 2).graph,
    ):
        a, b = build(), build()
        assert a == b
        assert a.digest() == b.digest()
