"""Multipartite graphs over dense bitset adjacency.

Vertex ids are part-major: part ``i`` occupies the contiguous range
``offsets[i] .. offsets[i] + part_sizes[i] - 1``, so a single table lookup
translates between a vertex and its part. Adjacency rows are plain Python
integers used as bitsets, which keeps neighborhood intersection, degree
counting and complementation word-parallel in the search kernels.

Parts are independent sets by construction. Every mutation path (the
builder as well as the functional ``with_edge``) rejects intra-part pairs,
so any graph handed out by this module satisfies the multipartite
invariant. Graphs are immutable once built.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphStructureError

__all__ = [
    "MultipartiteGraph",
    "GraphBuilder",
    "ColorPartition",
    "CrossingSet",
    "empty_graph",
    "complete_multipartite",
    "from_edges",
]


def _normalized_part_sizes(part_sizes: Iterable[int]) -> tuple[int, ...]:
    sizes = tuple(int(s) for s in part_sizes)
    if not sizes:
        raise GraphStructureError("need at least one part")
    for s in sizes:
        if s < 1:
            raise GraphStructureError(f"part sizes must be >= 1, got {sizes}")
    return sizes


class MultipartiteGraph:
    """Immutable graph on labeled parts; edges join distinct parts only."""

    __slots__ = ("part_sizes", "offsets", "part_of", "part_masks", "full_mask", "rows")

    def __init__(
        self,
        part_sizes: Iterable[int],
        rows: Iterable[int],
        *,
        validate: bool = True,
    ) -> None:
        self.part_sizes = _normalized_part_sizes(part_sizes)
        offsets = [0]
        for s in self.part_sizes:
            offsets.append(offsets[-1] + s)
        self.offsets = tuple(offsets)
        part_of: list[int] = []
        for i, s in enumerate(self.part_sizes):
            part_of.extend([i] * s)
        self.part_of = tuple(part_of)
        self.part_masks = tuple(
            ((1 << s) - 1) << self.offsets[i] for i, s in enumerate(self.part_sizes)
        )
        n = self.offsets[-1]
        self.full_mask = (1 << n) - 1
        self.rows = tuple(rows)
        if len(self.rows) != n:
            raise GraphStructureError(f"expected {n} adjacency rows, got {len(self.rows)}")
        if validate:
            self._validate()

    def _validate(self) -> None:
        rows = self.rows
        for v, row in enumerate(rows):
            if row & ~self.full_mask:
                raise GraphStructureError(f"row {v} references vertices out of range")
            if row & self.part_masks[self.part_of[v]]:
                raise GraphStructureError(
                    f"vertex {v} has a neighbor inside its own part {self.part_of[v]}"
                )
            m = row
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if not (rows[u] >> v) & 1:
                    raise GraphStructureError(f"adjacency is asymmetric on pair ({v}, {u})")

    # -- basic views ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.offsets[-1]

    @property
    def n_parts(self) -> int:
        return len(self.part_sizes)

    @property
    def is_balanced(self) -> bool:
        return len(set(self.part_sizes)) == 1

    def part_range(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i + 1])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.rows)

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending lexicographic order."""
        for u, row in enumerate(self.rows):
            m = row >> (u + 1)
            while m:
                b = m & -m
                yield (u, u + 1 + b.bit_length() - 1)
                m ^= b

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    # -- derived graphs ------------------------------------------------

    def with_edge(self, u: int, v: int) -> "MultipartiteGraph":
        """Return a copy with edge (u, v) added; the call is idempotent."""
        self._check_cross_pair(u, v)
        if (self.rows[u] >> v) & 1:
            return self
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return MultipartiteGraph(self.part_sizes, rows, validate=False)

    def cross_complement(self) -> "MultipartiteGraph":
        """Flip every cross-part pair; intra-part pairs stay non-edges.

        An involution. Cliques of the result are exactly the crossing
        independent sets of the original, and for balanced parts of size n
        the degrees satisfy deg(v) + deg'(v) = (r - 1) * n.
        """
        full = self.full_mask
        rows = [
            (full & ~row) & ~self.part_masks[self.part_of[v]]
            for v, row in enumerate(self.rows)
        ]
        return MultipartiteGraph(self.part_sizes, rows, validate=False)

    # -- identity ------------------------------------------------------

    def digest(self) -> str:
        """Content hash of the part structure plus the sorted edge list."""
        h = hashlib.sha256()
        h.update(repr(self.part_sizes).encode())
        h.update(b"|")
        h.update(repr(list(self.edges())).encode())
        return "sha256:" + h.hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultipartiteGraph):
            return NotImplemented
        return self.part_sizes == other.part_sizes and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.part_sizes, self.rows))

    def __repr__(self) -> str:
        return (
            f"MultipartiteGraph(parts={list(self.part_sizes)}, "
            f"edges={self.edge_count()})"
        )

    # -- validation helpers ---------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise GraphStructureError(f"vertex id {v} out of range [0, {self.n_vertices})")

    def _check_cross_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphStructureError(f"self-loop at vertex {u}")
        if self.part_of[u] == self.part_of[v]:
            raise GraphStructureError(
                f"vertices {u} and {v} are both in part {self.part_of[u]}"
            )


class GraphBuilder:
    """Mutable edge accumulator; ``finalize`` hands out the immutable graph."""

    def __init__(self, part_sizes: Iterable[int]) -> None:
        self._skeleton = empty_graph(part_sizes)
        self._rows = [0] * self._skeleton.n_vertices

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        self._skeleton._check_cross_pair(u, v)
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "GraphBuilder":
        for u, v in pairs:
            self.add_edge(u, v)
        return self

    def finalize(self) -> MultipartiteGraph:
        return MultipartiteGraph(
            self._skeleton.part_sizes, self._rows, validate=False
        )


def empty_graph(part_sizes: Iterable[int]) -> MultipartiteGraph:
    """Edgeless graph on the given parts."""
    sizes = _normalized_part_sizes(part_sizes)
    return MultipartiteGraph(sizes, [0] * sum(sizes), validate=False)


def complete_multipartite(part_sizes: Iterable[int]) -> MultipartiteGraph:
    """Complete multipartite graph: every cross-part pair is an edge."""
    g = empty_graph(part_sizes)
    rows = [
        g.full_mask & ~g.part_masks[g.part_of[v]] for v in range(g.n_vertices)
    ]
    return MultipartiteGraph(g.part_sizes, rows, validate=False)


def from_edges(
    part_sizes: Iterable[int], edges: Iterable[tuple[int, int]]
) -> MultipartiteGraph:
    return GraphBuilder(part_sizes).add_edges(edges).finalize()


@dataclass(frozen=True)
class ColorPartition:
    """Vertex coloring with 0-based colors; classes may be empty."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.num_colors < 1:
            raise GraphStructureError("a coloring needs at least one color")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.num_colors:
                raise GraphStructureError(
                    f"vertex {v} has color {c}, outside [0, {self.num_colors})"
                )

    def class_masks(self) -> list[int]:
        masks = [0] * self.num_colors
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def is_proper(self, graph: MultipartiteGraph) -> bool:
        """True when every color class is an independent set of ``graph``."""
        if len(self.colors) != graph.n_vertices:
            return False
        masks = self.class_masks()
        return all(
            graph.rows[v] & masks[c] == 0 for v, c in enumerate(self.colors)
        )


@dataclass(frozen=True)
class CrossingSet:
    """Vertex set intended to hold at most one vertex per part."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    def is_crossing_in(self, graph: MultipartiteGraph) -> bool:
        parts = [graph.part_of[v] for v in self.vertices]
        return len(parts) == len(set(parts))

    def is_independent_in(self, graph: MultipartiteGraph) -> bool:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return all(graph.rows[v] & mask == 0 for v in self.vertices)
