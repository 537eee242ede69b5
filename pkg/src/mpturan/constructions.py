"""Deterministic builders for the extremal graphs behind the lower bounds.

Three of the four constructions share one shape: fix a color partition of
the vertex set of the complete multipartite graph K_r(n) and keep exactly
the pairs that cross both the part structure and the color structure. The
color partition is what varies:

* balanced blow-up: colors are unions of whole parts, as equal as possible;
* sliced blow-up: the first t - 1 colors each take a fixed slice of every
  part in their block of m consecutive parts, the last color takes what
  remains;
* apex blow-up: a sliced blow-up on fewer parts joined to extra colors
  that are complete to everything outside themselves.

The block composition is different in kind: it targets the complementary
quantity (small maximum degree, no crossing independent set) and stitches
copies of a caller-supplied inner graph into blocks.

Every builder measures the parameters of the graph it just built and
refuses to return if they disagree with the claimed formula; identical
inputs produce identical edge sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    apex_value,
    ceil_div,
    composition_bound,
    decompose,
    sliced_value,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    NotApplicableError,
)
from .graphs import ColorPartition, MultipartiteGraph, complete_multipartite, empty_graph

__all__ = [
    "ConstructionOutput",
    "turan_blowup",
    "sliced_blowup",
    "apex_blowup",
    "block_composition",
    "default_inner_graph",
]


@dataclass(frozen=True)
class ConstructionOutput:
    """A built graph plus the properties it was built to have.

    ``coloring`` is the witness partition for the chromatic constructions
    and None for the block composition. Claimed values always equal the
    measured values; the builders check this before returning.
    """

    graph: MultipartiteGraph
    coloring: ColorPartition | None
    claimed_min_degree: int
    claimed_max_degree: int | None
    source: str


def _overlay_graph(
    part_sizes: list[int], colors: list[int], num_colors: int
) -> tuple[MultipartiteGraph, ColorPartition]:
    """Graph with an edge exactly where both part and color differ."""
    skeleton = empty_graph(part_sizes)
    coloring = ColorPartition(tuple(colors), num_colors)
    class_masks = coloring.class_masks()
    rows = [
        skeleton.full_mask
        & ~skeleton.part_masks[skeleton.part_of[v]]
        & ~class_masks[colors[v]]
        for v in range(skeleton.n_vertices)
    ]
    return MultipartiteGraph(part_sizes, rows, validate=False), coloring


def _checked(
    graph: MultipartiteGraph,
    coloring: ColorPartition | None,
    expected_min_degree: int,
    source: str,
    max_degree: int | None = None,
) -> ConstructionOutput:
    measured = graph.min_degree()
    if measured != expected_min_degree:
        raise InternalConsistencyError(
            f"{source}: built graph has minimum degree {measured}, "
            f"formula says {expected_min_degree}"
        )
    if coloring is not None and not coloring.is_proper(graph):
        raise InternalConsistencyError(f"{source}: witness coloring is not proper")
    return ConstructionOutput(
        graph=graph,
        coloring=coloring,
        claimed_min_degree=expected_min_degree,
        claimed_max_degree=max_degree,
        source=source,
    )


def turan_blowup(n: int, r: int, t: int) -> ConstructionOutput:
    """Blow-up of the balanced t-partition of r parts, the baseline graph.

    Colors are unions of whole parts with sizes ceil(r/t) * n or
    floor(r/t) * n. The graph is t-chromatic, has no clique on t + 1
    vertices, and its minimum degree is (r - ceil(r/t)) * n.
    """
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    if not 2 <= t <= r:
        raise DomainError(f"need 2 <= t <= r, got t={t}, r={r}")
    base, extra = divmod(r, t)
    part_color: list[int] = []
    for c in range(t):
        part_color.extend([c] * (base + 1 if c < extra else base))
    colors = [part_color[p] for p in range(r) for _ in range(n)]
    graph, coloring = _overlay_graph([n] * r, colors, t)
    return _checked(graph, coloring, (r - ceil_div(r, t)) * n, "turan-blowup")


def sliced_blowup(n: int, r: int, t: int) -> ConstructionOutput:
    """Blow-up whose first t - 1 colors cut across the parts of their block.

    With (m, a) = decompose(r, t) and 1 <= a <= m, set
    l = ceil((r - 1) * n / (m * t - 2)). Color i < t - 1 takes the first l
    vertices of each part in block i (parts i*m .. (i+1)*m - 1); the last
    color takes everything else. Minimum degree:
    (r - 1) * n - (m - 1) * l. At a = 1 the slices fill their parts and
    the balanced blow-up achieves the same value, so that case delegates.
    """
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    m, a = decompose(r, t)
    if not 1 <= a <= m:
        raise NotApplicableError(
            f"sliced blow-up needs m*(t-1) <= r <= m*t - 1, got r={r}, t={t}"
        )
    if a == 1:
        return turan_blowup(n, r, t)
    slice_size = ceil_div((r - 1) * n, m * t - 2)
    colors = [t - 1] * (r * n)
    for block in range(t - 1):
        for p in range(block * m, (block + 1) * m):
            start = p * n
            for v in range(start, start + slice_size):
                colors[v] = block
    graph, coloring = _overlay_graph([n] * r, colors, t)
    return _checked(graph, coloring, sliced_value(n, r, t), "sliced-blowup")


def apex_blowup(n: int, r: int, t: int) -> ConstructionOutput:
    """Sliced blow-up on fewer parts joined to a - m apex colors.

    Covers 2 <= m < a < t. Writing t' = t - a + m and r' = m * (t' - 1),
    the core is the sliced blow-up on r' parts with t' colors; each of the
    a - m apex colors occupies m - 1 fresh parts of size n (consecutive
    runs) and is complete to everything outside itself. The part count
    works out to exactly r and the chromatic number stays at most t.
    """
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    m, a = decompose(r, t)
    if not 2 <= m < a < t:
        raise NotApplicableError(
            f"apex blow-up needs 2 <= m < a < t, got m={m}, a={a}, t={t}"
        )
    t2 = t - a + m
    r2 = m * (t2 - 1)
    core = sliced_blowup(n, r2, t2)
    assert core.coloring is not None
    colors = list(core.coloring.colors)
    for apex in range(a - m):
        colors.extend([t2 + apex] * ((m - 1) * n))
    graph, coloring = _overlay_graph([n] * r, colors, t)
    return _checked(graph, coloring, apex_value(n, r, t), "apex-blowup")


def default_inner_graph(r0: int, t0: int, part_size: int) -> MultipartiteGraph:
    """Stock inner graph for the block composition.

    The cross-complement of the balanced blow-up with t0 - 1 colors: it is
    r0-partite with the requested part size, has no crossing independent
    set of size t0, and max degree (ceil(r0 / (t0 - 1)) - 1) * part_size.
    For t0 = 2 this is simply the complete multipartite graph.
    """
    if part_size < 1:
        raise DomainError(f"part size must be >= 1, got {part_size}")
    if not 2 <= t0 <= r0:
        raise DomainError(f"need 2 <= t0 <= r0, got t0={t0}, r0={r0}")
    if t0 == 2:
        return complete_multipartite([part_size] * r0)
    return turan_blowup(part_size, r0, t0 - 1).graph.cross_complement()


def block_composition(
    n: int,
    inner: MultipartiteGraph,
    t0: int,
    delta0: Fraction | int,
    k: int,
) -> ConstructionOutput:
    """Compose k blocks of an inner graph into a low-max-degree graph.

    The inner graph must be r0-partite with equal parts of size
    l = floor((r0 - 1) * n / (delta0 + k * r0 - 1)), max degree at most
    delta0 * l, and no crossing independent set of size t0; all three are
    checked before anything is built. The result has r0 * k parts of size
    n with no crossing independent set of size k + t0 and max degree
    max((k - 1) * r0 * l + max_degree(inner), (r0 - 1) * (n - l)), which
    the choice of l keeps within ``composition_bound``.

    Layout: parts i and j share a block iff i // r0 == j // r0. The first
    l vertices of each part form its small side; small sides of the same
    block carry a copy of the inner graph, small sides of different blocks
    are completely joined, and large sides are completely joined within a
    block. No other edges exist.
    """
    delta0 = Fraction(delta0)
    r0 = inner.n_parts
    bound = composition_bound(n, r0, t0, k, delta0)  # validates n, t0, r0, k, delta0
    slice_size = math.floor(Fraction((r0 - 1) * n) / (delta0 + k * r0 - 1))
    if slice_size < 1:
        raise DomainError(
            f"degenerate composition: slice size floor((r0-1)n / (delta0 + k*r0 - 1)) "
            f"is {slice_size} for n={n}, r0={r0}, k={k}, delta0={delta0}"
        )
    if set(inner.part_sizes) != {slice_size}:
        raise DomainError(
            f"inner graph parts must all have size {slice_size}, "
            f"got {list(inner.part_sizes)}"
        )
    if Fraction(inner.max_degree()) > delta0 * slice_size:
        raise DomainError(
            f"inner graph max degree {inner.max_degree()} exceeds "
            f"delta0 * l = {delta0 * slice_size}"
        )
    from .verifier import find_crossing_independent  # local import avoids a cycle

    bad = find_crossing_independent(inner, t0)
    if bad is not None:
        raise DomainError(
            f"inner graph admits a crossing independent set of size {t0}: {list(bad)}"
        )

    r = r0 * k
    skeleton = empty_graph([n] * r)
    small_masks = [((1 << slice_size) - 1) << (p * n) for p in range(r)]
    large_masks = [skeleton.part_masks[p] & ~small_masks[p] for p in range(r)]
    block_small = [0] * k
    block_large = [0] * k
    for p in range(r):
        block_small[p // r0] |= small_masks[p]
        block_large[p // r0] |= large_masks[p]
    all_small = 0
    for mask in block_small:
        all_small |= mask

    rows = [0] * (r * n)
    for p in range(r):
        b = p // r0
        start = p * n
        for v in range(start, start + slice_size):
            rows[v] = all_small & ~block_small[b]
        for v in range(start + slice_size, start + n):
            rows[v] = block_large[b] & ~large_masks[p]
    for b in range(k):
        for iu, iv in inner.edges():
            u = (b * r0 + iu // slice_size) * n + iu % slice_size
            v = (b * r0 + iv // slice_size) * n + iv % slice_size
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    graph = MultipartiteGraph([n] * r, rows, validate=False)

    measured_max = graph.max_degree()
    expected_max = max(
        (k - 1) * r0 * slice_size + inner.max_degree(),
        (r0 - 1) * (n - slice_size),
    )
    if measured_max != expected_max or measured_max > bound:
        raise InternalConsistencyError(
            f"block-composition: max degree {measured_max}, expected "
            f"{expected_max} within bound {bound}"
        )
    return ConstructionOutput(
        graph=graph,
        coloring=None,
        claimed_min_degree=graph.min_degree(),
        claimed_max_degree=measured_max,
        source="block-composition",
    )
