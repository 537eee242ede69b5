"""Brute-force ground truth on tiny instances.

Two independent exhaustive searches over all r-partite graphs with parts
of size n, driven by a DFS over the cross pairs in part-major order:

* ``oracle_f``: the largest minimum degree among graphs with no clique
  on q vertices.
* ``oracle_delta``: the smallest maximum degree among graphs in which
  every crossing set of s vertices (one per part, at most) spans an edge.

The two are exchanged by the cross complement, which ``duality_audit``
exploits as an end-to-end consistency check: the values must mirror each
other and each witness must certify the other side's property after
complementation.

Both searches are exact but exponential, so instances are capped at a
small vertex count by default; the cap is a safety rail, not a
correctness bound, and callers may raise it explicitly.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, InternalConsistencyError, SizeCapError
from .graphs import MultipartiteGraph
from .verifier import find_clique, find_crossing_independent

__all__ = [
    "MODE_F",
    "MODE_DELTA",
    "DEFAULT_CAP",
    "OracleResult",
    "oracle_f",
    "oracle_delta",
    "duality_audit",
]

MODE_F = "f"
MODE_DELTA = "delta"

DEFAULT_CAP = 10


@dataclass(frozen=True)
class OracleResult:
    """Exhaustively computed extremal value with an optimal witness."""

    mode: str
    n: int
    r: int
    size: int
    value: int
    witness: MultipartiteGraph

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "r": self.r,
            "size": self.size,
            "value": self.value,
        }


def _cross_pairs(n: int, r: int, seed: int | None) -> list[tuple[int, int]]:
    pairs = [
        (u, v)
        for u in range(r * n)
        for v in range(u + 1, r * n)
        if u // n != v // n
    ]
    if seed is not None:
        random.Random(seed).shuffle(pairs)
    return pairs


def _mask_has_clique(rows: list[int], mask: int, k: int) -> bool:
    """True when the vertices of ``mask`` contain a clique on k vertices."""
    if k <= 0:
        return True
    if mask.bit_count() < k:
        return False
    m = mask
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        if _mask_has_clique(rows, m & rows[v], k - 1):
            return True
    return False


def _position_perms(
    n: int, r: int, pairs: list[tuple[int, int]]
) -> tuple[tuple[int, ...], ...]:
    """Pair-index permutations induced by adjacent part and vertex swaps.

    Each generator is an involution on vertices that preserves the
    partition shape, so it permutes the cross pairs among themselves.
    """
    total = r * n
    index_of = {p: i for i, p in enumerate(pairs)}
    vertex_perms: list[list[int]] = []
    for j in range(r - 1):
        perm = list(range(total))
        for i in range(n):
            perm[j * n + i], perm[(j + 1) * n + i] = (
                perm[(j + 1) * n + i],
                perm[j * n + i],
            )
        vertex_perms.append(perm)
    for j in range(r):
        for i in range(n - 1):
            perm = list(range(total))
            u, w = j * n + i, j * n + i + 1
            perm[u], perm[w] = perm[w], perm[u]
            vertex_perms.append(perm)
    gens: list[tuple[int, ...]] = []
    for perm in vertex_perms:
        image = []
        for u, v in pairs:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            image.append(index_of[(a, b)])
        gens.append(tuple(image))
    return tuple(gens)


def _lex_pruned(a: list[int], gens: tuple[tuple[int, ...], ...]) -> bool:
    """Prune when the decided prefix proves the assignment is not the
    lexicographically greatest member of its orbit.

    For each generator the comparison walks positions in order and stops
    at the first undecided image, so it only ever prunes on proof.
    """
    d = len(a)
    for pi in gens:
        for p in range(d):
            q = pi[p]
            if q >= d:
                break
            if a[p] != a[q]:
                if a[p] < a[q]:
                    return True
                break
    return False


def _decide(
    mode: str,
    n: int,
    r: int,
    size: int,
    bound: int,
    pairs: list[tuple[int, int]],
    prefix: tuple[int, ...],
    symmetry: bool,
) -> list[int] | None:
    """Decision search: adjacency rows of a feasible graph, or None.

    Mode ``f`` asks for a graph with no clique on ``size`` vertices and
    minimum degree at least ``bound``; mode ``delta`` for a graph with no
    crossing independent set of ``size`` vertices and maximum degree at
    most ``bound``. Pairs are decided strictly in list order, include
    branch first.
    """
    total = r * n
    npairs = len(pairs)
    part_sizes = (n,) * r
    rows = [0] * total
    deg = [0] * total
    # pot[v] = degree v would reach if every still-undecided pair at v
    # were included; once it dips below the target the branch is dead
    pot = [(r - 1) * n] * total
    a: list[int] = []
    gens = _position_perms(n, r, pairs) if symmetry else ()

    def graph_of(rs: list[int]) -> MultipartiteGraph:
        return MultipartiteGraph(part_sizes, tuple(rs), validate=False)

    def completion_rows() -> list[int]:
        comp = rows[:]
        for k in range(len(a), npairs):
            u, v = pairs[k]
            comp[u] |= 1 << v
            comp[v] |= 1 << u
        return comp

    def include_ok(k: int) -> bool:
        u, v = pairs[k]
        if mode == MODE_F:
            return not _mask_has_clique(rows, rows[u] & rows[v], size - 2)
        return deg[u] < bound and deg[v] < bound

    def exclude_ok(k: int) -> bool:
        if mode == MODE_F:
            u, v = pairs[k]
            return pot[u] - 1 >= bound and pot[v] - 1 >= bound
        return True

    def push(k: int, val: int) -> None:
        u, v = pairs[k]
        if val:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
        else:
            pot[u] -= 1
            pot[v] -= 1
        a.append(val)

    def pop(k: int) -> None:
        val = a.pop()
        u, v = pairs[k]
        if val:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        else:
            pot[u] += 1
            pot[v] += 1

    def success_now() -> list[int] | None:
        if mode == MODE_F:
            # include everything still open: degrees land on pot, which
            # the exclude guard keeps at or above the target
            comp = completion_rows()
            if find_clique(graph_of(comp), size) is None:
                return comp
            return None
        # excluding everything still open keeps the graph as it stands
        if find_crossing_independent(graph_of(rows), size) is None:
            return rows[:]
        return None

    def rec(k: int) -> list[int] | None:
        if symmetry and _lex_pruned(a, gens):
            return None
        found = success_now()
        if found is not None:
            return found
        if k == npairs:
            return None
        if mode == MODE_DELTA:
            # even including every remaining pair leaves an independent
            # crossing set, and more edges only help, so give up here
            comp = completion_rows()
            if find_crossing_independent(graph_of(comp), size) is not None:
                return None
        if include_ok(k):
            push(k, 1)
            found = rec(k + 1)
            pop(k)
            if found is not None:
                return found
        if exclude_ok(k):
            push(k, 0)
            found = rec(k + 1)
            pop(k)
            if found is not None:
                return found
        return None

    for k, val in enumerate(prefix):
        if val and not include_ok(k):
            return None
        if not val and not exclude_ok(k):
            return None
        push(k, val)
    return rec(len(prefix))


def _decision_task(args: tuple) -> list[int] | None:
    mode, n, r, size, bound, pairs, prefix, symmetry = args
    return _decide(mode, n, r, size, bound, pairs, prefix, symmetry)


def _search(
    mode: str,
    n: int,
    r: int,
    size: int,
    bound: int,
    pairs: list[tuple[int, int]],
    jobs: int | None,
    symmetry: bool,
) -> list[int] | None:
    """Run one decision, fanning out over the first two pairs if asked.

    The four depth-2 prefixes are submitted in the serial DFS order and
    the first success in that fixed order wins, so the parallel path is
    deterministic and agrees with the serial one on the decision.
    """
    if jobs is not None and jobs > 1 and len(pairs) >= 2:
        tasks = [
            (mode, n, r, size, bound, pairs, prefix, symmetry)
            for prefix in ((1, 1), (1, 0), (0, 1), (0, 0))
        ]
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            futures = [pool.submit(_decision_task, t) for t in tasks]
            for i, fut in enumerate(futures):
                rows = fut.result()
                if rows is not None:
                    for later in futures[i + 1 :]:
                        later.cancel()
                    return rows
        return None
    return _decide(mode, n, r, size, bound, pairs, (), symmetry)


def _validate_common(n: int, r: int, size: int, cap: int) -> None:
    if n < 1:
        raise DomainError(f"part size must be >= 1, got n={n}")
    if r < 2:
        raise DomainError(f"need at least two parts, got r={r}")
    if size < 2:
        raise DomainError(f"forbidden structure needs >= 2 vertices, got {size}")
    if r * n > cap:
        raise SizeCapError(
            f"instance has {r * n} vertices but the exhaustive search is "
            f"capped at {cap}; pass a larger cap to override"
        )


def oracle_f(
    n: int,
    r: int,
    q: int,
    *,
    cap: int = DEFAULT_CAP,
    jobs: int | None = None,
    symmetry_reduction: bool = False,
    seed: int | None = None,
) -> OracleResult:
    """Largest minimum degree of a K_q-free r-partite graph, parts of size n.

    Binary search on the degree target over exhaustive decisions. The
    returned witness attains the value exactly.
    """
    _validate_common(n, r, q, cap)
    pairs = _cross_pairs(n, r, seed)
    hi = (r - 1) * n

    def decide(bound: int) -> list[int] | None:
        return _search(MODE_F, n, r, q, bound, pairs, jobs, symmetry_reduction)

    lo, best = 0, None
    high = hi
    while lo < high:
        mid = (lo + high + 1) // 2
        rows = decide(mid)
        if rows is not None:
            lo, best = mid, rows
        else:
            high = mid - 1
    if best is None:
        best = decide(lo)
    if best is None:
        raise InternalConsistencyError("decision failed at the trivial target")
    witness = MultipartiteGraph((n,) * r, tuple(best))
    if witness.min_degree() != lo:
        raise InternalConsistencyError(
            f"witness minimum degree {witness.min_degree()} != value {lo}"
        )
    return OracleResult(MODE_F, n, r, q, lo, witness)


def oracle_delta(
    n: int,
    r: int,
    s: int,
    *,
    cap: int = DEFAULT_CAP,
    jobs: int | None = None,
    symmetry_reduction: bool = False,
    seed: int | None = None,
) -> OracleResult:
    """Smallest maximum degree of an r-partite graph, parts of size n, in
    which no s vertices from s distinct parts are pairwise non-adjacent."""
    _validate_common(n, r, s, cap)
    pairs = _cross_pairs(n, r, seed)
    hi = (r - 1) * n

    def decide(bound: int) -> list[int] | None:
        return _search(MODE_DELTA, n, r, s, bound, pairs, jobs, symmetry_reduction)

    lo, best = 0, None
    high = hi
    while lo < high:
        mid = (lo + high) // 2
        rows = decide(mid)
        if rows is not None:
            high, best = mid, rows
        else:
            lo = mid + 1
    if best is None:
        best = decide(lo)
    if best is None:
        raise InternalConsistencyError("decision failed at the trivial target")
    witness = MultipartiteGraph((n,) * r, tuple(best))
    if witness.max_degree() != lo:
        raise InternalConsistencyError(
            f"witness maximum degree {witness.max_degree()} != value {lo}"
        )
    return OracleResult(MODE_DELTA, n, r, s, lo, witness)


def duality_audit(
    n: int,
    r: int,
    s: int,
    *,
    cap: int = DEFAULT_CAP,
    jobs: int | None = None,
    symmetry_reduction: bool = False,
    seed: int | None = None,
) -> dict:
    """Check both oracles against each other through the cross complement.

    The values must satisfy delta = (r-1)n - f with the same s, and each
    witness, complemented, must certify the opposite property. Any
    mismatch is a bug in this package, never a property of the inputs.
    """
    kw = dict(cap=cap, jobs=jobs, symmetry_reduction=symmetry_reduction, seed=seed)
    rf = oracle_f(n, r, s, **kw)
    rd = oracle_delta(n, r, s, **kw)
    if rf.value + rd.value != (r - 1) * n:
        raise InternalConsistencyError(
            f"duality broken: f={rf.value}, delta={rd.value}, "
            f"expected sum {(r - 1) * n}"
        )
    comp_f = rf.witness.cross_complement()
    if find_crossing_independent(comp_f, s) is not None:
        raise InternalConsistencyError(
            "complement of the clique-free witness has a crossing "
            "independent set it must not have"
        )
    if comp_f.max_degree() != rd.value:
        raise InternalConsistencyError(
            "complement of the clique-free witness misses the delta value"
        )
    comp_d = rd.witness.cross_complement()
    if find_clique(comp_d, s) is not None:
        raise InternalConsistencyError(
            "complement of the covering witness contains a forbidden clique"
        )
    if comp_d.min_degree() != rf.value:
        raise InternalConsistencyError(
            "complement of the covering witness misses the f value"
        )
    return {"n": n, "r": r, "size": s, "f": rf.value, "delta": rd.value}
