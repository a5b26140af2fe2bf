"""Isomorph-free enumeration of small unweighted graphs (loops optional).

Graphs are grown one vertex at a time from canonical representatives; the
canonical form is the lexicographically least adjacency encoding over the
vertex orders compatible with an equitable colour refinement.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .graphs import WeightedGraph, is_connected

Rows = tuple[int, ...]  # bitmask rows; bit v of row u set iff u ~ v (bit u for a loop)


def _refine(rows: Rows) -> list[int]:
    n = len(rows)
    colour = [0] * n
    while True:
        sig = [
            (colour[v], (rows[v] >> v) & 1, tuple(sorted(colour[u] for u in range(n) if u != v and rows[v] >> u & 1)))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _permuted(rows: Rows, order: tuple[int, ...]) -> Rows:
    # order[k] is the old vertex placed at position k
    pos = {v: k for k, v in enumerate(order)}
    out = []
    for v in order:
        r, m = rows[v], 0
        while r:
            low = r & -r
            m |= 1 << pos[low.bit_length() - 1]
            r ^= low
        out.append(m)
    return tuple(out)


def canonical_rows(rows: Rows) -> Rows:
    colour = _refine(rows)
    cells = [[v for v in range(len(rows)) if colour[v] == c] for c in sorted(set(colour))]
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        key = _permuted(rows, tuple(v for cell in choice for v in cell))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def rows_of(g: WeightedGraph) -> Rows:
    g.require_unweighted()
    return tuple(sum(1 << u for u in g.neighbours(v)) for v in range(g.n))


def graph_of(rows: Rows) -> WeightedGraph:
    n = len(rows)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1]
    return WeightedGraph.from_edges(n, edges, loops=[v for v in range(n) if rows[v] >> v & 1])


def canonical_form(g: WeightedGraph) -> Rows:
    return canonical_rows(rows_of(g))


@lru_cache(maxsize=None)
def _level(n: int, loops: bool) -> tuple[Rows, ...]:
    if n == 1:
        return ((0,), (1,)) if loops else ((0,),)
    seen: set[Rows] = set()
    for rows in _level(n - 1, loops):
        for mask in range(1 << (n - 1)):
            for loop in ((0, 1) if loops else (0,)):
                new = [r | ((mask >> u & 1) << (n - 1)) for u, r in enumerate(rows)]
                new.append(mask | (loop << (n - 1)))
                seen.add(canonical_rows(tuple(new)))
    return tuple(sorted(seen))


def all_graphs(n: int, loops: bool = False) -> list[WeightedGraph]:
    """One representative per isomorphism class of unweighted graphs on n vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    return [graph_of(r) for r in _level(n, loops)]


def graphs_up_to(n_max: int, loops: bool = False, connected: bool = False, no_isolated: bool = False):
    for n in range(1, n_max + 1):
        for g in all_graphs(n, loops):
            if connected and not is_connected(g):
                continue
            if no_isolated and g.isolated_vertices():
                continue
            yield g
