"""Exact weighted homomorphism counts, G-chromatic polynomials and G-volumes.

Every count here is a G-volume: a sum over maps ``phi: V(H) -> V(G)`` of the
edge-weight product times per-vertex weights ``x[u][phi(u)]``.  Plain counts
use all-ones vectors and bipartite counts use indicator vectors.

Two exact evaluators share that definition:

* ``backtrack`` enumerates maps in a static order with zero-weight pruning;
  it is the reference oracle.
* ``eliminate`` sums vertices out one at a time (variable elimination on the
  tensor network of H), which keeps ``H x K2`` with 16 vertices tractable.

Rational inputs are scaled to integers first and the scale divided out at
the end, so both routes run on Python integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .graphs import LabelledBipartiteGraph, WeightedGraph, as_fraction
from .poly import SparsePolynomial

# maps enumerated by the backtracker before "auto" switches to elimination
BACKTRACK_LIMIT = 50_000


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    lcm = 1
    for x in values:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return lcm


def _source_edges(h: WeightedGraph) -> list[tuple[int, int]]:
    h.require_unweighted("source graph H")
    return h.edges()


def _integer_problem(h: WeightedGraph, vectors, g: WeightedGraph):
    """Integer weights and vectors plus the denominator of the final answer."""
    edges = _source_edges(h)
    lg = _lcm_denominators(x for row in g.weights for x in row)
    gi = [[int(x * lg) for x in row] for row in g.weights]
    vi, denom = [], lg ** len(edges)
    for v in vectors:
        lv = _lcm_denominators(v)
        vi.append([int(x * lv) for x in v])
        denom *= lv
    return edges, gi, vi, denom


def _check_vectors(h: WeightedGraph, vectors, g: WeightedGraph) -> list[list[Fraction]]:
    if vectors is None:
        return [[Fraction(1)] * g.n for _ in range(h.n)]
    vectors = [[as_fraction(x) for x in v] for v in vectors]
    if len(vectors) != h.n:
        raise ValueError(f"need one vector per source vertex ({h.n}), got {len(vectors)}")
    if any(len(v) != g.n for v in vectors):
        raise ValueError(f"each vector needs length v(G) = {g.n}")
    return vectors


def enumeration_order(h: WeightedGraph) -> list[int]:
    """Static order: each next vertex has the most edges back into the placed set."""
    adj = [set(u for u in h.neighbours(v) if u != v) for v in range(h.n)]
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < h.n:
        v = max(
            (v for v in range(h.n) if v not in placed),
            key=lambda v: (len(adj[v] & placed), len(adj[v]), -v),
        )
        order.append(v)
        placed.add(v)
    return order


def _backtrack(h: WeightedGraph, edges, gi, vi) -> int:
    n_g = len(gi)
    order = enumeration_order(h)
    pos = {v: p for p, v in enumerate(order)}
    back: list[list[int]] = [[] for _ in order]
    loop = [False] * len(order)
    for u, v in edges:
        if u == v:
            loop[pos[u]] = True
        else:
            a, b = sorted((pos[u], pos[v]))
            back[b].append(a)
    # per-position candidate lists drop images with zero vertex weight up front
    cands = [[c for c in range(n_g) if vi[v][c]] for v in order]
    image = [0] * len(order)
    last = len(order) - 1

    def rec(p: int, acc: int) -> int:
        total = 0
        v = order[p]
        for c in cands[p]:
            w = vi[v][c]
            if loop[p]:
                w *= gi[c][c]
                if not w:
                    continue
            row = gi[c]
            for q in back[p]:
                w *= row[image[q]]
                if not w:
                    break
            if not w:
                continue
            if p == last:
                total += acc * w
            else:
                image[p] = c
                total += rec(p + 1, acc * w)
        return total

    return rec(0, 1) if order else 1


def _elimination_order(n: int, scopes: list[tuple[int, ...]]) -> list[int]:
    nbrs = [set() for _ in range(n)]
    for s in scopes:
        for u in s:
            nbrs[u].update(x for x in s if x != u)
    order, left = [], set(range(n))
    while left:
        v = min(left, key=lambda v: (len(nbrs[v] & left), v))
        ns = nbrs[v] & left
        for u in ns:
            nbrs[u].update(x for x in ns if x != u)
        order.append(v)
        left.remove(v)
    return order


def _eliminate(h: WeightedGraph, edges, gi, vi) -> int:
    n_g = len(gi)
    # exact in int64 whenever the absolute-value bound stays below 2**62
    bound = max((abs(x) for row in gi for x in row), default=0) ** len(edges)
    for v in vi:
        bound *= sum(abs(x) for x in v)
    dtype = np.int64 if bound < 2**62 else object
    gmat = np.array(gi, dtype=dtype)
    factors: list[tuple[tuple[int, ...], np.ndarray]] = []
    for u in range(h.n):
        factors.append(((u,), np.array(vi[u], dtype=dtype)))
    for u, v in edges:
        if u == v:
            factors.append(((u,), np.array([gi[c][c] for c in range(n_g)], dtype=dtype)))
        else:
            factors.append(((u, v), gmat))
    for v in _elimination_order(h.n, [s for s, _ in factors]):
        touching = [f for f in factors if v in f[0]]
        factors = [f for f in factors if v not in f[0]]
        out = tuple(sorted({x for s, _ in touching for x in s if x != v}))
        labels = {x: i for i, x in enumerate(sorted({x for s, _ in touching for x in s}))}
        args = []
        for s, arr in touching:
            args += [arr, [labels[x] for x in s]]
        args.append([labels[x] for x in out])
        factors.append((out, np.einsum(*args)))
    result = 1
    for _, arr in factors:
        result *= int(arr)
    return result


def g_volume(h: WeightedGraph, vectors: Sequence[Sequence], g: WeightedGraph, method: str = "auto") -> Fraction:
    """V_H(x_1, ..., x_t; G); vectors may have negative entries."""
    vectors = _check_vectors(h, vectors, g)
    edges, gi, vi, denom = _integer_problem(h, vectors, g)
    if method == "auto":
        method = "backtrack" if g.n ** h.n <= BACKTRACK_LIMIT else "eliminate"
    if method == "backtrack":
        num = _backtrack(h, edges, gi, vi)
    elif method == "eliminate":
        num = _eliminate(h, edges, gi, vi)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(num, denom)


def hom_count(h: WeightedGraph, g: WeightedGraph, method: str = "auto") -> Fraction:
    """Weighted hom(H, G); a loop of H at u contributes G(phi(u), phi(u)) once."""
    return g_volume(h, None, g, method)


def indicator(n: int, subset: Iterable[int]) -> list[int]:
    s = set(subset)
    if any(not 0 <= v < n for v in s):
        raise ValueError(f"subset {sorted(s)} out of range for n={n}")
    return [1 if v in s else 0 for v in range(n)]


def bipartite_hom_count(
    hb: LabelledBipartiteGraph, g: WeightedGraph, a: Iterable[int], b: Iterable[int], method: str = "auto"
) -> Fraction:
    """Maps sending ``hb.left`` into A and ``hb.right`` into B, weighted by G's edges."""
    ia, ib = indicator(g.n, a), indicator(g.n, b)
    left = set(hb.left)
    vectors = [ia if v in left else ib for v in range(hb.graph.n)]
    return g_volume(hb.graph, vectors, g, method)


def g_chromatic_polynomial(h: WeightedGraph, g: WeightedGraph) -> SparsePolynomial:
    """h_H(x; G): sum over maps of the edge-weight product times prod x_{phi(v)}."""
    edges = _source_edges(h)
    order = enumeration_order(h)
    pos = {v: p for p, v in enumerate(order)}
    back: list[list[int]] = [[] for _ in order]
    loop = [False] * len(order)
    for u, v in edges:
        if u == v:
            loop[pos[u]] = True
        else:
            a, b = sorted((pos[u], pos[v]))
            back[b].append(a)
    terms: dict[tuple[int, ...], Fraction] = {}
    image = [0] * len(order)
    counts = [0] * g.n
    w = g.weights

    def rec(p: int, acc: Fraction) -> None:
        if p == len(order):
            key = tuple(counts)
            terms[key] = terms.get(key, 0) + acc
            return
        for c in range(g.n):
            x = acc
            if loop[p]:
                x *= w[c][c]
            for q in back[p]:
                if not x:
                    break
                x *= w[c][image[q]]
            if not x:
                continue
            image[p] = c
            counts[c] += 1
            rec(p + 1, x)
            counts[c] -= 1

    rec(0, Fraction(1))
    return SparsePolynomial.from_dict(g.n, terms)
