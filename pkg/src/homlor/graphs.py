"""Weighted graphs with loops, standard families and the blow-up constructions.

A :class:`WeightedGraph` is an immutable symmetric matrix of nonnegative
``Fraction`` weights; the diagonal holds loop weights.  Every construction
here fixes a canonical vertex order, which is part of the JSON contract.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Weight = Fraction
Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        # floats are accepted only when they are exact small rationals
        return Fraction(value).limit_denominator(10**6)
    raise TypeError(f"cannot interpret {value!r} as an exact weight")


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric nonnegative rational adjacency matrix on vertices ``0..n-1``."""

    n: int
    weights: Matrix

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        w = tuple(tuple(as_fraction(x) for x in row) for row in self.weights)
        if len(w) != self.n or any(len(row) != self.n for row in w):
            raise ValueError(f"weights must be a {self.n}x{self.n} matrix")
        for i in range(self.n):
            for j in range(self.n):
                if w[i][j] < 0:
                    raise ValueError(f"negative weight at ({i},{j})")
                if w[i][j] != w[j][i]:
                    raise ValueError(f"weights not symmetric at ({i},{j})")
        object.__setattr__(self, "weights", w)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "WeightedGraph":
        return cls(len(rows), tuple(tuple(as_fraction(x) for x in row) for row in rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, loops: Iterable[int] = ()) -> "WeightedGraph":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples (0-based) plus looped vertices."""
        m = [[ZERO] * n for _ in range(n)]
        for e in edges:
            u, v = e[0], e[1]
            w = as_fraction(e[2]) if len(e) > 2 else ONE
            m[u][v] = m[v][u] = w
        for v in loops:
            m[v][v] = ONE
        return cls(n, tuple(tuple(row) for row in m))

    @classmethod
    def empty(cls, n: int) -> "WeightedGraph":
        return cls.from_edges(n, [])

    # -- queries ------------------------------------------------------------

    def __call__(self, u: int, v: int) -> Fraction:
        return self.weights[u][v]

    def is_unweighted(self) -> bool:
        return all(x in (0, 1) for row in self.weights for x in row)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.weights for x in row)

    def has_loops(self) -> bool:
        return any(self.weights[i][i] for i in range(self.n))

    def loops(self) -> list[int]:
        return [i for i in range(self.n) if self.weights[i][i]]

    def edges(self) -> list[tuple[int, int]]:
        """Support edges ``(u, v)`` with ``u <= v``; loops appear as ``(u, u)``."""
        return [(i, j) for i in range(self.n) for j in range(i, self.n) if self.weights[i][j]]

    def neighbours(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.weights[v][u]]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not any(self.weights[v])]

    def edge_count(self) -> int:
        return len(self.edges())

    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def require_unweighted(self, what: str = "graph") -> None:
        if not self.is_unweighted():
            raise ValueError(f"{what} must be unweighted ({{0,1}} weights)")

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class LabelledBipartiteGraph:
    """A {0,1}-graph together with an ordered bipartition ``left | right``."""

    graph: WeightedGraph
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        self.graph.require_unweighted("labelled bipartite graph")
        if sorted(self.left + self.right) != list(range(self.graph.n)):
            raise ValueError("left and right must partition the vertex set")
        side = {v: 0 for v in self.left} | {v: 1 for v in self.right}
        for u, v in self.graph.edges():
            if side[u] == side[v]:
                raise ValueError(f"edge ({u},{v}) lies inside one side")


# -- standard families ---------------------------------------------------------

FAMILIES = ("path_len", "cycle_len", "complete", "complete_multipartite", "k_q_circ", "hardcore")


def path_graph(length: int) -> WeightedGraph:
    """Path with ``length`` edges on ``length + 1`` vertices, in path order."""
    if length < 0:
        raise ValueError("path length must be nonnegative")
    return WeightedGraph.from_edges(length + 1, [(i, i + 1) for i in range(length)])


def cycle_graph(length: int) -> WeightedGraph:
    if length < 3:
        raise ValueError(f"cycle length must be at least 3, got {length}")
    return WeightedGraph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def complete_graph(q: int) -> WeightedGraph:
    if q < 1:
        raise ValueError("complete graph needs q >= 1")
    return WeightedGraph.from_edges(q, combinations(range(q), 2))


def complete_multipartite(parts: Sequence[int]) -> WeightedGraph:
    """K(r_1,...,r_k) with the parts laid out consecutively; zero-size parts vanish."""
    if not parts or any(r < 0 for r in parts) or sum(parts) == 0:
        raise ValueError("part sizes must be nonnegative with at least one positive")
    label = [i for i, r in enumerate(parts) for _ in range(r)]
    n = len(label)
    return WeightedGraph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    )


def k_q_circ(q: int) -> WeightedGraph:
    """K_q with the last vertex looped."""
    g = complete_graph(q)
    return WeightedGraph.from_edges(q, g.edges(), loops=[q - 1])


def hardcore() -> WeightedGraph:
    """Hard-core target: vertex 0 (unoccupied) is looped and adjacent to vertex 1."""
    return WeightedGraph.from_edges(2, [(0, 1)], loops=[0])


def make_family(kind: str, params: Sequence[int] = ()) -> WeightedGraph:
    params = list(params)

    def one() -> int:
        if len(params) != 1:
            raise ValueError(f"{kind} takes exactly one parameter, got {params}")
        return params[0]

    if kind == "path_len":
        return path_graph(one())
    if kind == "cycle_len":
        return cycle_graph(one())
    if kind == "complete":
        return complete_graph(one())
    if kind == "complete_multipartite":
        return complete_multipartite(params)
    if kind == "k_q_circ":
        q = one()
        if q < 1:
            raise ValueError("k_q_circ needs q >= 1")
        return k_q_circ(q)
    if kind == "hardcore":
        if params:
            raise ValueError("hardcore takes no parameters")
        return hardcore()
    raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}")


# -- elementary operations -----------------------------------------------------


def support(g: WeightedGraph) -> WeightedGraph:
    return WeightedGraph(g.n, tuple(tuple(ONE if x else ZERO for x in row) for row in g.weights))


def induced_subgraph(g: WeightedGraph, vertices: Iterable[int]) -> WeightedGraph:
    s = sorted(set(vertices))
    if not s:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if s[0] < 0 or s[-1] >= g.n:
        raise ValueError(f"vertex set {s} out of range for n={g.n}")
    return WeightedGraph(len(s), tuple(tuple(g.weights[i][j] for j in s) for i in s))


def disjoint_union(*graphs: WeightedGraph) -> WeightedGraph:
    n = sum(g.n for g in graphs)
    m = [[ZERO] * n for _ in range(n)]
    off = 0
    for g in graphs:
        for i in range(g.n):
            for j in range(g.n):
                m[off + i][off + j] = g.weights[i][j]
        off += g.n
    return WeightedGraph(n, tuple(tuple(r) for r in m))


def relabel(g: WeightedGraph, perm: Sequence[int]) -> WeightedGraph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    return WeightedGraph(g.n, tuple(tuple(g.weights[inv[i]][inv[j]] for j in range(g.n)) for i in range(g.n)))


def bipartition(g: WeightedGraph) -> tuple[list[int], list[int]] | None:
    """A 2-colouring ``(side0, side1)`` of the support, or None if there is none."""
    colour: dict[int, int] = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbours(v):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return [v for v in range(g.n) if colour[v] == 0], [v for v in range(g.n) if colour[v] == 1]


def is_connected(g: WeightedGraph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbours(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


# -- blow-ups and swaps ---------------------------------------------------------


def tensor_with_k2(h: WeightedGraph) -> LabelledBipartiteGraph:
    """H x K2 on ``(1,1),...,(t,1),(1,2),...,(t,2)``: vertex ``(v, i)`` is ``v + (i-1) t``."""
    h.require_unweighted("H in H x K2")
    t = h.n
    edges = []
    for u, v in h.edges():
        edges.append((u, t + v))
        if u != v:
            edges.append((v, t + u))
    g = WeightedGraph.from_edges(2 * t, edges)
    return LabelledBipartiteGraph(g, tuple(range(t)), tuple(range(t, 2 * t)))


def blow_up(g: WeightedGraph, sizes: Sequence[int]) -> WeightedGraph:
    """Replace vertex ``i`` by ``sizes[i]`` clones (size 0 deletes it).

    Any two clones of ``i`` and ``k``, including ``i == k`` and a clone with
    itself, get weight ``G(i, k)``; clones of a looped vertex therefore form a
    looped clique.
    """
    if len(sizes) != g.n:
        raise ValueError(f"need {g.n} sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValueError("blow-up sizes must be nonnegative")
    origin = [i for i, s in enumerate(sizes) for _ in range(s)]
    if not origin:
        raise ValueError("blow-up deletes every vertex")
    n = len(origin)
    return WeightedGraph(n, tuple(tuple(g.weights[origin[a]][origin[b]] for b in range(n)) for a in range(n)))


def _part_offsets(parts: Sequence[WeightedGraph]) -> list[int]:
    offs, acc = [], 0
    for p in parts:
        offs.append(acc)
        acc += p.n
    return offs


def _check_pattern(f: WeightedGraph, parts: Sequence[WeightedGraph]) -> None:
    f.require_unweighted("pattern graph F")
    if f.has_loops():
        raise ValueError("pattern graph F must be loopless")
    if len(parts) != f.n:
        raise ValueError(f"need {f.n} parts, got {len(parts)}")
    for p in parts:
        p.require_unweighted("blow-up part")


def h_blow_up(f: WeightedGraph, parts: Sequence[WeightedGraph]) -> WeightedGraph:
    """Replace vertex ``i`` of F by ``parts[i]``; join parts completely along F-edges."""
    _check_pattern(f, parts)
    offs = _part_offsets(parts)
    n = sum(p.n for p in parts)
    edges = []
    for i, p in enumerate(parts):
        edges += [(offs[i] + u, offs[i] + v) for u, v in p.edges()]
    for i, j in f.edges():
        edges += [(offs[i] + u, offs[j] + v) for u in range(parts[i].n) for v in range(parts[j].n)]
    return WeightedGraph.from_edges(n, edges)


def swapped_graph(f: WeightedGraph, parts: Sequence[WeightedGraph], swap: Iterable[int]) -> WeightedGraph:
    """The graph H^U: two copies of the blow-up with ``H_j ⊔ H_j`` rewired to ``H_j x K2`` for j in U.

    Vertex ``v`` of the blow-up H has copies ``v`` (first copy) and ``v + v(H)``.
    """
    _check_pattern(f, parts)
    swap = set(swap)
    if not swap <= set(range(f.n)):
        raise ValueError(f"U={sorted(swap)} is not a subset of V(F)={list(range(f.n))}")
    if bipartition(f) is None:
        raise ValueError("pattern graph F must be bipartite")
    h = h_blow_up(f, parts)
    t = h.n
    offs = _part_offsets(parts)
    edges = []
    for i, j in f.edges():
        for u in range(parts[i].n):
            for v in range(parts[j].n):
                a, b = offs[i] + u, offs[j] + v
                edges += [(a, b), (t + a, t + b)]
    for j, p in enumerate(parts):
        for u, v in p.edges():
            a, b = offs[j] + u, offs[j] + v
            if j in swap:
                edges += [(a, t + b), (b, t + a)]
            else:
                edges += [(a, b), (t + a, t + b)]
    return WeightedGraph.from_edges(2 * t, edges)


def swap_isomorphism(f: WeightedGraph, parts: Sequence[WeightedGraph]) -> list[int]:
    """Bijection from H x K2 onto H^{V(F)}: clones of one side of F stay, the others swap copies."""
    _check_pattern(f, parts)
    sides = bipartition(f)
    if sides is None:
        raise ValueError("pattern graph F must be bipartite")
    b_side = set(sides[1])
    t = sum(p.n for p in parts)
    offs = _part_offsets(parts)
    perm = list(range(2 * t))
    for j in b_side:
        for u in range(parts[j].n):
            v = offs[j] + u
            perm[v], perm[t + v] = t + v, v
    return perm


def is_isomorphism(perm: Sequence[int], g: WeightedGraph, h: WeightedGraph) -> bool:
    """True iff ``v -> perm[v]`` maps g onto h preserving every weight."""
    if g.n != h.n or sorted(perm) != list(range(g.n)):
        return False
    return all(g.weights[u][v] == h.weights[perm[u]][perm[v]] for u in range(g.n) for v in range(g.n))


# -- serialisation -------------------------------------------------------------


def graph_to_json(g: WeightedGraph) -> dict:
    return {"n": g.n, "weights": [[fraction_str(x) for x in row] for row in g.weights]}


def graph_from_json(data) -> WeightedGraph:
    if isinstance(data, str):
        data = json.loads(data)
    if "weights" in data:
        g = WeightedGraph.from_matrix(data["weights"])
        if "n" in data and data["n"] != g.n:
            raise ValueError(f"n={data['n']} disagrees with a {g.n}x{g.n} weight matrix")
        return g
    if "graph6" in data:
        g = from_graph6(data["graph6"])
        return WeightedGraph.from_edges(g.n, g.edges(), loops=data.get("loops", ()))
    raise ValueError("graph JSON needs 'weights' (or 'graph6' with optional 'loops')")


def from_graph6(line: str | bytes) -> WeightedGraph:
    import networkx as nx

    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(b">>graph6<<"):
        line = line[len(b">>graph6<<"):]
    nxg = nx.from_graph6_bytes(line)
    index = {v: i for i, v in enumerate(sorted(nxg.nodes))}
    return WeightedGraph.from_edges(len(index), [(index[u], index[v]) for u, v in nxg.edges])


def to_graph6(g: WeightedGraph) -> str:
    import networkx as nx

    if g.has_loops() or not g.is_unweighted():
        raise ValueError("graph6 encodes only unweighted loopless graphs")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()
