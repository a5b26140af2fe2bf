"""Inequality checks, AFM sampling and counterexample search.

Every check returns :class:`Verdict` records oriented so that the claim holds
iff ``lhs <= rhs``.  Each verdict stores a JSON ``instance`` with every input,
and :func:`replay` recomputes a verdict from that instance alone.

Claim ids and their orientation:

=========================  ==============================================================
``bipartite_swap``         hom(H,G)^2  <=  hom(H x K2, G)
``cross_bipartite``        hom(H,G[A]) hom(H,G[B])  <=  hom_b(H x K2, G[A,B])
``weighted_cross_bipartite``  V_H(a..a) V_H(b..b)  <=  V_{HxK2}(a..a, b..b)
``af_inequality``          F(v1,v1,v3..) F(v2,v2,v3..)  <=  F(v1,v2,v3..)^2
``corollary_product``      V_Kt(a..a) V_Kt(b..b)  <=  V_Kt(b,a..a) V_Kt(a,b..b)
``swap_chain``             hom(H^U, G)  <=  hom(H^(U+u), G)
``lorentzian_converse``    [h_H(x;G) not Lorentzian]  <=  0   (exploratory)
=========================  ==============================================================
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from . import formulas
from .enumeration import all_graphs, graphs_up_to
from .graphs import (
    WeightedGraph,
    as_fraction,
    bipartition,
    blow_up,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    fraction_str,
    from_graph6,
    graph_from_json,
    graph_to_json,
    k_q_circ,
    path_graph,
    swapped_graph,
    tensor_with_k2,
)
from .homcount import bipartite_hom_count, g_chromatic_polynomial, g_volume, hom_count, indicator
from .poly import SparsePolynomial, is_lorentzian, mixed_form
from .spectrum import is_antiferromagnetic

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    claim_id: str
    lhs: Fraction
    rhs: Fraction
    instance: dict
    seed: int | None = None
    witness: dict | None = None
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs <= self.rhs)

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "holds": self.holds,
            "lhs": fraction_str(self.lhs),
            "rhs": fraction_str(self.rhs),
            "instance": self.instance,
            "seed": self.seed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _verdict(claim: str, lhs, rhs, instance: dict, seed=None) -> Verdict:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    # a failing verdict carries its full reproducing input as the witness
    witness = dict(instance) if lhs > rhs else None
    return Verdict(claim, lhs, rhs, instance, seed, witness)


def _vec_json(v: Sequence) -> list[str]:
    return [fraction_str(as_fraction(x)) for x in v]


def _vec_load(v: Sequence) -> list[Fraction]:
    return [as_fraction(x) for x in v]


# -- random rationals and AFM sampling --------------------------------------------


def random_rational(rng: random.Random, allow_zero: bool = True) -> Fraction:
    """Numerator uniform in [0, 16] (or [1, 16]), denominator uniform in [1, 8]."""
    return Fraction(rng.randint(0 if allow_zero else 1, 16), rng.randint(1, 8))


def random_vector(rng: random.Random, n: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(n)]


@dataclass(frozen=True)
class AfmSampler:
    """Seeded source of antiferromagnetic weighted graphs with at most ``n_max`` vertices.

    ``structural`` blows up K_q or K_q° (random loop weight), rescales the
    clones by random positive rationals and keeps the result only if the exact
    check passes.  ``rejection`` draws random symmetric matrices until one is AFM.
    Edgeless draws are discarded.  Sample ``i`` depends only on ``(seed, i)``.
    """

    seed: int
    n_max: int = 4
    strategy: str = "structural"

    def sample(self, index: int) -> WeightedGraph:
        rng = random.Random(f"afm:{self.seed}:{self.strategy}:{self.n_max}:{index}")
        draw = self._structural if self.strategy == "structural" else self._rejection
        for _ in range(1000):
            g = draw(rng)
            if g.edge_count() and is_antiferromagnetic(g).verdict:
                return g
        raise RuntimeError("AFM sampler gave up after 1000 draws")

    def __iter__(self) -> Iterator[WeightedGraph]:
        i = 0
        while True:
            yield self.sample(i)
            i += 1

    def _structural(self, rng: random.Random) -> WeightedGraph:
        q = rng.randint(1, self.n_max)
        looped = rng.random() < 0.5
        base = k_q_circ(q) if looped else complete_graph(q)
        if looped and rng.random() < 0.5:
            m = [list(r) for r in base.weights]
            m[q - 1][q - 1] = random_rational(rng, allow_zero=False)
            base = WeightedGraph.from_matrix(m)
        sizes = [1] * q
        for _ in range(rng.randint(0, self.n_max - q)):
            sizes[rng.randrange(q)] += 1
        g = blow_up(base, sizes)
        d = [random_rational(rng, allow_zero=False) for _ in range(g.n)]
        return WeightedGraph.from_matrix([[d[i] * d[j] * g(i, j) for j in range(g.n)] for i in range(g.n)])

    def _rejection(self, rng: random.Random) -> WeightedGraph:
        n = rng.randint(1, self.n_max)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if rng.random() < 0.6:
                    m[i][j] = m[j][i] = random_rational(rng, allow_zero=False)
        return WeightedGraph.from_matrix(m)


def afm_suite(seed: int = 0, count: int = 50, n_max: int = 5, extras: bool = True) -> list[WeightedGraph]:
    """Sampled AFM graphs plus K_2..K_{n_max} and K_q° for q <= n_max."""
    sampler = AfmSampler(seed, n_max)
    out = [sampler.sample(i) for i in range(count)]
    if extras:
        out += [complete_graph(q) for q in range(2, n_max + 1)]
        out += [k_q_circ(q) for q in range(1, n_max + 1)]
    return out


# -- individual checks --------------------------------------------------------------


def check_bipartite_swapping(h: WeightedGraph, g: WeightedGraph) -> Verdict:
    lhs = hom_count(h, g) ** 2
    rhs = hom_count(tensor_with_k2(h).graph, g)
    return _verdict("bipartite_swap", lhs, rhs, {"claim": "bipartite_swap", "H": graph_to_json(h), "G": graph_to_json(g)})


def _subsets(n: int, nonempty: bool = True) -> list[tuple[int, ...]]:
    return [tuple(v for v in range(n) if mask >> v & 1) for mask in range(1 if nonempty else 0, 1 << n)]


def cross_bipartite_pair(h: WeightedGraph, g: WeightedGraph, a: Sequence[int], b: Sequence[int]) -> Verdict:
    ia = [1 if v in a else 0 for v in range(g.n)]
    ib = [1 if v in b else 0 for v in range(g.n)]
    lhs = g_volume(h, [ia] * h.n, g) * g_volume(h, [ib] * h.n, g)
    rhs = bipartite_hom_count(tensor_with_k2(h), g, a, b)
    inst = {"claim": "cross_bipartite", "H": graph_to_json(h), "G": graph_to_json(g), "A": list(a), "B": list(b)}
    return _verdict("cross_bipartite", lhs, rhs, inst)


# family descriptors understood by the closed-form route: ("path", L), ("cycle", L), ("multipartite", parts)


def family_graph(family: Sequence) -> WeightedGraph:
    kind, arg = family[0], family[1]
    if kind == "path":
        return path_graph(arg)
    if kind == "cycle":
        return cycle_graph(arg)
    if kind == "multipartite":
        return complete_multipartite(list(arg))
    raise ValueError(f"unknown family {kind!r}")


def closed_form_counts(family: Sequence, a: int, b: int) -> tuple[int, int] | None:
    """``(N(H;a) N(H;b), N(H x K2; a, b))`` from the closed forms, or None if unavailable."""
    kind, arg = family[0], family[1]
    if a < 2:
        return None
    if kind == "path" and arg >= 1:
        if arg % 2:
            d = (arg + 1) // 2
            return formulas.n_path_odd(d, a, a) * formulas.n_path_odd(d, b, b), formulas.n_path_odd(d, a, b) ** 2
        d = arg // 2
        lhs = formulas.n_path_even(d, a, a) * formulas.n_path_even(d, b, b)
        return lhs, formulas.n_path_even(d, a, b, "ab") * formulas.n_path_even(d, a, b, "ba")
    if kind == "cycle" and arg % 2 == 0 and arg >= 4:
        d = arg // 2
        return formulas.cycle_chromatic(arg, a) * formulas.cycle_chromatic(arg, b), formulas.n_cycle(d, a, b) ** 2
    return None


def kq_reduced_pair(h: WeightedGraph, q: int, a: int, b: int, family: Sequence | None = None) -> Verdict:
    """Nested lists A = {0..a-1} ⊆ B = {0..b-1} in K_q."""
    route = "hom"
    closed = closed_form_counts(family, a, b) if family else None
    if closed is not None:
        lhs, rhs = closed
        route = "closed_form"
    else:
        lhs = hom_count(h, complete_graph(a)) * hom_count(h, complete_graph(b)) if a >= 1 else 0
        if family and family[0] == "multipartite" and a >= 1:
            lhs = formulas.n_multipartite(family[1], a) * formulas.n_multipartite(family[1], b)
            route = "closed_form_lhs"
        rhs = bipartite_hom_count(tensor_with_k2(h), complete_graph(q), range(a), range(b))
    inst = {"claim": "cross_bipartite_kq", "H": graph_to_json(h), "q": q, "a": a, "b": b, "route": route}
    if family:
        inst["family"] = [family[0], list(family[1]) if isinstance(family[1], (list, tuple)) else family[1]]
    return _verdict("cross_bipartite", lhs, rhs, inst)


def check_cross_bipartite_swapping(
    h: WeightedGraph, g: WeightedGraph, mode: str = "exhaustive_subsets", q: int | None = None, family=None
) -> list[Verdict]:
    if mode == "exhaustive_subsets":
        subsets = _subsets(g.n)
        return [cross_bipartite_pair(h, g, a, b) for a in subsets for b in subsets]
    if mode == "kq_reduced":
        q = g.n if q is None else q
        if g != complete_graph(q):
            raise ValueError("kq_reduced mode needs G = K_q")
        return [kq_reduced_pair(h, q, a, b, family) for a in range(1, q + 1) for b in range(a, q + 1)]
    raise ValueError(f"unknown mode {mode!r}")


def weighted_cross_bipartite_trial(h: WeightedGraph, g: WeightedGraph, a: Sequence, b: Sequence, seed=None) -> Verdict:
    a, b = _vec_load(a), _vec_load(b)
    lhs = g_volume(h, [a] * h.n, g) * g_volume(h, [b] * h.n, g)
    rhs = g_volume(tensor_with_k2(h).graph, [a] * h.n + [b] * h.n, g)
    inst = {
        "claim": "weighted_cross_bipartite",
        "H": graph_to_json(h),
        "G": graph_to_json(g),
        "a": _vec_json(a),
        "b": _vec_json(b),
    }
    return _verdict("weighted_cross_bipartite", lhs, rhs, inst, seed)


def check_weighted_cross_bipartite(h: WeightedGraph, g: WeightedGraph, trials: int, seed: int) -> list[Verdict]:
    out = []
    for k in range(trials):
        rng = random.Random(f"wcb:{seed}:{k}")
        out.append(weighted_cross_bipartite_trial(h, g, random_vector(rng, g.n), random_vector(rng, g.n), seed))
    return out


def check_af_inequality(f: SparsePolynomial, vectors: Sequence[Sequence], seed=None) -> Verdict:
    """Alexandrov-Fenchel type bound for the polarisation of a Lorentzian f (v1 may be signed)."""
    vs = [_vec_load(v) for v in vectors]
    d = f.degree()
    if len(vs) != d:
        raise ValueError(f"degree-{d} polynomial needs {d} vectors, got {len(vs)}")
    if d < 2:
        raise ValueError("the inequality needs degree >= 2")
    if any(x < 0 for v in vs[1:] for x in v):
        raise ValueError("vectors v2..vd must be nonnegative")
    v1, v2, rest = vs[0], vs[1], vs[2:]
    rhs = mixed_form(f, [v1, v2] + rest) ** 2
    lhs = mixed_form(f, [v1, v1] + rest) * mixed_form(f, [v2, v2] + rest)
    inst = {"claim": "af_inequality", "f": f.to_json(), "vectors": [_vec_json(v) for v in vs]}
    return _verdict("af_inequality", lhs, rhs, inst, seed)


def check_corollary_product(g: WeightedGraph, t: int, a: Sequence, b: Sequence, seed=None) -> Verdict:
    a, b = _vec_load(a), _vec_load(b)
    if len(a) != g.n or len(b) != g.n:
        raise ValueError("vectors need length v(G)")
    if t < 2:
        raise ValueError("t must be at least 2")
    kt = complete_graph(t)
    lhs = g_volume(kt, [a] * t, g) * g_volume(kt, [b] * t, g)
    rhs = g_volume(kt, [b] + [a] * (t - 1), g) * g_volume(kt, [a] + [b] * (t - 1), g)
    inst = {"claim": "corollary_product", "G": graph_to_json(g), "t": t, "a": _vec_json(a), "b": _vec_json(b)}
    return _verdict("corollary_product", lhs, rhs, inst, seed)


def check_swap_chain(f: WeightedGraph, parts: Sequence[WeightedGraph], g: WeightedGraph, swap: Iterable[int], u: int) -> Verdict:
    swap = sorted(set(swap))
    if u in swap:
        raise ValueError("u must lie outside U")
    lhs = hom_count(swapped_graph(f, parts, swap), g)
    rhs = hom_count(swapped_graph(f, parts, swap + [u]), g)
    inst = {
        "claim": "swap_chain",
        "F": graph_to_json(f),
        "parts": [graph_to_json(p) for p in parts],
        "G": graph_to_json(g),
        "U": swap,
        "u": u,
    }
    return _verdict("swap_chain", lhs, rhs, inst)


def check_lorentzian_converse(h: WeightedGraph, g: WeightedGraph) -> Verdict:
    cert = is_lorentzian(g_chromatic_polynomial(h, g))
    inst = {"claim": "lorentzian_converse", "H": graph_to_json(h), "G": graph_to_json(g)}
    return _verdict("lorentzian_converse", 0 if cert.verdict else 1, 0, inst)


def replay(instance: dict) -> list[Verdict]:
    """Recompute the verdict(s) described by an ``instance`` record."""
    claim = instance["claim"]
    if claim == "bipartite_swap":
        return [check_bipartite_swapping(graph_from_json(instance["H"]), graph_from_json(instance["G"]))]
    if claim == "cross_bipartite":
        h, g = graph_from_json(instance["H"]), graph_from_json(instance["G"])
        return [cross_bipartite_pair(h, g, instance["A"], instance["B"])]
    if claim == "cross_bipartite_kq":
        fam = instance.get("family")
        return [kq_reduced_pair(graph_from_json(instance["H"]), instance["q"], instance["a"], instance["b"], fam)]
    if claim == "weighted_cross_bipartite":
        h, g = graph_from_json(instance["H"]), graph_from_json(instance["G"])
        return [weighted_cross_bipartite_trial(h, g, instance["a"], instance["b"])]
    if claim == "af_inequality":
        return [check_af_inequality(SparsePolynomial.from_json(instance["f"]), instance["vectors"])]
    if claim == "corollary_product":
        return [check_corollary_product(graph_from_json(instance["G"]), instance["t"], instance["a"], instance["b"])]
    if claim == "swap_chain":
        parts = [graph_from_json(p) for p in instance["parts"]]
        return [
            check_swap_chain(
                graph_from_json(instance["F"]), parts, graph_from_json(instance["G"]), instance["U"], instance["u"]
            )
        ]
    if claim == "lorentzian_converse":
        return [check_lorentzian_converse(graph_from_json(instance["H"]), graph_from_json(instance["G"]))]
    raise ValueError(f"unknown claim {claim!r}")


# -- instance families for the blow-up theorems ------------------------------------------


def automorphisms(g: WeightedGraph) -> list[tuple[int, ...]]:
    return [
        p
        for p in permutations(range(g.n))
        if all(g(u, v) == g(p[u], p[v]) for u in range(g.n) for v in range(g.n))
    ]


def bipartite_patterns(n_max: int) -> list[WeightedGraph]:
    """Loopless bipartite graphs on 1..n_max vertices, one per isomorphism class."""
    return [f for n in range(1, n_max + 1) for f in all_graphs(n) if bipartition(f) is not None]


def blow_up_instances(
    pattern_max: int, part_pool: Sequence[WeightedGraph], h_max: int
) -> Iterator[tuple[WeightedGraph, tuple[WeightedGraph, ...]]]:
    """(F, parts) with F bipartite, parts from the pool, v(H) <= h_max; deduplicated up to Aut(F)."""
    for f in bipartite_patterns(pattern_max):
        auts = automorphisms(f)
        seen = set()
        for choice in product(range(len(part_pool)), repeat=f.n):
            if sum(part_pool[c].n for c in choice) > h_max:
                continue
            key = min(tuple(choice[p[v]] for v in range(f.n)) for p in auts)
            if key in seen:
                continue
            seen.add(key)
            yield f, tuple(part_pool[c] for c in choice)


def complete_parts(t_max: int) -> list[WeightedGraph]:
    return [complete_graph(t) for t in range(1, t_max + 1)]


def class_h_parts(max_vertices: int = 4) -> list[WeightedGraph]:
    """Complete multipartite graphs, paths and even cycles on at most ``max_vertices`` vertices."""
    pool: list[WeightedGraph] = []

    def add(g: WeightedGraph) -> None:
        if g.n <= max_vertices and g not in pool:
            pool.append(g)

    for n in range(1, max_vertices + 1):
        for parts in _partitions(n):
            add(complete_multipartite(parts))
        add(path_graph(n - 1))
    for length in range(4, max_vertices + 1, 2):
        add(cycle_graph(length))
    return pool


def _partitions(n: int, largest: int | None = None) -> list[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        return [[]]
    return [[k] + rest for k in range(min(n, largest), 0, -1) for rest in _partitions(n - k, k)]


# -- search -----------------------------------------------------------------------------


SEARCH_CLAIMS = ("bipartite_swap_afm", "cross_bipartite_kq", "zhao_kq", "lorentzian_converse")


def read_graph6_stream(lines: Iterable[str]) -> Iterator[WeightedGraph]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield from_graph6(line)
        except Exception as exc:  # networkx raises several types for bad input
            log.warning("skipping malformed graph6 line %d (%r): %s", lineno, line, exc)


def family_sources(family: str, n_max: int = 8) -> list[tuple]:
    """Formula families for cross-bipartite search, as family descriptors."""
    out: list[tuple] = []
    if family in ("paths", "all"):
        out += [("path", length) for length in range(1, n_max)]
    if family in ("cycles", "all"):
        out += [("cycle", length) for length in range(4, n_max + 1, 2)]
    if family in ("multipartite", "all"):
        for n in range(1, min(n_max, 6) + 1):
            out += [("multipartite", tuple(p)) for p in _partitions(n) if len(p) <= 3 and max(p) <= 3]
    if not out:
        raise ValueError(f"unknown family {family!r}")
    return out


def search_instances(
    claim: str,
    h_source: Iterable[WeightedGraph] | None = None,
    n_max: int = 5,
    q_range: Sequence[int] = (2, 3, 4),
    afm_seed: int = 0,
    afm_n_max: int = 4,
    g_per_h: int = 5,
    family: str | None = None,
) -> Iterator[dict]:
    """Deterministic stream of JSON-able instance specs for :func:`run_instance`."""
    if claim == "zhao_kq":
        hs = h_source if h_source is not None else graphs_up_to(n_max, connected=True)
        for h in hs:
            for q in q_range:
                yield {"claim": "bipartite_swap", "H": graph_to_json(h), "G": graph_to_json(complete_graph(q))}
    elif claim in ("bipartite_swap_afm", "lorentzian_converse"):
        sampler = AfmSampler(afm_seed, afm_n_max)
        hs = h_source if h_source is not None else graphs_up_to(n_max, connected=True)
        k = 0
        sub = "bipartite_swap" if claim == "bipartite_swap_afm" else "lorentzian_converse"
        for h in hs:
            if claim == "lorentzian_converse" and (h.n < 2 or h == complete_graph(h.n)):
                continue
            for _ in range(g_per_h):
                yield {"claim": sub, "H": graph_to_json(h), "G": graph_to_json(sampler.sample(k)), "seed": afm_seed}
                k += 1
    elif claim == "cross_bipartite_kq":
        if family is not None:
            pairs = [(family_graph(fam), fam) for fam in family_sources(family)]
        else:
            hs = h_source if h_source is not None else graphs_up_to(n_max, connected=True)
            pairs = [(h, None) for h in hs]
        for h, fam in pairs:
            for q in q_range:
                for a in range(1, q + 1):
                    for b in range(a, q + 1):
                        inst = {"claim": "cross_bipartite_kq", "H": graph_to_json(h), "q": q, "a": a, "b": b}
                        if fam is not None:
                            inst["family"] = [fam[0], list(fam[1]) if isinstance(fam[1], tuple) else fam[1]]
                        yield inst
    else:
        raise ValueError(f"unknown search claim {claim!r}; expected one of {SEARCH_CLAIMS}")


def run_instance(instance: dict) -> list[dict]:
    """Worker entry point: evaluate one instance spec, return verdict JSON objects."""
    seed = instance.get("seed")
    spec = {k: v for k, v in instance.items() if k != "seed"}
    out = []
    for v in replay(spec):
        d = v.to_json()
        d["seed"] = seed
        out.append(d)
    return out


@dataclass
class SearchState:
    cursor: int = 0
    checked: int = 0
    failures: int = 0

    def to_json(self, config: dict) -> dict:
        return {"cursor": self.cursor, "checked": self.checked, "failures": self.failures, "config": config}


def search_counterexamples(
    instances: Iterable[dict],
    budget: int | None = None,
    state: SearchState | None = None,
    checkpoint=None,
    pool=None,
    chunk: int = 16,
) -> Iterator[dict]:
    """Evaluate instances in order, yielding verdict JSON objects.

    ``state.cursor`` instances are skipped first (resume).  ``checkpoint`` is
    called with the state after every completed chunk.  ``pool`` is an optional
    executor whose ``map`` preserves order.
    """
    state = state or SearchState()
    it = iter(instances)
    for _ in range(state.cursor):
        if next(it, None) is None:
            return
    remaining = None if budget is None else max(budget - state.cursor, 0)
    while remaining is None or remaining > 0:
        take = chunk if remaining is None else min(chunk, remaining)
        batch = [x for _, x in zip(range(take), it)]
        if not batch:
            break
        results = pool.map(run_instance, batch) if pool is not None else map(run_instance, batch)
        for verdicts in results:
            for v in verdicts:
                state.checked += 1
                state.failures += not v["holds"]
                yield v
            state.cursor += 1
        if remaining is not None:
            remaining -= len(batch)
        if checkpoint is not None:
            checkpoint(state)


# -- brute-force oracles for the closed forms -------------------------------------------


def _list_count(h: WeightedGraph, on_a: Sequence[bool], a: int, b: int) -> int:
    """Proper colourings of h where vertex v draws from {0..a-1} if on_a[v], else from {0..b-1}."""
    ia, ib = indicator(b, range(a)), indicator(b, range(b))
    vectors = [ia if on_a[v] else ib for v in range(h.n)]
    value = g_volume(h, vectors, complete_graph(b))
    return int(value)


def oracle_path_odd(d: int, a: int, b: int) -> int:
    return _list_count(path_graph(2 * d - 1), [v % 2 == 0 for v in range(2 * d)], a, b)


def oracle_path_even(d: int, a: int, b: int, orientation: str = "ab") -> int:
    on_a = [(v % 2 == 0) == (orientation == "ab") for v in range(2 * d + 1)]
    return _list_count(path_graph(2 * d), on_a, a, b)


def oracle_cycle(d: int, a: int, b: int) -> int:
    return _list_count(cycle_graph(2 * d), [v % 2 == 0 for v in range(2 * d)], a, b)


def oracle_multipartite(rs: Sequence[int], a: int) -> int:
    if a == 0:
        return 0 if sum(rs) else 1
    return int(hom_count(complete_multipartite(rs), complete_graph(a)))


def oracle_multipartite_first_part(s1: int, rs: Sequence[int], a: int, b: int, orientation: str = "ab") -> int:
    if s1 + sum(rs) == 0:
        return 1
    if b == 0:
        return 0
    first = [True] * s1 + [False] * sum(rs)
    on_a = first if orientation == "ab" else [not x for x in first]
    return _list_count(complete_multipartite([s1] + list(rs)), on_a, a, b)
