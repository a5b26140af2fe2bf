"""Exact inertia of symmetric rational matrices and antiferromagnetism certificates.

The number of positive eigenvalues is read off the characteristic polynomial
(Faddeev-LeVerrier over the integers) by Sturm sequences on its square-free
parts, so no floating point tolerance ever enters a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import WeightedGraph

Poly = list  # coefficients, constant term first


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p: Poly) -> int:
    return len(p) - 1


def _sub(p: Poly, q: Poly) -> Poly:
    m = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(m)])


def _derivative(p: Poly) -> Poly:
    return _trim([i * p[i] for i in range(1, len(p))])


def _divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p = [Fraction(c) for c in p]
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    lead = Fraction(q[-1])
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = p[-1] / lead
        quot[shift] = c
        for i, qc in enumerate(q):
            p[shift + i] -= c * qc
        p = _trim(p)
    return _trim(quot), p


def _monic(p: Poly) -> Poly:
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def _gcd(p: Poly, q: Poly) -> Poly:
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _divmod(p, q)[1]
    return _monic(p)


def charpoly(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial det(xI - A) of an integer matrix, constant term first."""
    n = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        m = [
            [sum(a[i][l] * m[l][j] for l in range(n)) + (c_prev if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(a[i][l] * m[l][i] for i in range(n) for l in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact for integer input"
        coeffs[n - k] = q
    return coeffs


def integer_scaled(matrix: Sequence[Sequence]) -> list[list[int]]:
    """Multiply a rational matrix by the lcm of its denominators (signs of eigenvalues unchanged)."""
    fr = [[Fraction(x) for x in row] for row in matrix]
    lcm = 1
    for row in fr:
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return [[int(x * lcm) for x in row] for row in fr]


def square_free_parts(p: Poly) -> list[Poly]:
    """Yun's algorithm: ``[a_1, a_2, ...]`` with ``p = c * prod a_i^i``, each ``a_i`` square-free."""
    p = _trim([Fraction(c) for c in p])
    if _deg(p) < 1:
        return []
    b = _derivative(p)
    c = _gcd(p, b)
    w = _divmod(p, c)[0]
    y = _divmod(b, c)[0]
    parts = []
    while _deg(w) > 0:
        z = _sub(y, _derivative(w))
        g = _gcd(w, z) if z else _monic(w)
        parts.append(g)
        w = _divmod(w, g)[0]
        y = _divmod(z, g)[0] if z else []
    return parts


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [_trim([Fraction(c) for c in p])]
    seq.append(_derivative(seq[0]))
    while seq[-1]:
        r = _divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def count_positive_roots_distinct(p: Poly) -> int:
    """Distinct roots in (0, inf) of a polynomial with p(0) != 0."""
    seq = sturm_sequence(p)
    at_zero = _sign_changes([s[0] for s in seq])
    at_inf = _sign_changes([s[-1] for s in seq])
    return at_zero - at_inf


def count_positive_roots(p: Poly) -> int:
    """Positive real roots counted with multiplicity."""
    p = _trim(p)
    while p and p[0] == 0:
        p = p[1:]
    total = 0
    for mult, part in enumerate(square_free_parts(p), start=1):
        if _deg(part) > 0:
            total += mult * count_positive_roots_distinct(part)
    return total


def positive_eigenvalue_count(matrix: Sequence[Sequence]) -> int:
    """Exact number of positive eigenvalues (with multiplicity) of a symmetric rational matrix."""
    if not len(matrix):
        return 0
    return count_positive_roots(charpoly(integer_scaled(matrix)))


# -- antiferromagnetism --------------------------------------------------------


@dataclass(frozen=True)
class StructuralDecomposition:
    """``classes`` partition V1 into the parts of a complete multipartite graph;
    ``apex`` is V2, the looped vertices adjacent to everything."""

    n: int
    classes: tuple[tuple[int, ...], ...]
    apex: tuple[int, ...]

    def reassemble(self) -> WeightedGraph:
        label = {}
        for c, cls in enumerate(self.classes):
            for v in cls:
                label[v] = c
        apex = set(self.apex)
        edges = []
        for u in range(self.n):
            for v in range(u, self.n):
                if u in apex or v in apex:
                    edges.append((u, v))
                elif u != v and label[u] != label[v]:
                    edges.append((u, v))
        return WeightedGraph.from_edges(self.n, edges)

    def to_json(self) -> dict:
        return {"classes": [list(c) for c in self.classes], "apex": list(self.apex)}


@dataclass(frozen=True)
class AfmCertificate:
    verdict: bool
    positive_eigenvalue_count: int
    structural_decomposition: StructuralDecomposition | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "positive_eigenvalue_count": self.positive_eigenvalue_count}
        if self.structural_decomposition is not None:
            out["structural_decomposition"] = self.structural_decomposition.to_json()
        return out


def structural_decomposition(g: WeightedGraph) -> StructuralDecomposition | None:
    """Split an unweighted graph without isolated vertices into a complete
    multipartite part and a set of universal looped vertices, if possible."""
    g.require_unweighted()
    if g.isolated_vertices():
        return None
    apex = [v for v in range(g.n) if g(v, v)]
    if any(not g(v, u) for v in apex for u in range(g.n)):
        return None
    rest = [v for v in range(g.n) if not g(v, v)]
    classes: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for v in rest:
        if v in seen:
            continue
        cls = tuple(u for u in rest if not g(u, v))
        if seen.intersection(cls):
            return None
        seen.update(cls)
        classes.append(cls)
    dec = StructuralDecomposition(g.n, tuple(classes), tuple(apex))
    return dec if dec.reassemble() == g else None


def is_antiferromagnetic(g: WeightedGraph) -> AfmCertificate:
    count = positive_eigenvalue_count(g.weights)
    verdict = count <= 1
    dec = None
    if verdict and g.is_unweighted() and not g.isolated_vertices():
        dec = structural_decomposition(g)
    return AfmCertificate(verdict, count, dec)
