"""Sparse multivariate polynomials over the rationals and the Lorentzian test.

Polynomials are immutable and canonical (terms sorted by exponent vector,
no zero coefficients), so they hash and compare structurally.  That canonical
form keys the memo used by :func:`is_lorentzian`.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graphs import WeightedGraph, as_fraction, fraction_str
from .spectrum import positive_eigenvalue_count

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class SparsePolynomial:
    n_vars: int
    terms: tuple[tuple[Exponent, Fraction], ...] = ()
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError("need at least one variable")
        merged: dict[Exponent, Fraction] = {}
        for exp, coef in self.terms:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {self.n_vars} variables")
            merged[exp] = merged.get(exp, Fraction(0)) + as_fraction(coef)
        canon = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_lookup", dict(canon))

    @classmethod
    def from_dict(cls, n_vars: int, terms: Mapping[Exponent, object]) -> "SparsePolynomial":
        return cls(n_vars, tuple(terms.items()))

    @classmethod
    def variable(cls, n_vars: int, i: int) -> "SparsePolynomial":
        return cls(n_vars, ((unit(n_vars, i), Fraction(1)),))

    # -- basic algebra --------------------------------------------------------

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._lookup.get(tuple(exp), Fraction(0))

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self._lookup)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._lookup)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("the zero polynomial has no degree")
        return max(self.degrees())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for _, c in self.terms)

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._same_ring(other)
        return SparsePolynomial(self.n_vars, self.terms + other.terms)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._same_ring(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial.from_dict(self.n_vars, out)

    def scale(self, c) -> "SparsePolynomial":
        c = as_fraction(c)
        return SparsePolynomial(self.n_vars, tuple((e, c * x) for e, x in self.terms))

    def _same_ring(self, other: "SparsePolynomial") -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(f"variable counts differ: {self.n_vars} vs {other.n_vars}")

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in self.terms:
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e)
            parts.append(fraction_str(c) + (("*" + mono) if mono else ""))
        return " + ".join(parts)

    # -- serialisation ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"n_vars": self.n_vars, "terms": [{"exp": list(e), "coef": fraction_str(c)} for e, c in self.terms]}

    @classmethod
    def from_json(cls, data) -> "SparsePolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n_vars"]), tuple((tuple(t["exp"]), as_fraction(t["coef"])) for t in data["terms"]))


def unit(n: int, i: int) -> Exponent:
    return tuple(1 if k == i else 0 for k in range(n))


def quadratic_form(g: WeightedGraph) -> SparsePolynomial:
    """Q_G(x) = x^T G x / 2, whose Hessian is G."""
    terms = {}
    for i in range(g.n):
        for j in range(i, g.n):
            w = g(i, j)
            if not w:
                continue
            e = [0] * g.n
            e[i] += 1
            e[j] += 1
            terms[tuple(e)] = w / 2 if i == j else w
    return SparsePolynomial.from_dict(g.n, terms)


def partial_derivative(f: SparsePolynomial, i: int) -> SparsePolynomial:
    if not 0 <= i < f.n_vars:
        raise IndexError(f"variable index {i} out of range for {f.n_vars} variables")
    out = []
    for e, c in f.terms:
        if e[i]:
            d = list(e)
            d[i] -= 1
            out.append((tuple(d), c * e[i]))
    return SparsePolynomial(f.n_vars, tuple(out))


def scale_variables(f: SparsePolynomial, factors: Sequence) -> SparsePolynomial:
    """f(c_1 x_1, ..., c_n x_n)."""
    factors = [as_fraction(c) for c in factors]
    if len(factors) != f.n_vars:
        raise ValueError("need one factor per variable")
    out = []
    for e, c in f.terms:
        for k, ek in enumerate(e):
            c *= factors[k] ** ek
        out.append((e, c))
    return SparsePolynomial(f.n_vars, tuple(out))


def evaluate(f: SparsePolynomial, point: Sequence) -> Fraction:
    if len(point) != f.n_vars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n_vars} variables")
    point = [as_fraction(x) for x in point]
    total = Fraction(0)
    for e, c in f.terms:
        term = c
        for x, k in zip(point, e):
            if k:
                term *= x**k
        total += term
    return total


def hessian(f: SparsePolynomial) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of second partials of a homogeneous quadratic (constant entries)."""
    if f.is_zero() or not f.is_homogeneous() or f.degree() != 2:
        raise ValueError("hessian expects a homogeneous quadratic")
    n = f.n_vars
    m = [[Fraction(0)] * n for _ in range(n)]
    for e, c in f.terms:
        idx = [k for k in range(n) for _ in range(e[k])]
        i, j = idx
        if i == j:
            m[i][i] += 2 * c
        else:
            m[i][j] += c
            m[j][i] += c
    return tuple(tuple(r) for r in m)


# -- M-convexity --------------------------------------------------------------------


def find_exchange_violation(support: Iterable[Exponent]):
    """First ``(a, b, i)`` breaking the exchange property, or None."""
    s = set(map(tuple, support))
    lengths = {len(v) for v in s}
    if len(lengths) > 1:
        raise ValueError(f"exponent vectors of mixed lengths {sorted(lengths)}")
    ordered = sorted(s)
    for a in ordered:
        for b in ordered:
            if a == b:
                continue
            lower = [j for j in range(len(a)) if a[j] < b[j]]
            for i in range(len(a)):
                if a[i] <= b[i]:
                    continue
                ok = False
                for j in lower:
                    c = list(a)
                    c[i] -= 1
                    c[j] += 1
                    if tuple(c) in s:
                        ok = True
                        break
                if not ok:
                    return a, b, i
    return None


def is_m_convex(support: Iterable[Exponent]) -> tuple[bool, tuple | None]:
    witness = find_exchange_violation(support)
    return witness is None, witness


# -- Lorentzian certification ---------------------------------------------------------


@dataclass(frozen=True)
class LorentzianCertificate:
    verdict: bool
    failure_witness: dict | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.failure_witness is not None:
            w = dict(self.failure_witness)
            if "hessian" in w:
                w["hessian"] = [[fraction_str(x) for x in row] for row in w["hessian"]]
            for key in ("a", "b"):
                if key in w:
                    w[key] = list(w[key])
            out["failure_witness"] = w
        return out


_memo: dict[SparsePolynomial, dict | None] = {}
_memo_lock = threading.Lock()


def _validate_lorentzian_input(f: SparsePolynomial) -> None:
    if f.is_zero():
        raise ValueError("the zero polynomial has no degree; Lorentzian check needs degree >= 2")
    if not f.is_homogeneous():
        raise ValueError("Lorentzian check needs a homogeneous polynomial")
    if not f.has_nonnegative_coefficients():
        raise ValueError("Lorentzian check needs nonnegative coefficients")
    if f.degree() < 2:
        raise ValueError(f"Lorentzian check needs degree >= 2, got {f.degree()}")


def _normalise(f: SparsePolynomial) -> SparsePolynomial:
    # positive rescaling preserves the property; divide out the leading coefficient
    lead = f.terms[0][1]
    return f if lead == 1 else f.scale(1 / lead)


def _violation(f: SparsePolynomial) -> dict | None:
    """Witness relative to ``f`` (derivative path first), or None when Lorentzian."""
    if f.is_zero():
        return None
    f = _normalise(f)
    cached = _memo.get(f, False)
    if cached is not False:
        return cached
    d = f.degree()
    result = None
    if d == 2:
        h = hessian(f)
        count = positive_eigenvalue_count(h)
        if count > 1:
            result = {"path": [], "kind": "hessian", "hessian": h, "positive_eigenvalue_count": count}
    else:
        bad = find_exchange_violation(f.support())
        if bad is not None:
            a, b, i = bad
            result = {"path": [], "kind": "exchange", "a": a, "b": b, "i": i}
        else:
            for i in range(f.n_vars):
                sub = _violation(partial_derivative(f, i))
                if sub is not None:
                    result = dict(sub, path=[i] + sub["path"])
                    break
    with _memo_lock:
        _memo.setdefault(f, result)
    return result


def is_lorentzian(f: SparsePolynomial) -> LorentzianCertificate:
    """Recursive exact check; zero partial derivatives count as Lorentzian."""
    _validate_lorentzian_input(f)
    witness = _violation(f)
    return LorentzianCertificate(witness is None, witness)


def recheck_witness(f: SparsePolynomial, witness: dict) -> bool:
    """Independently confirm that a failure witness is a genuine violation."""
    g = f
    for i in witness["path"]:
        g = partial_derivative(g, i)
    if g.is_zero():
        return False
    if witness["kind"] == "hessian":
        return g.degree() == 2 and positive_eigenvalue_count(hessian(g)) >= 2
    a, b, i = tuple(witness["a"]), tuple(witness["b"]), witness["i"]
    s = g.support()
    if a not in s or b not in s or a[i] <= b[i]:
        return False
    for j in range(len(a)):
        if a[j] < b[j]:
            c = list(a)
            c[i] -= 1
            c[j] += 1
            if tuple(c) in s:
                return False
    return True


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


# -- polarisation -------------------------------------------------------------------


def mixed_form(f: SparsePolynomial, vectors: Sequence[Sequence]) -> Fraction:
    """(1/d!) d/dλ_1 ... d/dλ_d f(λ_1 v_1 + ... + λ_d v_d) for homogeneous f of degree d."""
    if f.is_zero():
        return Fraction(0)
    if not f.is_homogeneous():
        raise ValueError("mixed form needs a homogeneous polynomial")
    d = f.degree()
    if len(vectors) != d:
        raise ValueError(f"mixed form of a degree-{d} polynomial takes {d} vectors, got {len(vectors)}")
    vs = [[as_fraction(x) for x in v] for v in vectors]
    if any(len(v) != f.n_vars for v in vs):
        raise ValueError("vector length must equal the number of variables")
    full = (1 << d) - 1
    total = Fraction(0)
    for exp, coef in f.terms:
        # coefficient of λ_1...λ_d, tracked over subsets of used λ's
        state = {0: Fraction(1)}
        for k, ek in enumerate(exp):
            for _ in range(ek):
                nxt: dict[int, Fraction] = {}
                for mask, val in state.items():
                    for i in range(d):
                        bit = 1 << i
                        if not mask & bit and vs[i][k]:
                            nxt[mask | bit] = nxt.get(mask | bit, 0) + val * vs[i][k]
                state = nxt
        total += coef * state.get(full, 0)
    return total / math.factorial(d)
