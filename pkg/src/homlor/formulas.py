"""Closed-form list-colouring counts for paths, even cycles and complete multipartite graphs.

Colour lists are nested: the A-side draws from ``a`` colours, the B-side from
``b >= a`` colours containing them.  Everything is integer arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Sequence


def _need_colours(a: int, b: int | None = None) -> None:
    if a < 2:
        raise ValueError(f"closed forms assume at least two colours on the A-side, got a={a}")
    if b is not None and b < a:
        raise ValueError(f"need b >= a, got a={a}, b={b}")


@lru_cache(maxsize=None)
def stirling2(r: int, l: int) -> int:
    """Partitions of an r-set into l nonempty blocks."""
    if r < 0 or l < 0:
        raise ValueError("Stirling numbers need nonnegative arguments")
    if r == 0 and l == 0:
        return 1
    if r == 0 or l == 0 or l > r:
        return 0
    return l * stirling2(r - 1, l) + stirling2(r - 1, l - 1)


def n_path_odd(d: int, a: int, b: int) -> int:
    """Path u1 v1 ... ud vd (length 2d-1), u's from the a-list, v's from the b-list."""
    if d < 1:
        raise ValueError("d must be positive")
    _need_colours(a, b)
    return sum(comb(d - 1, l) * a * (a - 1) ** l * (b - 1) ** (d - l) * (b - 2) ** l for l in range(d))


def n_path_even(d: int, a: int, b: int, orientation: str = "ab") -> int:
    """Path u1 v1 ... ud u(d+1) (length 2d).

    ``"ab"`` colours the d+1 u's from the a-list; ``"ba"`` colours them from the b-list.
    """
    if d < 1:
        raise ValueError("d must be positive")
    _need_colours(a, b)
    if orientation == "ab":
        return sum(comb(d, l) * a * (a - 1) ** l * (b - 1) ** (d - l) * (b - 2) ** l for l in range(d + 1))
    if orientation == "ba":
        return sum(comb(d - 1, l) * a * (a - 1) ** l * (b - 1) ** (d - l + 1) * (b - 2) ** l for l in range(d))
    raise ValueError(f"orientation must be 'ab' or 'ba', got {orientation!r}")


def cycle_chromatic(l: int, a: int) -> int:
    """Proper a-colourings of an l-cycle."""
    if l < 3:
        raise ValueError(f"cycle length must be at least 3, got {l}")
    return (a - 1) ** l + (-1) ** l * (a - 1)


def _cycle_term(l: int, a: int) -> int:
    # l = 0, 1, 2 are the degenerate contracted cycles; the same expression applies
    return (a - 1) ** l + (-1) ** l * (a - 1)


def n_cycle(d: int, a: int, b: int) -> int:
    """Cycle of length 2d with edges u_i v_i and v_i u_(i+1); same value for either orientation."""
    if d < 2:
        raise ValueError(f"even cycles need d >= 2, got {d}")
    _need_colours(a, b)
    return sum(comb(d, l) * _cycle_term(l, a) * (b - 1) ** (d - l) * (b - 2) ** l for l in range(d + 1))


@lru_cache(maxsize=None)
def _multipartite(rs: tuple[int, ...], a: int) -> int:
    if not rs:
        return 1
    if a < 0:
        return 0
    r1, rest = rs[0], rs[1:]
    return sum(
        comb(a, l) * stirling2(r1, l) * factorial(l) * _multipartite(rest, a - l) for l in range(min(a, r1) + 1)
    )


def n_multipartite(rs: Sequence[int], a: int) -> int:
    """hom(K(r_1,...,r_k), K_a), peeling off the first part by the number of colours it uses."""
    if any(r < 0 for r in rs):
        raise ValueError("part sizes must be nonnegative")
    if a < 0:
        raise ValueError("colour count must be nonnegative")
    return _multipartite(tuple(rs), a)


def n_multipartite_first_part(s1: int, rs: Sequence[int], a: int, b: int, orientation: str = "ab") -> int:
    """Colourings of K(s1, r_2, ...) with nested lists A ⊆ B, |A| = a <= |B| = b.

    ``"ab"``: the first part draws from A and the rest from B.
    ``"ba"``: the first part draws from B and the rest from A.
    """
    if s1 < 0 or any(r < 0 for r in rs):
        raise ValueError("part sizes must be nonnegative")
    if not 0 <= a <= b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    rs = tuple(rs)
    if orientation == "ab":
        # the l colours of the first part lie in A ⊆ B and are lost to the rest
        return sum(
            comb(a, l) * stirling2(s1, l) * factorial(l) * _multipartite(rs, b - l) for l in range(min(a, s1) + 1)
        )
    if orientation == "ba":
        # of the l colours of the first part, j fall inside A
        total = 0
        for l in range(min(b, s1) + 1):
            ways = stirling2(s1, l) * factorial(l)
            if not ways:
                continue
            for j in range(max(0, l - (b - a)), min(a, l) + 1):
                total += comb(a, j) * comb(b - a, l - j) * ways * _multipartite(rs, a - j)
        return total
    raise ValueError(f"orientation must be 'ab' or 'ba', got {orientation!r}")
