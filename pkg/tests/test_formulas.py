import itertools

import pytest

from homlor import formulas as F
from homlor.graphs import complete_graph, complete_multipartite, cycle_graph, path_graph, tensor_with_k2
from homlor.homcount import bipartite_hom_count, hom_count
from homlor.verify import (
    oracle_cycle,
    oracle_multipartite,
    oracle_multipartite_first_part,
    oracle_path_even,
    oracle_path_odd,
)


class TestStirling:
    @pytest.mark.parametrize("r,l,value", [(3, 2, 3), (4, 2, 7), (0, 0, 1), (5, 0, 0), (2, 3, 0), (6, 3, 90)])
    def test_values(self, r, l, value):
        assert F.stirling2(r, l) == value

    def test_log_concave(self):
        for r in range(13):
            for l in range(1, r + 1):
                assert F.stirling2(r, l) ** 2 >= F.stirling2(r, l - 1) * F.stirling2(r, l + 1)

    def test_row_sums_are_bell(self):
        bell = [1, 1, 2, 5, 15, 52, 203, 877]
        assert [sum(F.stirling2(r, l) for l in range(r + 1)) for r in range(8)] == bell


class TestExamples:
    def test_path_odd(self):
        assert F.n_path_odd(1, 2, 3) == 4
        assert F.n_path_odd(2, 2, 3) == 12
        assert F.n_path_odd(2, 3, 3) == 24

    def test_path_even(self):
        assert F.n_path_even(1, 2, 3, "ab") == 6
        assert F.n_path_even(1, 2, 3, "ba") == 8
        assert F.n_path_even(1, 3, 3, "ab") == F.n_path_even(1, 3, 3, "ba") == 12

    def test_cycle(self):
        assert F.n_cycle(2, 3, 3) == 18
        assert F.n_cycle(2, 2, 3) == 10
        assert F.n_cycle(2, 2, 2) == 2

    def test_cycle_chromatic(self):
        assert [F.cycle_chromatic(3, 3), F.cycle_chromatic(4, 3), F.cycle_chromatic(5, 2)] == [6, 18, 0]

    def test_multipartite(self):
        assert F.n_multipartite([3], 2) == 8
        assert F.n_multipartite([1, 1, 1], 4) == 24
        assert F.n_multipartite([2, 1], 3) == 12
        assert F.n_multipartite([], 5) == 1

    def test_first_part(self):
        assert F.n_multipartite_first_part(1, [1], 2, 3) == 4
        assert F.n_multipartite_first_part(0, [2, 1], 2, 4) == F.n_multipartite([2, 1], 4)
        assert F.n_multipartite_first_part(2, [1, 2], 3, 3) == F.n_multipartite([2, 1, 2], 3)

    @pytest.mark.parametrize(
        "call",
        [
            lambda: F.n_path_odd(1, 1, 3),
            lambda: F.n_path_odd(0, 2, 3),
            lambda: F.n_path_even(1, 3, 2),
            lambda: F.n_path_even(1, 2, 3, "xy"),
            lambda: F.n_cycle(1, 2, 3),
            lambda: F.cycle_chromatic(2, 3),
            lambda: F.n_multipartite([-1], 2),
            lambda: F.n_multipartite_first_part(1, [1], 3, 2),
        ],
    )
    def test_rejections(self, call):
        with pytest.raises(ValueError):
            call()


class TestDiagonal:
    @pytest.mark.parametrize("d", range(2, 6))
    @pytest.mark.parametrize("a", range(2, 7))
    def test_cycle_diagonal(self, d, a):
        assert F.n_cycle(d, a, a) == F.cycle_chromatic(2 * d, a)

    @pytest.mark.parametrize("d", range(1, 6))
    @pytest.mark.parametrize("a", range(2, 7))
    def test_path_diagonal(self, d, a):
        assert F.n_path_odd(d, a, a) == a * (a - 1) ** (2 * d - 1)
        assert F.n_path_even(d, a, a, "ab") == F.n_path_even(d, a, a, "ba") == a * (a - 1) ** (2 * d)


class TestOracles:
    # the full grid runs in the acceptance module; this is a quick slice
    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("a,b", [(2, 2), (2, 4), (3, 5)])
    def test_paths_and_cycles(self, d, a, b):
        assert F.n_path_odd(d, a, b) == oracle_path_odd(d, a, b)
        for o in ("ab", "ba"):
            assert F.n_path_even(d, a, b, o) == oracle_path_even(d, a, b, o)
        if d >= 2:
            assert F.n_cycle(d, a, b) == oracle_cycle(d, a, b)

    @pytest.mark.parametrize("rs", [[1], [2, 1], [3, 2], [1, 1, 1], [2, 2, 1]])
    def test_multipartite(self, rs):
        for a in range(0, 5):
            assert F.n_multipartite(rs, a) == oracle_multipartite(rs, a)
        for s1, a, b in itertools.product(range(3), range(1, 4), range(1, 5)):
            if a <= b:
                for o in ("ab", "ba"):
                    assert F.n_multipartite_first_part(s1, rs, a, b, o) == oracle_multipartite_first_part(s1, rs, a, b, o)

    def test_oracle_labelling_matches_tensor(self):
        # N(P;a,b) N(P;b,a) is the bipartite count of the tensor with nested lists
        for d in (1, 2):
            p = path_graph(2 * d - 1)
            hb = tensor_with_k2(p)
            for a, b in ((2, 3), (3, 4)):
                direct = bipartite_hom_count(hb, complete_graph(b), range(a), range(b))
                assert direct == F.n_path_odd(d, a, b) ** 2


FAMILIES = [path_graph(1), path_graph(2), path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(6)] + [
    complete_multipartite(p) for p in ([1, 1], [2, 1], [1, 1, 1], [2, 2])
]


def _orbit_representatives(q):
    # (A, B) up to the symmetry of K_q is fixed by |A \ B|, |B \ A|, |A & B|
    for i, j, k in itertools.product(range(q + 1), repeat=3):
        if i + j + k <= q and i + k <= j + k:
            a = list(range(i)) + list(range(i, i + k))
            b = list(range(i, i + k)) + list(range(i + k, i + k + j))
            yield a, b, i, j, k


@pytest.mark.parametrize("h", FAMILIES, ids=lambda g: repr(g)[:40])
def test_nested_lists_are_worst(h):
    hb = tensor_with_k2(h)
    for q in range(1, 6):
        g = complete_graph(q)
        for a, b, i, j, k in _orbit_representatives(q):
            # A' keeps A & B and fills up with vertices of B \ A
            nested = list(range(i, i + k)) + list(range(i + k, i + k + i))
            assert len(nested) == len(a) and set(nested) <= set(b)
            assert bipartite_hom_count(hb, g, a, b) >= bipartite_hom_count(hb, g, nested, b)


def test_first_part_product_inequality():
    for k in range(1, 4):
        for rs in itertools.product(range(1, 4), repeat=k):
            for a in range(1, 7):
                for b in range(a, 7):
                    lhs = F.n_multipartite(rs, a) * F.n_multipartite(rs, b)
                    rhs = F.n_multipartite_first_part(rs[0], rs[1:], a, b, "ab") * F.n_multipartite_first_part(
                        rs[0], rs[1:], a, b, "ba"
                    )
                    assert lhs <= rhs, (rs, a, b)


def test_multipartite_equals_hom():
    for rs in ([1, 2], [3, 1, 1], [2, 2, 2]):
        for a in range(1, 6):
            assert F.n_multipartite(rs, a) == hom_count(complete_multipartite(rs), complete_graph(a))
