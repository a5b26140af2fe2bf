import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlor.graphs import (
    WeightedGraph,
    blow_up,
    complete_graph,
    disjoint_union,
    induced_subgraph,
    k_q_circ,
    path_graph,
)
from homlor.homcount import g_chromatic_polynomial, g_volume, hom_count
from homlor.poly import (
    SparsePolynomial,
    clear_cache,
    evaluate,
    hessian,
    is_lorentzian,
    is_m_convex,
    mixed_form,
    partial_derivative,
    quadratic_form,
    recheck_witness,
    scale_variables,
)
from homlor.enumeration import graphs_up_to
from homlor.verify import AfmSampler, random_vector

from conftest import rationals, weighted_graphs


def poly(n, terms):
    return SparsePolynomial.from_dict(n, terms)


X1X2 = poly(2, {(1, 1): 1})


class TestArithmetic:
    def test_canonical(self):
        f = poly(2, {(1, 1): 1, (2, 0): 0})
        assert f.terms == (((1, 1), Fraction(1)),)
        assert f == poly(2, {(1, 1): Fraction(2, 2)})

    def test_ring_ops(self):
        x, y = SparsePolynomial.variable(2, 0), SparsePolynomial.variable(2, 1)
        assert (x + y) * (x - y) == x * x - y * y
        assert (x * y).scale(3).coefficient((1, 1)) == 3

    def test_mixed_rings_rejected(self):
        with pytest.raises(ValueError):
            SparsePolynomial.variable(2, 0) + SparsePolynomial.variable(3, 0)

    def test_json_roundtrip(self):
        f = poly(3, {(2, 1, 0): Fraction(1, 3), (0, 0, 3): 5})
        data = f.to_json()
        assert data["terms"][0]["coef"] in ("5", "1/3")
        assert SparsePolynomial.from_json(data) == f

    def test_homogeneity(self):
        assert poly(2, {(1, 1): 1, (2, 0): 1}).is_homogeneous()
        assert not poly(2, {(1, 1): 1, (1, 0): 1}).is_homogeneous()


class TestDerivatives:
    def test_first_example(self):
        f = poly(3, {(1, 1, 0): 1, (1, 0, 1): 1})
        assert partial_derivative(f, 0) == poly(3, {(0, 1, 0): 1, (0, 0, 1): 1})

    def test_zero(self):
        assert partial_derivative(poly(3, {(0, 1, 1): 1}), 0).is_zero()

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            partial_derivative(X1X2, 2)

    @pytest.mark.parametrize("t", [2, 3, 4])
    @pytest.mark.parametrize(
        "g",
        [complete_graph(4), k_q_circ(3), WeightedGraph.from_matrix([[0, 0, 1], [0, 0, 2], [1, 2, 0]])]
        + [AfmSampler(11, 5).sample(i) for i in range(4)],
    )
    def test_complete_graph_derivative_identity(self, t, g):
        h_t = g_chromatic_polynomial(complete_graph(t), g)
        h_prev = g_chromatic_polynomial(complete_graph(t - 1), g)
        for nu in range(g.n):
            rescaled = scale_variables(h_prev, [g(i, nu) for i in range(g.n)])
            assert partial_derivative(h_t, nu) == rescaled.scale(t)


class TestHessian:
    def test_examples(self):
        assert hessian(X1X2) == ((0, 1), (1, 0))
        assert hessian(poly(1, {(2,): 1})) == ((2,),)
        assert hessian(quadratic_form(complete_graph(3))) == complete_graph(3).weights

    def test_wrong_degree(self):
        with pytest.raises(ValueError):
            hessian(poly(2, {(2, 1): 1}))

    @given(weighted_graphs())
    def test_quadratic_form_hessian_is_graph(self, g):
        if any(any(r) for r in g.weights):
            assert hessian(quadratic_form(g)) == g.weights


class TestMConvex:
    def test_triangle_bases(self):
        assert is_m_convex({(1, 1, 0), (1, 0, 1), (0, 1, 1)}) == (True, None)

    def test_two_corners(self):
        ok, witness = is_m_convex({(2, 0), (0, 2)})
        assert not ok and witness in {((2, 0), (0, 2), 0), ((0, 2), (2, 0), 1)}

    def test_two_disjoint_edges(self):
        f = quadratic_form(disjoint_union(complete_graph(2), complete_graph(2)))
        assert not is_m_convex(f.support())[0]

    def test_mixed_lengths(self):
        with pytest.raises(ValueError):
            is_m_convex({(1, 0), (1, 0, 0)})

    @pytest.mark.parametrize("i", range(30))
    def test_afm_quadratic_support(self, i):
        g = AfmSampler(5, 5).sample(i)
        if any(any(r) for r in g.weights):
            assert is_m_convex(quadratic_form(g).support())[0]


class TestLorentzian:
    def test_triangle_form(self):
        assert is_lorentzian(quadratic_form(complete_graph(3))).verdict

    def test_rejections(self):
        with pytest.raises(ValueError):
            is_lorentzian(poly(2, {}))
        with pytest.raises(ValueError):
            is_lorentzian(poly(2, {(1, 0): 1}))
        with pytest.raises(ValueError):
            is_lorentzian(poly(2, {(1, 1): 1, (1, 0): 1}))
        with pytest.raises(ValueError):
            is_lorentzian(poly(2, {(1, 1): -1}))

    def test_hessian_witness(self):
        f = quadratic_form(disjoint_union(complete_graph(2), complete_graph(2)))
        cert = is_lorentzian(f)
        assert not cert.verdict
        w = cert.failure_witness
        assert w["kind"] == "hessian" and w["positive_eigenvalue_count"] == 2
        assert recheck_witness(f, w)
        assert cert.to_json()["failure_witness"]["hessian"][0][1] == "1"

    def test_k33_in_k3(self):
        k33 = WeightedGraph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
        f = g_chromatic_polynomial(k33, complete_graph(3))
        cert = is_lorentzian(f)
        assert not cert.verdict and recheck_witness(f, cert.failure_witness)

    def test_p2_in_g0(self, g0):
        f = g_chromatic_polynomial(path_graph(2), g0)
        cert = is_lorentzian(f)
        assert not cert.verdict and recheck_witness(f, cert.failure_witness)

    def test_cache_does_not_change_answer(self, g0):
        f = g_chromatic_polynomial(path_graph(2), g0)
        first = is_lorentzian(f)
        clear_cache()
        assert is_lorentzian(f) == first

    def test_scaling_invariant(self):
        f = g_chromatic_polynomial(complete_graph(3), complete_graph(4))
        assert is_lorentzian(f.scale(Fraction(7, 3))).verdict

    def test_recheck_rejects_bogus(self):
        f = quadratic_form(complete_graph(3))
        assert not recheck_witness(f, {"path": [], "kind": "hessian"})
        assert not recheck_witness(f, {"path": [], "kind": "exchange", "a": (1, 1, 0), "b": (0, 1, 1), "i": 0})

    @pytest.mark.parametrize("i", range(12))
    def test_survives_blow_up_and_induced(self, i):
        # Lorentzian h_H(-;G) stays Lorentzian on blow-ups and induced subgraphs of G
        rng = random.Random(i)
        g = AfmSampler(21, 3).sample(i)
        for h in (complete_graph(2), complete_graph(3), path_graph(2)):
            f = g_chromatic_polynomial(h, g)
            if f.is_zero() or not is_lorentzian(f).verdict:
                continue
            sizes = [rng.randint(1, 2) for _ in range(g.n)]
            assert is_lorentzian(g_chromatic_polynomial(h, blow_up(g, sizes))).verdict
            keep = [v for v in range(g.n) if rng.random() < 0.7] or [0]
            sub = induced_subgraph(g, keep)
            hs = g_chromatic_polynomial(h, sub)
            if not hs.is_zero():
                assert is_lorentzian(hs).verdict


def _m_convex_poly(f):
    return f.is_zero() or is_m_convex(f.support())[0]


@pytest.mark.parametrize("h", [h for h in graphs_up_to(4, connected=True) if h.n >= 2])
def test_m_convexity_transfers_from_kq(h):
    if not _m_convex_poly(g_chromatic_polynomial(h, complete_graph(h.n))):
        return
    for i in range(8):
        g = AfmSampler(17, 5).sample(i)
        assert _m_convex_poly(g_chromatic_polynomial(h, g))


class TestMixedForm:
    def test_edge(self):
        assert mixed_form(quadratic_form(complete_graph(2)), [(1, 0), (0, 1)]) == Fraction(1, 2)

    def test_arity(self):
        with pytest.raises(ValueError):
            mixed_form(X1X2, [(1, 1)])

    @given(st.lists(rationals, min_size=3, max_size=3))
    def test_diagonal(self, v):
        f = g_chromatic_polynomial(complete_graph(3), complete_graph(3))
        assert mixed_form(f, [v] * 3) == evaluate(f, v)

    @given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
    def test_symmetric(self, vs):
        f = g_chromatic_polynomial(complete_graph(3), k_q_circ(3))
        base = mixed_form(f, vs)
        for perm in itertools.permutations(vs):
            assert mixed_form(f, list(perm)) == base

    def test_matches_volume_on_indicators(self):
        g = complete_graph(4)
        f = g_chromatic_polynomial(complete_graph(3), g)
        for subsets in itertools.product([(0,), (0, 1), (1, 2, 3), (0, 1, 2, 3)], repeat=3):
            vs = [[1 if c in s else 0 for c in range(4)] for s in subsets]
            assert mixed_form(f, vs) == g_volume(complete_graph(3), vs, g)

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_volume_random(self, seed):
        rng = random.Random(seed)
        g = AfmSampler(seed, 4).sample(0)
        vs = [random_vector(rng, g.n) for _ in range(3)]
        assert mixed_form(g_chromatic_polynomial(complete_graph(3), g), vs) == g_volume(complete_graph(3), vs, g)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(X1X2, [2, 3]) == 6
        assert evaluate(X1X2, [0, 0]) == 0

    def test_all_ones_is_hom(self):
        k3 = complete_graph(3)
        assert evaluate(g_chromatic_polynomial(k3, k3), [1, 1, 1]) == 6 == hom_count(k3, k3)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            evaluate(X1X2, [1])
