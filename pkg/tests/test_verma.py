import pytest

from uqgh import linalg as la
from uqgh.center import casimir, central_character, characters_equal, verma_splitting_element
from uqgh.field import ONE, Q, RatFunc, qfact, qpow
from uqgh.rep import HighestWeightData, check_module, simple_module
from uqgh.verma import (
    act,
    check_relations,
    chevalley_basis_map,
    chevalley_verma_tensor,
    is_simple_verma,
    maximal_vectors,
    simple_quotient_data,
    verma,
    verma_hom,
)

QMQ = qpow(1) - qpow(-1)
BS = [ONE, Q, Q**2 + 3]


def depths(V):
    return [m.depth for m in maximal_vectors(V) if m.depth > 0]


def test_verma_basic_action():
    a, b, c = Q + 2, RatFunc(3), RatFunc(5)
    V = verma(a, b, c, 6)
    assert act(V, "E", V.basis_vector(0)).vector == tuple([0] * 7)
    res = act(V, "E", V.basis_vector(1))
    assert res.vector[0] == (a - a.inv() * b * b) / QMQ
    assert [V.matrices()["K"][p][p] for p in range(7)] == [qpow(-2 * p) * a for p in range(7)]
    assert V.weights()[3] == (qpow(-6) * a, b, c)


def test_verma_rejects_bad_parameters():
    with pytest.raises(ValueError):
        verma(0, 1, 1)
    with pytest.raises(ValueError):
        verma(1, 1, 1, cutoff=0)


def test_truncation_overflow_flag():
    V = verma(Q, 1, 1, 3)
    assert not act(V, "F", V.basis_vector(2)).overflow
    assert act(V, "F", V.basis_vector(3)).inconclusive


def test_relations_on_truncation():
    for a, b in ((Q + 2, RatFunc(3)), (Q**2, ONE), (-qpow(3), Q)):
        ok, name = check_relations(verma(a, b, 7, 10))
        assert ok, name


def test_casimir_on_generator():
    a, b, c = Q + 2, RatFunc(3), RatFunc(5)
    V = verma(a, b, c, 8)
    res = act(V, casimir(), V.basis_vector(0))
    assert not res.overflow
    value = central_character((a, b, c), casimir())
    assert list(res.vector) == la.vec_scale(value, V.basis_vector(0))


def test_maximal_vector_examples():
    b, c = Q + 3, RatFunc(2)
    assert depths(verma(b * qpow(2), b, c, 10)) == [3]
    found = [m for m in maximal_vectors(verma(-b * qpow(4), b, c, 10)) if m.depth]
    assert [(m.depth, m.epsilon) for m in found] == [(5, -1)]
    assert depths(verma(b * (Q + 1), b, c, 10)) == []
    assert maximal_vectors(verma(b, b, c, 10))[0].depth == 0


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("eps", [1, -1])
def test_maximal_vectors_exact_depth(n, eps):
    for b in BS:
        V = verma(eps * b * qpow(n - 1), b, 3, 12)
        found = [m for m in maximal_vectors(V) if m.depth]
        assert [(m.depth, m.epsilon) for m in found] == [(n, eps)]
        w = act(V, "E", V.basis_vector(n))
        assert not any(w.vector)


def test_no_maximal_vectors_for_non_monomial():
    for b in BS:
        for r in (Q + 1, Q**2 + 1, (Q - 3) / (Q + 5), 2 * Q):
            assert depths(verma(b * r, b, 1, 12)) == []


def test_verma_hom_example():
    b, c = Q + 3, RatFunc(2)
    res = verma_hom(qpow(-3) * b, b, c, Q * b, b, c)
    assert res.exists and res.degree == 2 and res.epsilon == 1
    assert res.injective
    assert characters_equal((qpow(-3) * b, b, c), (Q * b, b, c))


def test_verma_hom_none_cases():
    b, c = Q + 3, RatFunc(2)
    assert verma_hom(qpow(-3) * b, b, c, Q * b, b, c + 1).status == "none"
    assert verma_hom(qpow(-3) * b, b, c, Q * b, b + 1, c).status == "none"
    a = b * (Q + 1)
    assert verma_hom(a, b, c, a, b, c).status == "none"


def test_verma_hom_inconclusive_beyond_cutoff():
    b = ONE
    n = 5
    res = verma_hom(qpow(-n - 1) * b, b, 1, qpow(n - 1) * b, b, 1, cutoff=4)
    assert res.status == "inconclusive" and res.degree == 5


def test_verma_hom_iff_equations():
    b, c = Q**2 + 3, RatFunc(7)
    for n in range(1, 6):
        for eps in (1, -1):
            for a_shift in (0, 1):
                for a2_shift in (0, 2):
                    a = eps * qpow(-n - 1 - a_shift) * b
                    a2 = eps * qpow(n - 1 + a2_shift) * b
                    equations = a_shift == 0 and a2_shift == 0
                    res = verma_hom(a, b, c, a2, b, c)
                    assert res.exists == equations
                    if res.exists:
                        assert res.degree == n and res.epsilon == eps and res.injective
                        assert characters_equal((a, b, c), (a2, b, c))


def test_verma_splitting_element_on_truncation():
    b, c = Q + 3, RatFunc(2)
    for p1, p2 in (
        ((Q, b, c), (Q, b + 1, c)),
        ((Q, b, c), (Q, b, c + 4)),
        ((Q, b, c), (Q + 2, b, c)),
    ):
        u = verma_splitting_element(p1, p2)
        V1, V2 = verma(*p1, cutoff=5), verma(*p2, cutoff=5)
        for p in range(5):
            r1 = act(V1, u, V1.basis_vector(p))
            r2 = act(V2, u, V2.basis_vector(p))
            assert not r1.overflow and not r2.overflow
            assert list(r1.vector) == V1.basis_vector(p)
            assert not any(r2.vector)


def test_is_simple_verma_examples():
    b = Q + 3
    r = is_simple_verma(b * qpow(3), b, 1)
    assert r.status == "not-simple" and r.depth == 4 and r.epsilon == 1
    assert is_simple_verma(b * (Q**2 + 1), b, 1, bound=40).status == "simple-up-to-bound"
    assert is_simple_verma(b * qpow(13), b, 1, bound=12).status == "unknown-beyond-bound"
    assert is_simple_verma(b * qpow(12), b, 1, bound=12).status == "not-simple"
    assert is_simple_verma(b * qpow(-2), b, 1).status == "simple-up-to-bound"
    r = is_simple_verma(-b, b, 1)
    assert r.status == "not-simple" and r.depth == 1 and r.epsilon == -1
    assert str(r) == "not-simple(depth 1, eps -1)"


def test_simple_quotient_examples():
    b, c = Q + 3, RatFunc(2)
    d = simple_quotient_data(b * qpow(2), b, c)
    assert d == HighestWeightData(1, 2, b, c) and d.dim == 3
    assert check_module(simple_module(d)).ok
    assert simple_quotient_data(-b, b, c) == HighestWeightData(-1, 0, b, c)
    assert simple_quotient_data(b * (Q + 2), b, c) is None


def test_simple_quotient_matches_maximal_vector():
    # the quotient dimension is the depth of the first maximal vector
    b, c = Q, RatFunc(2)
    for n in range(1, 6):
        for eps in (1, -1):
            a = eps * b * qpow(n - 1)
            assert simple_quotient_data(a, b, c).dim == depths(verma(a, b, c, 12))[0]


@pytest.mark.parametrize("lam, b, c", [(Q + 2, RatFunc(3), RatFunc(5)), (qpow(3), Q, ONE), ((Q - 1) / (Q + 4), -qpow(-1), RatFunc(2))])
def test_chevalley_tensor_intertwines(lam, b, c):
    N = 8
    T = chevalley_verma_tensor(lam, b, c, N)
    V = verma(b * lam, b, c, N).matrices()
    f = chevalley_basis_map(N)
    assert f[3][3] == qfact(3).inv()
    for name in ("E", "F", "K", "g", "h"):
        lhs = la.mat_mul(f, T[name])
        rhs = la.mat_mul(V[name], f)
        cols = N if name == "F" else N + 1
        for i in range(N + 1):
            for j in range(cols):
                assert lhs[i][j] == rhs[i][j], (name, i, j)
