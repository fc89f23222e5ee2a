import random
from collections import Counter

import pytest

from uqgh import linalg as la
from uqgh.center import casimir, splitting_element
from uqgh.field import ONE, Q, RatFunc, qint, qpow
from uqgh.pbw import generator
from uqgh.rep import (
    ExtensionParams,
    HighestWeightData,
    NotCompletelyReducibleError,
    WeightModule,
    act,
    check_module,
    decompose,
    direct_sum,
    dual_module,
    ext_dims_torus,
    extension_module,
    highest_weight_vectors,
    intertwiner_space,
    is_intertwiner,
    is_split_selfextension,
    is_submodule,
    isomorphic,
    matrix_of,
    simple_module,
    tensor,
    torus_module,
    twisted_dual,
)

QMQ = qpow(1) - qpow(-1)
PARAMS = [
    (Q**3 + 2, RatFunc(3)),
    ((Q + 1) / (Q - 2), Q**2),
    (-qpow(-1), RatFunc(5) / 7),
]


def hw(eps, n, alpha=1, beta=1):
    return HighestWeightData(eps, n, alpha, beta)


def unit_vector(dim, i):
    return [ONE if j == i else RatFunc(0) for j in range(dim)]


# -- simple modules --------------------------------------------------------------


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("n", range(7))
def test_simple_modules_pass_relations(eps, n):
    for alpha, beta in PARAMS:
        M = simple_module(hw(eps, n, alpha, beta))
        assert check_module(M).ok
        expected = eps * alpha * (qpow(n + 1) + qpow(-n - 1)) / (QMQ * QMQ)
        assert la.mat_equal(matrix_of(casimir(), M), la.mat_scale(expected, la.identity(n + 1)))


def test_simple_module_examples():
    M = simple_module(hw(1, 0, Q + 2, 3))
    assert M.dim == 1
    assert la.is_zero_matrix(M.action["E"]) and la.is_zero_matrix(M.action["F"])
    assert M.action["K"][0][0] == Q + 2

    alpha = Q + 2
    M = simple_module(hw(-1, 4, alpha, 3))
    spectrum = [M.action["K"][p][p] for p in range(5)]
    assert spectrum == [-alpha * qpow(4 - 2 * p) for p in range(5)]
    assert len(set(spectrum)) == 5

    M = simple_module(hw(1, 2))
    assert act("E", M, unit_vector(3, 2)) == [0, qint(1), 0]
    assert act("E", M, unit_vector(3, 1)) == [qint(2), 0, 0]


def test_highest_weight_data_validation():
    with pytest.raises(ValueError):
        HighestWeightData(2, 1, 1, 1)
    with pytest.raises(ValueError):
        HighestWeightData(1, -1, 1, 1)
    with pytest.raises(ValueError):
        HighestWeightData(1, 1, 0, 1)
    assert str(hw(1, 2, Q, 1)) == "V(eps=+1, n=2, alpha=q, beta=1)"


def test_check_module_detects_swap():
    M = simple_module(hw(1, 2, Q + 2, 3))
    action = dict(M.action)
    action["K"], action["E"] = action["E"], action["K"]
    for name in ("K^-1", "g^-1", "h^-1"):
        action.pop(name)
    action["K^-1"] = M.action["K^-1"]
    bad = WeightModule(action)
    report = check_module(bad)
    assert not report.ok
    assert report.failed_relation == "K E K^-1 = q^2 E"
    assert report.entry is not None


def test_act_examples():
    d = hw(-1, 3, Q + 2, 3)
    M = simple_module(d)
    v0 = unit_vector(4, 0)
    assert act(generator("E").scale(0) + 1, M, v0) == v0
    assert la.vec_is_zero(act("E", M, v0))
    eps, n, alpha = -1, 3, Q + 2
    value = (qpow(n + 1) * eps * alpha + qpow(-n - 1) * eps * alpha) / (QMQ * QMQ)
    assert act(casimir(), M, v0) == la.vec_scale(value, v0)
    with pytest.raises(ValueError):
        act("E", M, [1, 2])


# -- highest weight vectors and decomposition -------------------------------------


def test_highest_weight_vectors_simple():
    d = hw(-1, 3, Q + 2, 3)
    res = highest_weight_vectors(simple_module(d))
    assert res.diagonalizable
    assert len(res) == 1
    v, weight = res.vectors[0]
    assert weight == d.highest_weight
    assert all(x == 0 for x in v[1:])


def test_highest_weight_vectors_tensor_of_two_doublets():
    a, b = Q + 2, RatFunc(3)
    a2, b2 = qpow(2), RatFunc(5)
    for eps, eps2 in ((1, 1), (1, -1)):
        res = highest_weight_vectors(tensor(simple_module(hw(eps, 1, a, b)), simple_module(hw(eps2, 1, a2, b2))))
        weights = sorted((str(w) for _, w in res.vectors))
        e = eps * eps2
        expected = [(e * a * a2 * qpow(2), a * a2, b * b2), (e * a * a2, a * a2, b * b2)]
        assert weights == sorted(str(w) for w in expected)


def test_tensor_unit_and_torus_twist():
    d = hw(-1, 2, Q + 2, 3)
    M = simple_module(d)
    unit = torus_module(1, 1)
    assert isomorphic(tensor(M, unit), M) is not None
    assert isomorphic(tensor(unit, M), M) is not None
    a2, b2 = Q**2, RatFunc(7)
    twisted = tensor(M, torus_module(a2, b2))
    assert decompose(twisted) == Counter({hw(-1, 2, (Q + 2) * a2, 3 * b2): 1})


def test_tensor_passes_relations():
    M = tensor(simple_module(hw(1, 2, Q + 2, 3)), simple_module(hw(-1, 1, qpow(-1), 2)))
    assert M.dim == 6
    assert check_module(M).ok


def test_decompose_examples():
    a, b, a2, b2 = Q + 2, RatFunc(3), Q**2, RatFunc(5)
    got = decompose(tensor(simple_module(hw(1, 1, a, b)), simple_module(hw(1, 1, a2, b2))))
    assert got == Counter({hw(1, 2, a * a2, b * b2): 1, hw(1, 0, a * a2, b * b2): 1})
    got = decompose(tensor(simple_module(hw(1, 2, a, b)), simple_module(hw(-1, 1, a2, b2))))
    assert got == Counter({hw(-1, 3, a * a2, b * b2): 1, hw(-1, 1, a * a2, b * b2): 1})
    d = hw(-1, 3, a, b)
    assert decompose(simple_module(d)) == Counter({d: 1})


def test_decompose_weight_bookkeeping():
    M = tensor(simple_module(hw(1, 2, Q + 2, 3)), simple_module(hw(-1, 2, qpow(3), 2)))
    parts = decompose(M)
    assert sum(d.dim * k for d, k in parts.items()) == M.dim
    union = Counter()
    for d, k in parts.items():
        for w in simple_module(d).weights:
            union[tuple(str(x) for x in w)] += k
    assert union == Counter(tuple(str(x) for x in w) for w in M.weights)


def test_decompose_rejects_extension():
    M = extension_module(hw(1, 1, Q + 2, 3), ExtensionParams(1, 0))
    with pytest.raises(NotCompletelyReducibleError) as info:
        decompose(M)
    assert info.value.defect > 0


# -- duals -----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(5))
def test_dual_of_simple(n):
    for eps in (1, -1):
        alpha, beta = PARAMS[n % 3]
        M = simple_module(hw(eps, n, alpha, beta))
        D = dual_module(M)
        assert check_module(D).ok
        target = simple_module(hw(eps, n, alpha.inv(), beta.inv()))
        X = isomorphic(D, target)
        assert X is not None and is_intertwiner(X, D, target) and la.is_invertible(X)
        # v_n^* is highest in the dual
        vn = unit_vector(n + 1, n)
        assert la.vec_is_zero(act("E", D, vn))
        assert act("K", D, vn) == la.vec_scale(eps * alpha.inv() * qpow(n), vn)


def test_dual_of_torus():
    a, b = Q + 2, RatFunc(3)
    assert dual_module(torus_module(a, b)) == torus_module(a.inv(), b.inv())


@pytest.mark.parametrize("n", range(5))
def test_twisted_dual_of_simple(n):
    alpha, beta = PARAMS[(n + 1) % 3]
    M = simple_module(hw(-1 if n % 2 else 1, n, alpha, beta))
    T = twisted_dual(M)
    assert check_module(T).ok
    assert isomorphic(T, M) is not None
    assert isomorphic(twisted_dual(T), M) is not None
    assert sorted(map(str, (T.action["K"][i][i] for i in range(M.dim)))) == sorted(
        map(str, (M.action["K"][i][i] for i in range(M.dim)))
    )


# -- isomorphism ------------------------------------------------------------------


def test_isomorphic_examples():
    M = simple_module(hw(1, 2, Q + 2, 3))
    X = isomorphic(M, M)
    assert X is not None and is_intertwiner(X, M, M)
    assert isomorphic(M, simple_module(hw(1, 2, Q + 3, 3))) is None
    assert isomorphic(M, simple_module(hw(-1, 2, Q + 2, 3))) is None
    assert isomorphic(M, simple_module(hw(1, 1, Q + 2, 3))) is None


def test_torus_times_plain_simple():
    eps, n, alpha, beta = -1, 3, Q + 2, RatFunc(3)
    M = tensor(torus_module(alpha, beta), simple_module(hw(eps, n)))
    target = simple_module(hw(eps, n, alpha, beta))
    X = isomorphic(M, target)
    assert X is not None and is_intertwiner(X, M, target)
    assert len(intertwiner_space(M, target)) == 1


# -- extensions -------------------------------------------------------------------


def test_extension_module_examples():
    d = hw(-1, 2, Q + 2, 3)
    split = extension_module(d, ExtensionParams())
    assert isomorphic(split, direct_sum(simple_module(d), simple_module(d))) is not None

    x, y = Q + 1, RatFunc(4)
    M = extension_module(d, ExtensionParams(x, y))
    assert check_module(M).ok
    n = 2
    for p in range(3):
        w2 = unit_vector(6, 3 + p)
        expected = [RatFunc(0)] * 6
        expected[3 + p] = -(Q + 2) * qpow(n - 2 * p)
        expected[p] = -qpow(n - 2 * p) * x
        assert act("K", M, w2) == expected
        expected = [RatFunc(0)] * 6
        expected[3 + p] = RatFunc(3)
        expected[p] = y
        assert act("h", M, w2) == expected


def test_split_detection_random():
    rng = random.Random(8)
    seen = set()
    for i in range(10):
        n = i % 4
        d = hw(rng.choice([1, -1]), n, Q + rng.randint(1, 3), rng.randint(2, 5))
        x = rng.choice([0, 0, 1, -2]) * Q + rng.choice([0, 3])
        y = rng.choice([0, 0, 1, 5]) * qpow(-1)
        if i < 2:
            x, y = 0, 0
        p = ExtensionParams(x, y)
        seen.add(p.is_split)
        M = extension_module(d, p)
        assert check_module(M).ok
        sub = [unit_vector(M.dim, k) for k in range(n + 1)]
        assert is_split_selfextension(M, sub) == p.is_split
    assert seen == {True, False}


def test_split_of_direct_sum_of_non_isomorphic():
    M = direct_sum(simple_module(hw(1, 1, Q + 2, 3)), simple_module(hw(-1, 2, Q + 2, 3)))
    first = [unit_vector(5, k) for k in range(2)]
    second = [unit_vector(5, k) for k in range(2, 5)]
    assert is_split_selfextension(M, first)
    assert is_split_selfextension(M, second)


def test_split_requires_submodule():
    M = simple_module(hw(1, 2, Q + 2, 3))
    assert not is_submodule(M, [unit_vector(3, 1)])
    with pytest.raises(ValueError, match="not a submodule"):
        is_split_selfextension(M, [unit_vector(3, 1)])


def test_parameter_addition_is_class_addition():
    d = hw(1, 2, Q + 2, 3)
    p1, p2 = ExtensionParams(Q, 1), ExtensionParams(2, qpow(-1))
    assert extension_module(d, p1 + p2) == extension_module(d, ExtensionParams(Q + 2, 1 + qpow(-1)))
    # the split class is the additive identity
    assert extension_module(d, p1 + ExtensionParams()) == extension_module(d, p1)


def test_non_diagonalizable_flag():
    d = hw(1, 1, Q + 2, 3)
    res = highest_weight_vectors(extension_module(d, ExtensionParams(1, 0)))
    assert "g" in res.non_diagonalizable
    assert "h" not in res.non_diagonalizable
    assert len(res) == 0
    res = highest_weight_vectors(extension_module(d, ExtensionParams(0, 2)))
    assert res.non_diagonalizable == ("h",)
    res = highest_weight_vectors(extension_module(d, ExtensionParams()))
    assert res.diagonalizable and len(res) == 2


def test_ext_dims_torus_examples():
    a, b = Q + 2, RatFunc(3)
    assert ext_dims_torus(a, b, a, b) == (1, 2, 1)
    assert ext_dims_torus(a, b, a + 1, b) == (0, 0, 0)
    assert ext_dims_torus(a, b, a, b * 2) == (0, 0, 0)
    with pytest.raises(ValueError):
        ext_dims_torus(0, b, a, b)


# -- splitting elements acting on direct sums -------------------------------------


@pytest.mark.parametrize(
    "first, second",
    [
        (hw(1, 2, Q, 2), hw(1, 1, Q, 3)),
        (hw(1, 1, Q + 1, 2), hw(-1, 3, qpow(2), 2)),
        (hw(1, 2, Q + 1, 2), hw(-1, 2, Q + 1, 2)),
    ],
)
def test_splitting_element_projects(first, second):
    M = direct_sum(simple_module(first), simple_module(second))
    P = matrix_of(splitting_element(first, second), M)
    assert la.mat_equal(la.mat_mul(P, P), P)
    expected = la.block_diag(la.identity(first.dim), la.zeros(second.dim, second.dim))
    assert la.mat_equal(P, expected)
