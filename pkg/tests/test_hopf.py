import random

from uqgh.field import ONE, ZERO, qpow
from uqgh.hopf import (
    TensorElement,
    antipode,
    check_hopf_axioms,
    coproduct,
    counit,
    default_sample,
    random_element,
    tensor,
    tensor_product,
)
from uqgh.pbw import apply_homomorphism, generator, monomial, multiply, normalize, scalar

E, F, K, Ki, g, gi, h, hi = (generator(n) for n in ("E", "F", "K", "K^-1", "g", "g^-1", "h", "h^-1"))
QMQ_INV = (qpow(1) - qpow(-1)).inv()


def test_coproduct_generators():
    assert coproduct(K) == tensor(K, K)
    assert coproduct(E) == tensor(hi, E) + tensor(E, multiply(h, K))
    assert coproduct(F) == tensor(multiply(multiply(Ki, h), g * g), F) + tensor(F, hi)
    for z in (g, gi, h, hi, Ki):
        assert coproduct(z) == tensor(z, z)


def test_coproduct_respects_ef_relation():
    lhs = tensor_product(coproduct(E), coproduct(F))
    rhs = coproduct(multiply(F, E) + (K - multiply(Ki, g * g)).scale(QMQ_INV))
    assert lhs == rhs
    assert coproduct(multiply(E, F)) == lhs


def test_counit_examples():
    assert counit(normalize("K K g^-1 h")) == ONE
    assert counit(E) == ZERO
    assert counit(multiply(multiply(F, K), E).scale(3) + g.scale(5)) == 5


def test_antipode_examples():
    assert antipode(E) == -multiply(E, Ki)
    assert antipode(K) == Ki
    assert antipode(F) == -multiply(multiply(K, F), gi * gi)
    # two paths to S^2(E): reversing S(-E K^-1) by hand, and conjugation by K
    by_hand = -multiply(antipode(Ki), antipode(E))
    assert antipode(antipode(E)) == by_hand
    assert by_hand == multiply(multiply(K, E), Ki)
    assert by_hand == E.scale(qpow(2))


def test_antipode_on_e_by_hand():
    # m(S (x) id) Delta(E) = S(h^-1) E + S(E) h K
    total = multiply(antipode(hi), E) + multiply(antipode(E), multiply(h, K))
    assert total.is_zero()


def test_counit_of_antipode_and_unit():
    rng = random.Random(11)
    assert antipode(scalar(1)) == scalar(1)
    for _ in range(30):
        a = random_element(rng)
        assert counit(antipode(a)) == counit(a)


def test_default_sample_passes():
    sample, pairs = default_sample(n_random=50, seed=0)
    report = check_hopf_axioms(sample, pairs)
    assert report.ok, report.summary()
    counts = report.counts()
    assert all(n > 0 for n in counts.values())
    assert report.to_dict()["failures"] == []


def test_group_like_trivial():
    report = check_hopf_axioms([K])
    assert report.ok


def _broken_delta_letter(x):
    # drops the h in E (x) hK
    if x == "E":
        return TensorElement(2, {((0, 0, 0, -1, 0), (0, 0, 0, 0, 1)): 1, ((0, 0, 0, 0, 1), (0, 1, 0, 0, 0)): 1})
    return coproduct(generator(x) if x != "1" else scalar(1))


def test_broken_coproduct_detected():
    cache = {}

    def bad_delta(a):
        return apply_homomorphism(a, _broken_delta_letter, tensor_product, cache)

    report = check_hopf_axioms([E, F, K], delta=bad_delta)
    assert not report.ok
    failed = {c.axiom for c in report.failures}
    assert "coassociativity" in failed or "antipode" in failed
    assert all(c.witness for c in report.failures)
    assert "FAIL" in report.summary()


def test_broken_antipode_detected():
    def bad_antipode(a):
        return antipode(a).scale(-1) if any(t for (_, _, _, _, t) in a.support()) else antipode(a)

    report = check_hopf_axioms([E], antipode_fn=bad_antipode)
    assert [c.axiom for c in report.failures] == ["antipode"]


def test_tensor_rendering():
    assert str(tensor(K, E)) == "K ⊗ E"
    assert str(TensorElement(2)) == "0"


def test_monomial_coproduct_is_multiplicative():
    a = monomial((2, -1, 1, 0, 1))
    expected = tensor_product(
        tensor_product(tensor_product(coproduct(F), coproduct(F)), tensor_product(coproduct(Ki), coproduct(g))),
        coproduct(E),
    )
    assert coproduct(a) == expected
