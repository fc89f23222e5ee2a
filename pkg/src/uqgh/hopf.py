"""Coproduct, counit and antipode of U_{g,h}, plus a sample-based axiom checker."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .field import ONE, ZERO, RatFunc, as_ratfunc, qpow
from .pbw import (
    UNIT,
    AlgebraElement,
    Monomial,
    _sort_key,
    apply_antihomomorphism,
    apply_homomorphism,
    generator,
    mono_product,
    multiply,
    render_element,
    render_monomial,
    scalar,
)

__all__ = [
    "TensorElement",
    "tensor",
    "coproduct",
    "counit",
    "antipode",
    "apply_at",
    "coproduct_at",
    "counit_at",
    "antipode_at",
    "multiply_factors",
    "AxiomCheck",
    "HopfReport",
    "check_hopf_axioms",
    "random_element",
    "default_sample",
]

Key = tuple[Monomial, ...]


class TensorElement:
    """Linear combination of pure tensors of PBW monomials, of fixed arity."""

    __slots__ = ("_terms", "arity")

    def __init__(self, arity: int, terms: dict[Key, RatFunc] | None = None):
        self.arity = arity
        self._terms: dict[Key, RatFunc] = {}
        for key, c in (terms or {}).items():
            key = tuple(tuple(m) for m in key)
            if len(key) != arity:
                raise ValueError(f"tensor key {key} does not have arity {arity}")
            c = as_ratfunc(c)
            if c:
                self._terms[key] = self._terms.get(key, ZERO) + c
                if not self._terms[key]:
                    del self._terms[key]

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.arity = arity
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Key, RatFunc]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "TensorElement"):
        if not isinstance(other, TensorElement):
            return False
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, ZERO) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return TensorElement._raw(self.arity, acc)

    def __neg__(self):
        return TensorElement._raw(self.arity, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = as_ratfunc(c)
        if not c:
            return TensorElement(self.arity)
        return TensorElement._raw(self.arity, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, TensorElement):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_product(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    __hash__ = None

    def sorted_keys(self) -> list[Key]:
        return sorted(self._terms, key=lambda k: tuple(_sort_key(m) for m in k), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, key in enumerate(self.sorted_keys()):
            c = self._terms[key]
            neg = c.is_negative_looking()
            c = -c if neg else c
            body = " ⊗ ".join(render_monomial(m) for m in key)
            if not c.is_one():
                body = f"({c}) {body}"
            parts.append(("-" if neg else "") + body if i == 0 else (" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"TensorElement({self.arity}, {str(self)!r})"


def tensor(*factors: AlgebraElement) -> TensorElement:
    """Pure tensor of algebra elements, expanded in monomials."""
    acc: dict[Key, RatFunc] = {}
    for combo in itertools.product(*(f.items() for f in factors)):
        key = tuple(m for m, _ in combo)
        c = ONE
        for _, ci in combo:
            c = c * ci
        v = acc.get(key, ZERO) + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return TensorElement._raw(len(factors), acc)


def tensor_product(a: TensorElement, b: TensorElement) -> TensorElement:
    """Factorwise product in the tensor power algebra."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    acc: dict[Key, RatFunc] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            pieces = [mono_product(x, y) for x, y in zip(ka, kb)]
            cab = ca * cb
            for combo in itertools.product(*pieces):
                c = cab
                for _, ci in combo:
                    c = c * ci
                key = tuple(m for m, _ in combo)
                v = acc.get(key, ZERO) + c
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
    return TensorElement._raw(a.arity, acc)


def _mono(l=0, m=0, n=0, s=0, t=0) -> Monomial:
    return (l, m, n, s, t)


def _coproduct_letter(x: str) -> TensorElement:
    if x == "1":
        return TensorElement(2, {(UNIT, UNIT): 1})
    if x == "E":
        return TensorElement(2, {(_mono(s=-1), _mono(t=1)): 1, (_mono(t=1), _mono(m=1, s=1)): 1})
    if x == "F":
        return TensorElement(2, {(_mono(m=-1, n=2, s=1), _mono(l=1)): 1, (_mono(l=1), _mono(s=-1)): 1})
    mono = generator(x).support()[0]
    return TensorElement(2, {(mono, mono): 1})


_DELTA_CACHE: dict = {}


def coproduct(a: AlgebraElement) -> TensorElement:
    """Δ extended multiplicatively from the generators."""
    return apply_homomorphism(a, _coproduct_letter, tensor_product, _DELTA_CACHE)


def counit(a: AlgebraElement) -> RatFunc:
    """ε: 1 on group-likes, 0 on anything containing E or F."""
    total = ZERO
    for (l, _, _, _, t), c in a.items():
        if l == 0 and t == 0:
            total = total + c
    return total


_S_IMAGES: dict[str, AlgebraElement] = {}


def _antipode_letter(x: str) -> AlgebraElement:
    if not _S_IMAGES:
        E, F, K, k, G = (generator(y) for y in "EFKkG")
        _S_IMAGES.update(
            {
                "1": scalar(1),
                "E": -multiply(E, k),
                "F": -multiply(multiply(K, F), G * G),
                "K": k,
                "k": K,
                "g": G,
                "G": generator("g"),
                "h": generator("H"),
                "H": generator("h"),
            }
        )
    return _S_IMAGES[x]


_S_CACHE: dict = {}


def antipode(a: AlgebraElement) -> AlgebraElement:
    """S extended as an anti-homomorphism."""
    return apply_antihomomorphism(a, _antipode_letter, multiply, _S_CACHE)


# -- operations on one tensor factor ------------------------------------------


def apply_at(t: TensorElement, i: int, fn: Callable[[Monomial], object], out_arity: int) -> TensorElement:
    """Apply a linear map to factor ``i``.

    ``fn(mono)`` returns an AlgebraElement (``out_arity`` 1), a TensorElement
    (spliced in place) or a scalar (``out_arity`` 0, factor removed).
    """
    acc: dict[Key, RatFunc] = {}
    cache: dict = {}
    for key, c in t._terms.items():
        mono = key[i]
        img = cache.get(mono)
        if img is None:
            img = cache[mono] = fn(mono)
        if out_arity == 0:
            pieces = [((), as_ratfunc(img))]
        elif isinstance(img, TensorElement):
            pieces = list(img.items())
        else:
            pieces = [((m,), ci) for m, ci in img.items()]
        for mid, ci in pieces:
            if not ci:
                continue
            new = key[:i] + tuple(mid) + key[i + 1 :]
            v = acc.get(new, ZERO) + c * ci
            if v:
                acc[new] = v
            else:
                acc.pop(new, None)
    return TensorElement._raw(t.arity - 1 + out_arity, acc)


def _as_elem(mono: Monomial) -> AlgebraElement:
    return AlgebraElement._raw({mono: ONE})


def coproduct_at(t: TensorElement, i: int) -> TensorElement:
    return apply_at(t, i, lambda m: coproduct(_as_elem(m)), 2)


def counit_at(t: TensorElement, i: int) -> TensorElement:
    return apply_at(t, i, lambda m: counit(_as_elem(m)), 0)


def antipode_at(t: TensorElement, i: int) -> TensorElement:
    return apply_at(t, i, lambda m: antipode(_as_elem(m)), 1)


def multiply_factors(t: TensorElement) -> AlgebraElement:
    """The multiplication map A⊗...⊗A -> A."""
    total = AlgebraElement()
    for key, c in t._terms.items():
        prod = scalar(c)
        for m in key:
            prod = multiply(prod, _as_elem(m))
        total = total + prod
    return total


def tensor_to_element(t: TensorElement) -> AlgebraElement:
    """Identify a 1-fold tensor with an algebra element."""
    if t.arity != 1:
        raise ValueError(f"expected arity 1, got {t.arity}")
    return AlgebraElement({k[0]: c for k, c in t.items()})


# -- axiom checker --------------------------------------------------------------

AXIOMS = ("coassociativity", "counit", "antipode", "coproduct-multiplicative", "counit-multiplicative")


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    input: str
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "input": self.input, "passed": self.passed, "witness": self.witness}


@dataclass
class HopfReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> dict[str, int]:
        out = {a: 0 for a in AXIOMS}
        for c in self.checks:
            out[c.axiom] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": len(self.checks),
            "counts": self.counts(),
            "failures": [c.to_dict() for c in self.failures],
        }

    def summary(self) -> str:
        lines = [f"{a}: {n} checks" for a, n in self.counts().items()]
        for c in self.failures:
            lines.append(f"FAIL {c.axiom} on {c.input}: first differing term {c.witness}")
        lines.append("all Hopf axioms hold" if self.ok else f"{len(self.failures)} violation(s)")
        return "\n".join(lines)


def _witness(diff) -> str | None:
    if isinstance(diff, TensorElement):
        if diff.is_zero():
            return None
        key = diff.sorted_keys()[0]
        return str(TensorElement._raw(diff.arity, {key: diff._terms[key]}))
    if isinstance(diff, AlgebraElement):
        if diff.is_zero():
            return None
        mono = diff.support()[0]
        return render_element(AlgebraElement._raw({mono: diff.coefficient(mono)}))
    return None if not diff else str(diff)


def _element_checks(a: AlgebraElement, delta, counit_fn, antipode_fn) -> list[AxiomCheck]:
    label = render_element(a)
    checks = []
    d = delta(a)

    left = apply_at(d, 0, lambda m: delta(_as_elem(m)), 2)
    right = apply_at(d, 1, lambda m: delta(_as_elem(m)), 2)
    w = _witness(left - right)
    checks.append(AxiomCheck("coassociativity", label, w is None, w))

    as1 = TensorElement(1, {(m,): c for m, c in a.items()})
    l1 = apply_at(d, 0, lambda m: counit_fn(_as_elem(m)), 0)
    r1 = apply_at(d, 1, lambda m: counit_fn(_as_elem(m)), 0)
    w = _witness(l1 - as1) or _witness(r1 - as1)
    checks.append(AxiomCheck("counit", label, w is None, w))

    unit = scalar(counit_fn(a))
    ls = multiply_factors(apply_at(d, 0, lambda m: antipode_fn(_as_elem(m)), 1))
    rs = multiply_factors(apply_at(d, 1, lambda m: antipode_fn(_as_elem(m)), 1))
    w = _witness(ls - unit) or _witness(rs - unit)
    checks.append(AxiomCheck("antipode", label, w is None, w))
    return checks


def _pair_checks(a: AlgebraElement, b: AlgebraElement, delta, counit_fn) -> list[AxiomCheck]:
    label = f"({render_element(a)}) * ({render_element(b)})"
    ab = multiply(a, b)
    w = _witness(delta(ab) - tensor_product(delta(a), delta(b)))
    out = [AxiomCheck("coproduct-multiplicative", label, w is None, w)]
    diff = counit_fn(ab) - counit_fn(a) * counit_fn(b)
    out.append(AxiomCheck("counit-multiplicative", label, not diff, None if not diff else str(diff)))
    return out


def check_hopf_axioms(
    sample: Sequence[AlgebraElement],
    pairs: Iterable[tuple[AlgebraElement, AlgebraElement]] | None = None,
    *,
    delta: Callable = coproduct,
    counit_fn: Callable = counit,
    antipode_fn: Callable = antipode,
) -> HopfReport:
    """Check the Hopf axioms exactly on ``sample``.

    Multiplicativity of Δ and ε is checked on ``pairs`` (default: consecutive
    pairs of the sample plus each element squared).  The structure maps can
    be swapped out, which is how the tests show that a broken coproduct is
    caught.
    """
    report = HopfReport()
    sample = list(sample)
    for a in sample:
        report.checks.extend(_element_checks(a, delta, counit_fn, antipode_fn))
    if pairs is None:
        pairs = list(zip(sample, sample[1:])) + [(a, a) for a in sample]
    for a, b in pairs:
        report.checks.extend(_pair_checks(a, b, delta, counit_fn))
    return report


_RANDOM_LETTERS = ("E", "F", "K", "K^-1", "g", "g^-1", "h", "h^-1")


def random_element(rng: random.Random, max_terms: int = 3, max_len: int = 3) -> AlgebraElement:
    """Random linear combination of words of length at most ``max_len``."""
    total = AlgebraElement()
    for _ in range(rng.randint(1, max_terms)):
        word = [rng.choice(_RANDOM_LETTERS) for _ in range(rng.randint(0, max_len))]
        coeff = rng.choice([1, -1, 2, 3]) * qpow(rng.randint(-2, 2))
        if rng.random() < 0.3:
            coeff = coeff + rng.randint(1, 3)
        elem = scalar(coeff)
        for x in word:
            elem = multiply(elem, generator(x))
        total = total + elem
    return total


def default_sample(n_random: int = 50, seed: int = 0, max_len: int = 3):
    """Generators, generator pairs and seeded random elements.

    Returns ``(sample, pairs)`` for :func:`check_hopf_axioms`.
    """
    gens = [generator(x) for x in _RANDOM_LETTERS]
    rng = random.Random(seed)
    randoms = [random_element(rng, max_len=max_len) for _ in range(n_random)]
    products = [multiply(a, b) for a in gens for b in gens]
    sample = gens + products + randoms
    pairs = [(a, b) for a in gens for b in gens] + list(zip(randoms, randoms[1:]))
    return sample, pairs
