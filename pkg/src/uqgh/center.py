"""Casimir element, central characters and splitting elements."""

from __future__ import annotations

from dataclasses import dataclass

from .field import ONE, RatFunc, as_ratfunc, qpow
from .pbw import AlgebraElement, commutator, generator
from .rep import HighestWeightData

__all__ = [
    "casimir",
    "is_central",
    "hc_projection",
    "CentralCharacterPoint",
    "central_character",
    "casimir_value",
    "characters_equal",
    "splitting_case",
    "splitting_element",
    "verma_splitting_case",
    "verma_splitting_element",
    "NoSplittingElementError",
]

_Q = qpow(1)
_QMQ = qpow(1) - qpow(-1)


def casimir() -> AlgebraElement:
    """C = FE + (qK + q^-1 K^-1 g^2)/(q - q^-1)^2."""
    c = (_QMQ * _QMQ).inv()
    return AlgebraElement(
        {
            (1, 0, 0, 0, 1): ONE,
            (0, 1, 0, 0, 0): _Q * c,
            (0, -1, 2, 0, 0): qpow(-1) * c,
        }
    )


_TEST_GENERATORS = ("E", "F", "K", "g", "h")


def is_central(a: AlgebraElement) -> bool:
    return all(commutator(a, generator(x)).is_zero() for x in _TEST_GENERATORS)


def hc_projection(a: AlgebraElement) -> AlgebraElement:
    """Keep only the terms without E or F."""
    return AlgebraElement({m: c for m, c in a.items() if m[0] == 0 and m[4] == 0})


@dataclass(frozen=True)
class CentralCharacterPoint:
    """Values (a, b, c) of K, g, h on a highest-weight vector."""

    a: RatFunc
    b: RatFunc
    c: RatFunc

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = as_ratfunc(getattr(self, name))
            if not v:
                raise ValueError(f"{name} must be nonzero")
            object.__setattr__(self, name, v)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def _point(p) -> CentralCharacterPoint:
    return p if isinstance(p, CentralCharacterPoint) else CentralCharacterPoint(*p)


def central_character(p, z: AlgebraElement) -> RatFunc:
    """Scalar by which a central ``z`` acts on highest-weight vectors of weight ``p``."""
    p = _point(p)
    if not is_central(z):
        raise ValueError("element is not central")
    total = as_ratfunc(0)
    for (_, m, n, s, _), coeff in hc_projection(z).items():
        try:
            total = total + coeff * p.a**m * p.b**n * p.c**s
        except ZeroDivisionError as exc:
            raise ZeroDivisionError(f"pole evaluating the character: {exc}") from None
    return total


def casimir_value(a, b) -> RatFunc:
    """(qa + q^-1 a^-1 b^2)/(q - q^-1)^2."""
    a, b = as_ratfunc(a), as_ratfunc(b)
    return (_Q * a + qpow(-1) * a.inv() * b * b) / (_QMQ * _QMQ)


def characters_equal(p1, p2) -> bool:
    """Same central character: b = b', c = c' and (a - a')(a a' - q^-2 b^2) = 0."""
    p1, p2 = _point(p1), _point(p2)
    if p1.b != p2.b or p1.c != p2.c:
        return False
    return not ((p1.a - p2.a) * (p1.a * p2.a - qpow(-2) * p1.b * p1.b))


class NoSplittingElementError(ValueError):
    def __init__(self):
        super().__init__("no splitting element exists for these parameters")


def _hw(d) -> HighestWeightData:
    return d if isinstance(d, HighestWeightData) else HighestWeightData(*d)


def splitting_case(first, second) -> str:
    """Which branch applies to V_first, V_second: 'beta', 'alpha' or 'casimir'."""
    d1, d2 = _hw(first), _hw(second)
    if d1.beta != d2.beta:
        return "beta"
    if d1.alpha != d2.alpha:
        return "alpha"
    if d1.epsilon == d2.epsilon and d1.n == d2.n:
        raise NoSplittingElementError()
    return "casimir"


def splitting_element(first, second) -> AlgebraElement:
    """Central element acting as 1 on V_first and 0 on V_second."""
    d1, d2 = _hw(first), _hw(second)
    case = splitting_case(d1, d2)
    if case == "beta":
        return (generator("h") - d2.beta).scale((d1.beta - d2.beta).inv())
    if case == "alpha":
        return (generator("g") - d2.alpha).scale((d1.alpha - d2.alpha).inv())
    eps, m, alpha = d1.epsilon, d1.n, d1.alpha
    eps2, n = d2.epsilon, d2.n
    ee = eps * eps2
    pref = qpow(m + 1) / ((qpow(m - n) - ee) * (qpow(m + n + 2) - ee))
    shift = eps2 * alpha * (qpow(n + 1) + qpow(-n - 1)) / (_QMQ * _QMQ)
    d_mn = (casimir() - shift).scale(pref)
    return d_mn.scale(eps * _QMQ * _QMQ / alpha)


def verma_splitting_case(first, second) -> str:
    """Branch for Verma modules V(a,b,c), V(a',b',c'): 'b', 'c' or 'a'."""
    p1, p2 = _point(first), _point(second)
    if p1.b != p2.b:
        return "b"
    if p1.c != p2.c:
        return "c"
    if p1.a != p2.a and p1.a * p2.a != qpow(-2) * p1.b * p1.b:
        return "a"
    raise NoSplittingElementError()


def verma_splitting_element(first, second) -> AlgebraElement:
    """Central element acting as 1 on V(first) and 0 on V(second)."""
    p1, p2 = _point(first), _point(second)
    case = verma_splitting_case(p1, p2)
    if case == "b":
        return (generator("g") - p2.b).scale((p1.b - p2.b).inv())
    if case == "c":
        return (generator("h") - p2.c).scale((p1.c - p2.c).inv())
    a, a2, b = p1.a, p2.a, p1.b
    coeff = a * a2 * _QMQ * _QMQ / ((a - a2) * (_Q * a * a2 - qpow(-1) * b * b))
    return (casimir() - casimir_value(a2, b)).scale(coeff)
