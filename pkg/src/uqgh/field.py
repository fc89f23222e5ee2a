"""Exact arithmetic in the rational function field Q(q).

Every scalar in the package is a :class:`RatFunc`.  Values are kept in a
canonical form (coprime numerator and denominator, monic denominator) so
that equality is a structural comparison.  Polynomial arithmetic and gcds
are delegated to FLINT's ``fmpq_poly``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from flint import fmpq, fmpq_poly

__all__ = [
    "RatFunc",
    "PoleError",
    "Q",
    "ZERO",
    "ONE",
    "as_ratfunc",
    "qpow",
    "qint",
    "qfact",
    "evaluate",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


_POLY_ONE = fmpq_poly([1])
_POLY_ZERO = fmpq_poly([])


def _to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, _RationalABC):
        return fmpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational number")


def _to_fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _is_monomial(p: fmpq_poly) -> bool:
    coeffs = p.coeffs()
    return sum(1 for c in coeffs if c != 0) == 1


def _low_degree(p: fmpq_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no low degree")


class RatFunc:
    """A rational function in ``q`` with rational coefficients.

    Immutable.  Construct from ints/Fractions (``RatFunc(3)``), from two
    ``fmpq_poly`` objects, or via :func:`qpow`, :func:`qint` and the
    arithmetic operators.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=None, _canonical: bool = False):
        if isinstance(num, RatFunc) and den is None:
            self._num, self._den, self._hash = num._num, num._den, num._hash
            return
        if not isinstance(num, fmpq_poly):
            num = fmpq_poly([_to_fmpq(num)])
        if den is None:
            den = _POLY_ONE
        elif not isinstance(den, fmpq_poly):
            den = fmpq_poly([_to_fmpq(den)])
        if not _canonical:
            if den == 0:
                raise ZeroDivisionError("rational function with zero denominator")
            if num == 0:
                num, den = _POLY_ZERO, _POLY_ONE
            else:
                if den.degree() > 0:
                    g = num.gcd(den)
                    if g.degree() > 0:
                        num = num // g
                        den = den // g
                lc = den.coeffs()[-1]
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self._num = num
        self._den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        """Parse the textual form, e.g. ``"(q^2+1+q^-2)"`` or ``"q/(q^2 - 1)"``."""
        from .parser import parse_scalar

        return parse_scalar(text)

    @classmethod
    def from_laurent(cls, coeffs: dict[int, object]) -> "RatFunc":
        """Build ``sum c_k q^k`` from a mapping exponent -> rational coefficient."""
        coeffs = {k: c for k, c in coeffs.items() if c != 0}
        if not coeffs:
            return ZERO
        low = min(coeffs)
        shift = -low if low < 0 else 0
        top = max(coeffs) + shift
        cs = [fmpq(0)] * (top + 1)
        for k, c in coeffs.items():
            cs[k + shift] = _to_fmpq(c)
        den = fmpq_poly([0] * shift + [1]) if shift else _POLY_ONE
        return cls(fmpq_poly(cs), den, _canonical=True)

    # -- accessors ------------------------------------------------------------

    @property
    def numerator(self) -> list[Fraction]:
        """Numerator coefficients, constant term first."""
        return [_to_fraction(c) for c in self._num.coeffs()]

    @property
    def denominator(self) -> list[Fraction]:
        """Monic denominator coefficients, constant term first."""
        return [_to_fraction(c) for c in self._den.coeffs()]

    def is_zero(self) -> bool:
        return self._num == 0

    def is_one(self) -> bool:
        return self._num == _POLY_ONE and self._den == _POLY_ONE

    def is_constant(self) -> bool:
        return self._den == _POLY_ONE and self._num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return _to_fraction(self._num.coeffs()[0]) if self._num != 0 else Fraction(0)

    def as_laurent(self) -> dict[int, Fraction] | None:
        """Return ``{exponent: coeff}`` if this is a Laurent polynomial, else None."""
        if self._num == 0:
            return {}
        if not _is_monomial(self._den):
            return None
        shift = self._den.degree()
        return {
            i - shift: _to_fraction(c) for i, c in enumerate(self._num.coeffs()) if c != 0
        }

    def laurent_monomial(self) -> tuple[Fraction, int] | None:
        """``(c, k)`` when the value equals ``c*q^k``; None otherwise."""
        if self._num == 0 or not _is_monomial(self._num) or not _is_monomial(self._den):
            return None
        k = self._num.degree() - self._den.degree()
        return _to_fraction(self._num.coeffs()[-1]), k

    def signed_qpower(self) -> tuple[int, int] | None:
        """``(eps, k)`` when the value equals ``eps*q^k`` with ``eps = +-1``."""
        mono = self.laurent_monomial()
        if mono is None or mono[0] not in (1, -1):
            return None
        return int(mono[0]), mono[1]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._num == 0:
            return self
        if self._num == 0:
            return other
        if self._den == other._den:
            return RatFunc(self._num + other._num, self._den)
        if other._den == _POLY_ONE:
            return RatFunc(self._num + other._num * self._den, self._den, _canonical=True)
        if self._den == _POLY_ONE:
            return RatFunc(self._num * other._den + other._num, other._den, _canonical=True)
        return RatFunc(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self._num, self._den, _canonical=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num == 0 or other._num == 0:
            return ZERO
        if other._den == _POLY_ONE and other._num.degree() == 0:
            c = other._num.coeffs()[0]
            return RatFunc(self._num * c, self._den, _canonical=True)
        if self._den == _POLY_ONE and self._num.degree() == 0:
            c = self._num.coeffs()[0]
            return RatFunc(other._num * c, other._den, _canonical=True)
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self._num == 0:
            raise ZeroDivisionError("division by zero rational function")
        num, den = self._den, self._num
        lc = den.coeffs()[-1]
        if lc != 1:
            num = num / lc
            den = den / lc
        return RatFunc(num, den, _canonical=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        if n == 0:
            return ONE
        return RatFunc(self._num**n, self._den**n, _canonical=True)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                # agree with hash(Fraction) for constants
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(
                    (
                        tuple((int(c.p), int(c.q)) for c in self._num.coeffs()),
                        tuple((int(c.p), int(c.q)) for c in self._den.coeffs()),
                    )
                )
        return self._hash

    def __bool__(self):
        return self._num != 0

    # -- evaluation & printing ------------------------------------------------

    def __call__(self, q0) -> Fraction:
        return evaluate(self, q0)

    def is_negative_looking(self) -> bool:
        """True when the leading numerator coefficient is negative (used for printing)."""
        return self._num != 0 and self._num.coeffs()[-1] < 0

    def __str__(self) -> str:
        return _render(self)

    def __repr__(self) -> str:
        return f"RatFunc({_render(self)!r})"


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, fmpq)):
        return RatFunc(x)
    return NotImplemented


def as_ratfunc(x) -> RatFunc:
    """Coerce ints, Fractions and strings to :class:`RatFunc`."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, str):
        return RatFunc.parse(x)
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return r


ZERO = RatFunc(0)
ONE = RatFunc(1)
Q = RatFunc(fmpq_poly([0, 1]), _POLY_ONE, _canonical=True)


@lru_cache(maxsize=512)
def qpow(k: int) -> RatFunc:
    """``q**k`` for any integer ``k``."""
    if k >= 0:
        return RatFunc(fmpq_poly([0] * k + [1]), _POLY_ONE, _canonical=True)
    return RatFunc(_POLY_ONE, fmpq_poly([0] * (-k) + [1]), _canonical=True)


@lru_cache(maxsize=256)
def qint(m: int) -> RatFunc:
    """Quantum integer ``[m] = (q^m - q^-m)/(q - q^-1)``; ``[0] = 0``."""
    if m < 0:
        raise ValueError(f"undefined quantum integer index {m}")
    return RatFunc.from_laurent({m - 1 - 2 * i: 1 for i in range(m)})


@lru_cache(maxsize=256)
def qfact(m: int) -> RatFunc:
    """Quantum factorial ``[m]! = [1][2]...[m]``; ``[0]! = 1``."""
    if m < 0:
        raise ValueError(f"undefined quantum factorial index {m}")
    out = ONE
    for k in range(1, m + 1):
        out = out * qint(k)
    return out


def evaluate(f: RatFunc, q0) -> Fraction:
    """Exact value of ``f`` at the nonzero rational point ``q0``."""
    f = as_ratfunc(f)
    x = _to_fmpq(q0)
    if x == 0:
        raise ValueError("q must be evaluated at a nonzero point")
    d = f._den(x)
    if d == 0:
        raise PoleError(f"pole at q = {q0}: denominator {_render_poly(f._den)} vanishes")
    return _to_fraction(f._num(x) / d)


# -- rendering -----------------------------------------------------------------


def _fmt_coeff_term(c: Fraction, k: int, first: bool) -> str:
    neg = c < 0
    a = -c if neg else c
    if k == 0:
        body = str(a)
    else:
        power = "q" if k == 1 else f"q^{k}"
        body = power if a == 1 else f"{a}*{power}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def _render_laurent(terms: dict[int, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for i, k in enumerate(sorted(terms, reverse=True)):
        parts.append(_fmt_coeff_term(terms[k], k, i == 0))
    return "".join(parts)


def _render_poly(p: fmpq_poly) -> str:
    return _render_laurent(
        {i: _to_fraction(c) for i, c in enumerate(p.coeffs()) if c != 0}
    )


def _render(f: RatFunc) -> str:
    if f._num == 0:
        return "0"
    lau = f.as_laurent()
    if lau is not None:
        return _render_laurent(lau)
    # centre the denominator's exponents, e.g. q^2 - 1 -> q - q^-1
    k = (_low_degree(f._den) + f._den.degree()) // 2
    den_terms = {i - k: _to_fraction(c) for i, c in enumerate(f._den.coeffs()) if c != 0}
    num_terms = {i - k: _to_fraction(c) for i, c in enumerate(f._num.coeffs()) if c != 0}
    num = _render_laurent(num_terms)
    den = _render_laurent(den_terms)
    if len(num_terms) > 1:
        num = f"({num})"
    if len(den_terms) > 1:
        den = f"({den})"
    return f"{num}/{den}"
