"""PBW normal form and multiplication in U_{g,h}.

Elements are finite sums of monomials ``F^l K^m g^n h^s E^t`` with
:class:`~uqgh.field.RatFunc` coefficients.  A monomial is stored as the
tuple ``(l, m, n, s, t)``.

Products are computed by peeling the right factor one generator at a time
and rewriting with the defining relations::

    g, h central         E K^m = q^(-2m) K^m E        K^m F = q^(-2m) F K^m
    E F = F E + (K - K^-1 g^2)/(q - q^-1)
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from functools import lru_cache

from .field import ONE, ZERO, RatFunc, as_ratfunc, qint, qpow

__all__ = [
    "Monomial",
    "UNIT",
    "GENERATORS",
    "AlgebraElement",
    "generator",
    "scalar",
    "monomial",
    "multiply",
    "mul_by_generator",
    "normalize",
    "commutator",
    "e_fpow_commutator",
    "anti_involution",
    "apply_homomorphism",
    "apply_antihomomorphism",
    "monomial_word",
    "to_words",
    "mono_product",
]

Monomial = tuple[int, int, int, int, int]
UNIT: Monomial = (0, 0, 0, 0, 0)

# public generator names -> internal single-letter codes
GENERATORS: dict[str, str] = {
    "E": "E",
    "F": "F",
    "K": "K",
    "K^-1": "k",
    "g": "g",
    "g^-1": "G",
    "h": "h",
    "h^-1": "H",
}
LETTER_NAMES = {v: k for k, v in GENERATORS.items()}

_INV_QMQ = (qpow(1) - qpow(-1)).inv()  # 1/(q - q^-1)


def _letter(x: str) -> str:
    if x in GENERATORS:
        return GENERATORS[x]
    if x in LETTER_NAMES:
        return x
    raise ValueError(f"unknown generator {x!r}")


def monomial_word(mono: Monomial) -> tuple[str, ...]:
    """The generator letters whose ordered product is ``mono``."""
    l, m, n, s, t = mono
    return (
        ("F",) * l
        + (("K",) * m if m >= 0 else ("k",) * -m)
        + (("g",) * n if n >= 0 else ("G",) * -n)
        + (("h",) * s if s >= 0 else ("H",) * -s)
        + ("E",) * t
    )


def _add_into(acc: dict, key, coeff: RatFunc) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = coeff
    else:
        acc[key] = cur + coeff


def _purge(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _mono_times_letter(mono: Monomial, x: str) -> tuple[tuple[Monomial, RatFunc], ...]:
    l, m, n, s, t = mono
    if x == "E":
        return (((l, m, n, s, t + 1), ONE),)
    if x == "K":
        return (((l, m + 1, n, s, t), qpow(-2 * t)),)
    if x == "k":
        return (((l, m - 1, n, s, t), qpow(2 * t)),)
    if x == "g":
        return (((l, m, n + 1, s, t), ONE),)
    if x == "G":
        return (((l, m, n - 1, s, t), ONE),)
    if x == "h":
        return (((l, m, n, s + 1, t), ONE),)
    if x == "H":
        return (((l, m, n, s - 1, t), ONE),)
    if x != "F":
        raise ValueError(f"unknown generator letter {x!r}")
    if t == 0:
        return (((l + 1, m, n, s, 0), qpow(-2 * m)),)
    # mono = head * E, and E F = F E + (K - K^-1 g^2)/(q - q^-1)
    head = (l, m, n, s, t - 1)
    acc: dict[Monomial, RatFunc] = {}
    for mono1, c1 in _mono_times_letter(head, "F"):
        for mono2, c2 in _mono_times_letter(mono1, "E"):
            _add_into(acc, mono2, c1 * c2)
    for mono1, c1 in _mono_times_letter(head, "K"):
        _add_into(acc, mono1, c1 * _INV_QMQ)
    for mono1, c1 in _mono_times_letter(head, "k"):
        l1, m1, n1, s1, t1 = mono1
        _add_into(acc, (l1, m1, n1 + 2, s1, t1), -(c1 * _INV_QMQ))
    return tuple(_purge(acc).items())


@lru_cache(maxsize=200_000)
def mono_product(a: Monomial, b: Monomial) -> tuple[tuple[Monomial, RatFunc], ...]:
    """Normal form of the product of two PBW monomials."""
    l, m, n, s, t = b
    terms: dict[Monomial, RatFunc] = {a: ONE}
    for _ in range(l):
        nxt: dict[Monomial, RatFunc] = {}
        for mono, c in terms.items():
            for mono2, c2 in _mono_times_letter(mono, "F"):
                _add_into(nxt, mono2, c * c2)
        terms = _purge(nxt)
    if m or n or s:
        # E^t K^m = q^(-2tm) K^m E^t; g, h central
        terms = {
            (l1, m1 + m, n1 + n, s1 + s, t1): c * qpow(-2 * t1 * m)
            for (l1, m1, n1, s1, t1), c in terms.items()
        }
    if t:
        terms = {(l1, m1, n1, s1, t1 + t): c for (l1, m1, n1, s1, t1), c in terms.items()}
    return tuple(terms.items())


def _sort_key(mono: Monomial):
    l, m, n, s, t = mono
    return (l + t, l, m, n, s, t)


class AlgebraElement:
    """An element of U_{g,h} in PBW normal form.

    Supports ``+``, ``-``, ``*`` (algebra product, or scaling by a scalar),
    and ``**`` with nonnegative exponents (negative exponents only for
    invertible monomials ``c K^m g^n h^s``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        if terms is None:
            self._terms: dict[Monomial, RatFunc] = {}
        else:
            out = {}
            for mono, c in terms.items():
                c = as_ratfunc(c)
                if c:
                    if mono[0] < 0 or mono[4] < 0:
                        raise ValueError(f"negative E/F exponent in monomial {mono}")
                    out[tuple(mono)] = c
            self._terms = out

    @classmethod
    def _raw(cls, terms: dict[Monomial, RatFunc]) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Monomial, RatFunc]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> RatFunc:
        return self._terms.get(tuple(mono), ZERO)

    def support(self) -> list[Monomial]:
        return sorted(self._terms, key=_sort_key, reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(mono == UNIT for mono in self._terms)

    def scalar_value(self) -> RatFunc:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self._terms.get(UNIT, ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            _add_into(acc, mono, c)
        return AlgebraElement._raw(_purge(acc))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({k: -v for k, v in self._terms.items()})

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

    def scale(self, c) -> "AlgebraElement":
        c = as_ratfunc(c)
        if not c:
            return AlgebraElement()
        return AlgebraElement._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, AlgebraElement):
            other = other.scalar_value()
        return self.scale(as_ratfunc(other).inv())

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = AlgebraElement({UNIT: ONE})
        base = self
        while k:
            if k & 1:
                out = multiply(out, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return out

    def inverse(self) -> "AlgebraElement":
        """Inverse of ``c K^m g^n h^s``; other elements are not invertible."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not invertible")
        ((l, m, n, s, t), c), = self._terms.items()
        if l or t:
            raise ValueError("E, F are not invertible")
        return AlgebraElement._raw({(0, -m, -n, -s, 0): c.inv()})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({render_element(self)!r})"


def _coerce(x):
    if isinstance(x, AlgebraElement):
        return x
    try:
        c = as_ratfunc(x) if not isinstance(x, str) else None
    except TypeError:
        return NotImplemented
    if c is None:
        return NotImplemented
    return AlgebraElement._raw({UNIT: c} if c else {})


def scalar(c) -> AlgebraElement:
    return _coerce(as_ratfunc(c))


def monomial(mono: Sequence[int], coeff=1) -> AlgebraElement:
    return AlgebraElement({tuple(mono): coeff})


_LETTER_MONO: dict[str, Monomial] = {
    "E": (0, 0, 0, 0, 1),
    "F": (1, 0, 0, 0, 0),
    "K": (0, 1, 0, 0, 0),
    "k": (0, -1, 0, 0, 0),
    "g": (0, 0, 1, 0, 0),
    "G": (0, 0, -1, 0, 0),
    "h": (0, 0, 0, 1, 0),
    "H": (0, 0, 0, -1, 0),
}


def generator(name: str) -> AlgebraElement:
    """The generator ``name`` (one of ``E F K K^-1 g g^-1 h h^-1``)."""
    return AlgebraElement._raw({_LETTER_MONO[_letter(name)]: ONE})


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Normalized product ``a*b``."""
    acc: dict[Monomial, RatFunc] = {}
    for mb, cb in b._terms.items():
        for ma, ca in a._terms.items():
            cab = ca * cb
            for mono, c in mono_product(ma, mb):
                _add_into(acc, mono, cab * c)
    return AlgebraElement._raw(_purge(acc))


def mul_by_generator(a: AlgebraElement, x: str, side: str = "right") -> AlgebraElement:
    """``a*x`` (side="right") or ``x*a`` (side="left") for a generator ``x``."""
    letter = _letter(x)
    if side == "left":
        return multiply(generator(letter), a)
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    acc: dict[Monomial, RatFunc] = {}
    for mono, c in a._terms.items():
        for mono2, c2 in _mono_times_letter(mono, letter):
            _add_into(acc, mono2, c * c2)
    return AlgebraElement._raw(_purge(acc))


def normalize(words: Iterable[tuple[object, Sequence[str]]] | Sequence[str]) -> AlgebraElement:
    """PBW normal form of a formal sum of generator words.

    ``words`` is either a single word (sequence of generator names) or an
    iterable of ``(coefficient, word)`` pairs.  Each word is folded from the
    left with :func:`mul_by_generator`.
    """
    if isinstance(words, str) or (
        isinstance(words, Sequence) and all(isinstance(w, str) for w in words)
    ):
        words = [(1, words)]
    total = AlgebraElement()
    for coeff, word in words:
        if isinstance(word, str):
            word = word.split()
        elem = scalar(coeff)
        for x in word:
            elem = mul_by_generator(elem, x, "right")
        total = total + elem
    return total


def to_words(a: AlgebraElement) -> list[tuple[RatFunc, tuple[str, ...]]]:
    """Render ``a`` back into ``(coefficient, word)`` pairs."""
    return [
        (c, tuple(LETTER_NAMES[x] for x in monomial_word(mono)))
        for mono, c in a._terms.items()
    ]


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return multiply(a, b) - multiply(b, a)


def e_fpow_commutator(m: int) -> AlgebraElement:
    """Closed form of ``[E, F^m] = [m] F^(m-1) (q^-(m-1) K - q^(m-1) K^-1 g^2)/(q - q^-1)``."""
    if m < 1:
        raise ValueError(f"e_fpow_commutator needs m >= 1, got {m}")
    c = qint(m) * _INV_QMQ
    return AlgebraElement(
        {
            (m - 1, 1, 0, 0, 0): c * qpow(-(m - 1)),
            (m - 1, -1, 2, 0, 0): -(c * qpow(m - 1)),
        }
    )


def apply_homomorphism(
    a: AlgebraElement,
    image: Callable[[str], object],
    mul: Callable = None,
    cache: dict | None = None,
):
    """Extend ``letter -> image(letter)`` multiplicatively over ``a``.

    ``image`` returns objects supporting ``+``, scaling by a RatFunc on the
    left and ``mul``.  Used for homomorphisms into U_{g,h}, its tensor
    powers and the equitable algebra.
    """
    return _extend(a, image, mul, cache, reverse=False)


def apply_antihomomorphism(
    a: AlgebraElement,
    image: Callable[[str], object],
    mul: Callable = None,
    cache: dict | None = None,
):
    """Like :func:`apply_homomorphism` but reverses the order of factors."""
    return _extend(a, image, mul, cache, reverse=True)


def _extend(a, image, mul, cache, reverse):
    if mul is None:
        mul = lambda x, y: x * y  # noqa: E731
    if cache is None:
        cache = {}
    total = None
    for mono, c in a._terms.items():
        img = cache.get(mono)
        if img is None:
            word = monomial_word(mono)
            if reverse:
                word = word[::-1]
            img = image("1") if not word else None
            for x in word:
                img = image(x) if img is None else mul(img, image(x))
            cache[mono] = img
        term = c * img
        total = term if total is None else total + term
    if total is None:
        return 0 * image("1")
    return total


_I_IMAGES: dict[str, AlgebraElement] = {}


def _anti_involution_image(x: str) -> AlgebraElement:
    if not _I_IMAGES:
        K, k, E, F = generator("K"), generator("k"), generator("E"), generator("F")
        _I_IMAGES.update(
            {
                "1": scalar(1),
                "E": -multiply(K, F),
                "F": -multiply(E, k),
                **{y: generator(y) for y in "KkgGhH"},
            }
        )
    return _I_IMAGES[x]


_I_CACHE: dict = {}


def anti_involution(a: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism with ``E -> -KF``, ``F -> -E K^-1`` fixing ``K, g, h``."""
    return apply_antihomomorphism(a, _anti_involution_image, multiply, _I_CACHE)


# -- printing ----------------------------------------------------------------


def render_monomial(mono: Monomial) -> str:
    l, m, n, s, t = mono
    parts = []
    for sym, e in (("F", l), ("K", m), ("g", n), ("h", s), ("E", t)):
        if e == 1:
            parts.append(sym)
        elif e:
            parts.append(f"{sym}^{e}")
    return " ".join(parts) if parts else "1"


def _render_coeff(c: RatFunc) -> str:
    return f"({c})"


def render_element(a: AlgebraElement) -> str:
    """Canonical text: graded order, ``(coeff) F^l K^m g^n h^s E^t`` terms."""
    if not a._terms:
        return "0"
    pieces = []
    for i, mono in enumerate(a.support()):
        c = a._terms[mono]
        neg = c.is_negative_looking()
        if neg:
            c = -c
        if mono == UNIT:
            body = "1" if c.is_one() else _render_coeff(c)
        else:
            body = render_monomial(mono) if c.is_one() else f"{_render_coeff(c)} {render_monomial(mono)}"
        if i == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)
