"""The equitable presentation on generators x^±1, y, z, u^±1, v^±1.

Expressions on the equitable side live in the free algebra on these
letters (no rewriting); everything is checked after mapping into the PBW
engine with Φ.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .field import ONE, ZERO, RatFunc, as_ratfunc, qpow
from .hopf import TensorElement, antipode, coproduct, counit, tensor
from .pbw import AlgebraElement, generator, multiply, render_element, scalar

__all__ = [
    "EQ_GENERATORS",
    "EqExpr",
    "eq_gen",
    "eq_scalar",
    "phi",
    "psi",
    "phi_tensor",
    "eq_coproduct",
    "eq_counit",
    "eq_antipode",
    "PRINTED_ANTIPODE_Y",
    "relations",
    "CheckResult",
    "EquitableReport",
    "verify_equitable_relations",
    "verify_round_trip",
    "verify_equitable_hopf",
]

EQ_GENERATORS = ("x", "x^-1", "y", "z", "u", "u^-1", "v", "v^-1")
_INVERSE = {"x": "x^-1", "x^-1": "x", "u": "u^-1", "u^-1": "u", "v": "v^-1", "v^-1": "v"}

Word = tuple[str, ...]


class EqExpr:
    """Element of the free algebra on the equitable letters."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Word, object] | None = None):
        self._terms: dict[Word, RatFunc] = {}
        for w, c in (terms or {}).items():
            for x in w:
                if x not in EQ_GENERATORS:
                    raise ValueError(f"unknown equitable generator {x!r}")
            c = as_ratfunc(c)
            if c:
                self._terms[tuple(w)] = self._terms.get(tuple(w), ZERO) + c

    def items(self):
        return self._terms.items()

    def _lift(self, other) -> "EqExpr":
        return other if isinstance(other, EqExpr) else eq_scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, ZERO) + c
        return EqExpr({w: c for w, c in acc.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return EqExpr({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "EqExpr":
        c = as_ratfunc(c)
        return EqExpr({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, EqExpr):
            return self.scale(other)
        acc: dict[Word, RatFunc] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, ZERO) + c1 * c2
        return EqExpr({w: c for w, c in acc.items() if c})

    def __rmul__(self, c):
        return self.scale(c)

    def __truediv__(self, c):
        return self.scale(as_ratfunc(c).inv())

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            word = " ".join(w) if w else "1"
            parts.append(word if c.is_one() else f"({c}) {word}" if w else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"EqExpr({str(self)!r})"


def eq_gen(name: str) -> EqExpr:
    return EqExpr({(name,): ONE})


def eq_scalar(c) -> EqExpr:
    return EqExpr({(): as_ratfunc(c)})


_QMQ = qpow(1) - qpow(-1)


def _phi_images() -> dict[str, AlgebraElement]:
    E, F, K, k, g, G, h, H = (generator(n) for n in ("E", "F", "K", "K^-1", "g", "g^-1", "h", "h^-1"))
    return {
        "x": multiply(G, K),
        "x^-1": multiply(g, k),
        "y": multiply(k, g) + F.scale(_QMQ),
        "z": multiply(k, g) - multiply(k, E).scale(qpow(1) * _QMQ),
        "u": G,
        "u^-1": g,
        "v": h,
        "v^-1": H,
    }


_PHI = _phi_images()


def phi(e: EqExpr) -> AlgebraElement:
    """Image in U_{g,h} in PBW normal form."""
    if not isinstance(e, EqExpr):
        e = eq_gen(e)
    total = AlgebraElement()
    for w, c in e.items():
        term = scalar(c)
        for x in w:
            term = multiply(term, _PHI[x])
        total = total + term
    return total


def psi(name: str) -> EqExpr:
    """Equitable expression for a generator of U_{g,h}."""
    x, X, y, z, u, U, v, V = (eq_gen(n) for n in EQ_GENERATORS)
    images = {
        "K": U * x,
        "K^-1": u * X,
        "F": (y - X) / _QMQ,
        "E": ((1 - x * z) * U) / (_QMQ * qpow(1)),
        "g": U,
        "g^-1": u,
        "h": v,
        "h^-1": V,
    }
    if name not in images:
        raise ValueError(f"unknown generator {name!r}")
    return images[name]


# -- Hopf structure on the equitable side -----------------------------------------

EqTensor = list[tuple[EqExpr, EqExpr]]


def eq_coproduct(name: str) -> EqTensor:
    x, X, y, z, u, U, v, V = (eq_gen(n) for n in EQ_GENERATORS)
    if name in ("x", "x^-1", "u", "u^-1", "v", "v^-1"):
        g = eq_gen(name)
        return [(g, g)]
    if name == "y":
        return [(X, X - V), (U * v * X, y - X), (y, V)]
    if name == "z":
        return [(X, X), (u * V * X, z - X), (z - X, v)]
    raise ValueError(f"unknown equitable generator {name!r}")


def eq_counit(name: str) -> RatFunc:
    if name not in EQ_GENERATORS:
        raise ValueError(f"unknown equitable generator {name!r}")
    return ONE


def eq_antipode(name: str) -> EqExpr:
    x, X, y, z, u, U, v, V = (eq_gen(n) for n in EQ_GENERATORS)
    if name in _INVERSE:
        return eq_gen(_INVERSE[name])
    if name == "y":
        return x + u - x * u * y
    if name == "z":
        return x + U - U * x * z
    raise ValueError(f"unknown equitable generator {name!r}")


# Candidate S(y) = x - x^-1 y + u.  It fails the antipode axiom; kept as a
# regression witness for the tests.
PRINTED_ANTIPODE_Y = eq_gen("x") - eq_gen("x^-1") * eq_gen("y") + eq_gen("u")


def phi_tensor(t: EqTensor) -> TensorElement:
    total = TensorElement(2)
    for a, b in t:
        total = total + tensor(phi(a), phi(b))
    return total


def relations() -> list[tuple[str, EqExpr, EqExpr]]:
    """(name, lhs, rhs) for every defining relation of the equitable presentation."""
    x, X, y, z, u, U, v, V = (eq_gen(n) for n in EQ_GENERATORS)
    one = eq_scalar(1)
    out = [
        ("x^-1 x = 1", X * x, one),
        ("x x^-1 = 1", x * X, one),
        ("u^-1 u = 1", U * u, one),
        ("u u^-1 = 1", u * U, one),
        ("v^-1 v = 1", V * v, one),
        ("v v^-1 = 1", v * V, one),
        ("u x = x u", u * x, x * u),
        ("u y = y u", u * y, y * u),
        ("u z = z u", u * z, z * u),
        ("u v = v u", u * v, v * u),
        ("v x = x v", v * x, x * v),
        ("y v = v y", y * v, v * y),
        ("z v = v z", z * v, v * z),
    ]
    q, qi = qpow(1), qpow(-1)
    for a, b, sa, sb in ((x, y, "x", "y"), (z, x, "z", "x"), (y, z, "y", "z")):
        lhs = ((a * b).scale(q) - (b * a).scale(qi)) / _QMQ
        out.append((f"(q {sa} {sb} - q^-1 {sb} {sa})/(q - q^-1) = 1", lhs, one))
    return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class EquitableReport:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def summary(self) -> str:
        lines = [f"{self.title}:"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
        return "\n".join(lines)


def verify_equitable_relations() -> EquitableReport:
    report = EquitableReport("equitable relations under phi")
    for name, lhs, rhs in relations():
        diff = phi(lhs - rhs)
        report.checks.append(CheckResult(name, diff.is_zero(), None if diff.is_zero() else render_element(diff)))
    return report


def verify_round_trip() -> EquitableReport:
    report = EquitableReport("phi(psi(G)) = G")
    for name in ("E", "F", "K", "K^-1", "g", "g^-1", "h", "h^-1"):
        diff = phi(psi(name)) - generator(name)
        report.checks.append(CheckResult(name, diff.is_zero(), None if diff.is_zero() else render_element(diff)))
    return report


def verify_equitable_hopf() -> EquitableReport:
    report = EquitableReport("Hopf structure transport")
    for name in EQ_GENERATORS:
        image = phi(eq_gen(name))
        d = phi_tensor(eq_coproduct(name)) - coproduct(image)
        report.checks.append(CheckResult(f"coproduct({name})", d.is_zero(), None if d.is_zero() else str(d)))
        e = eq_counit(name) - counit(image)
        report.checks.append(CheckResult(f"counit({name})", not e, None if not e else str(e)))
        s = phi(eq_antipode(name)) - antipode(image)
        report.checks.append(CheckResult(f"antipode({name})", s.is_zero(), None if s.is_zero() else render_element(s)))
    return report
