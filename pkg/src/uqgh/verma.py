"""Verma modules V(a, b, c), truncated to the basis F^p v, p = 0..N.

F applied to the top vector F^N v leaves the truncation.  Such results are
flagged as overflow and anything depending on them is reported as
inconclusive instead of being guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .field import ONE, ZERO, RatFunc, as_ratfunc, qfact, qint, qpow
from .pbw import AlgebraElement, generator
from .rep import HighestWeightData

__all__ = [
    "DEFAULT_CUTOFF",
    "TruncatedVerma",
    "verma",
    "act",
    "ActionResult",
    "MaximalVector",
    "maximal_vectors",
    "VermaHom",
    "verma_hom",
    "hom_criterion",
    "VermaSimplicity",
    "is_simple_verma",
    "simple_quotient_data",
    "chevalley_verma_tensor",
    "chevalley_basis_map",
    "check_relations",
]

DEFAULT_CUTOFF = 12
_QMQ = qpow(1) - qpow(-1)


class TruncatedVerma:
    def __init__(self, a, b, c, cutoff: int = DEFAULT_CUTOFF):
        a, b, c = as_ratfunc(a), as_ratfunc(b), as_ratfunc(c)
        if not a or not b or not c:
            raise ValueError("Verma parameters a, b, c must be nonzero")
        if cutoff < 1:
            raise ValueError(f"cutoff must be at least 1, got {cutoff}")
        self.a, self.b, self.c, self.cutoff = a, b, c, cutoff
        self._matrices = None

    @property
    def dim(self) -> int:
        return self.cutoff + 1

    def e_coefficient(self, p: int) -> RatFunc:
        """E F^p v = e_p F^(p-1) v."""
        if p == 0:
            return ZERO
        a, b = self.a, self.b
        return qint(p) * (qpow(1 - p) * a - qpow(p - 1) * a.inv() * b * b) / _QMQ

    def k_eigenvalue(self, p: int) -> RatFunc:
        return qpow(-2 * p) * self.a

    def weights(self) -> list[tuple[RatFunc, RatFunc, RatFunc]]:
        return [(self.k_eigenvalue(p), self.b, self.c) for p in range(self.dim)]

    def matrices(self) -> dict[str, la.Matrix]:
        """Action matrices on the truncation; F's top column is left zero."""
        if self._matrices is None:
            d = self.dim
            E, F, K, Ki = (la.zeros(d, d) for _ in range(4))
            for p in range(d):
                K[p][p] = self.k_eigenvalue(p)
                Ki[p][p] = K[p][p].inv()
                if p > 0:
                    E[p - 1][p] = self.e_coefficient(p)
                if p < self.cutoff:
                    F[p + 1][p] = ONE
            scalar = lambda x: la.mat_scale(x, la.identity(d))  # noqa: E731
            self._matrices = {
                "E": E,
                "F": F,
                "K": K,
                "K^-1": Ki,
                "g": scalar(self.b),
                "g^-1": scalar(self.b.inv()),
                "h": scalar(self.c),
                "h^-1": scalar(self.c.inv()),
            }
        return self._matrices

    def basis_vector(self, p: int) -> la.Vector:
        v = [ZERO] * self.dim
        v[p] = ONE
        return v

    def __repr__(self):
        return f"TruncatedVerma(a={self.a}, b={self.b}, c={self.c}, cutoff={self.cutoff})"


def verma(a, b, c, cutoff: int = DEFAULT_CUTOFF) -> TruncatedVerma:
    return TruncatedVerma(a, b, c, cutoff)


@dataclass(frozen=True)
class ActionResult:
    vector: tuple
    overflow: bool

    @property
    def inconclusive(self) -> bool:
        return self.overflow


def _apply_letter(V: TruncatedVerma, name: str, v: list, power: int) -> tuple[list, bool]:
    M = V.matrices()
    overflow = False
    if power < 0:
        name = {"K": "K^-1", "g": "g^-1", "h": "h^-1"}[name]
        power = -power
    for _ in range(power):
        if name == "F" and v[-1]:
            overflow = True
        v = la.mat_vec(M[name], v)
    return v, overflow


def act(V: TruncatedVerma, a: AlgebraElement | str, v) -> ActionResult:
    """Apply an algebra element; ``overflow`` is set if F left the truncation."""
    if isinstance(a, str):
        a = generator(a)
    v = [as_ratfunc(x) for x in v]
    if len(v) != V.dim:
        raise ValueError(f"vector of length {len(v)} does not match truncation dimension {V.dim}")
    total = [ZERO] * V.dim
    overflow = False
    for (l, m, n, s, t), coeff in a.items():
        w = list(v)
        for name, k in (("E", t), ("h", s), ("g", n), ("K", m), ("F", l)):
            if k:
                w, of = _apply_letter(V, name, w, k)
                overflow = overflow or of
        total = la.vec_add(total, la.vec_scale(coeff, w))
    return ActionResult(tuple(total), overflow)


def check_relations(V: TruncatedVerma) -> tuple[bool, str | None]:
    """Defining relations on the truncation.

    The E F - F E relation is skipped on the top column, where F leaves
    the truncation.
    """
    M = V.matrices()
    mm = la.mat_mul
    d = V.dim
    checks = [
        ("K E K^-1 = q^2 E", mm(M["K"], M["E"]), la.mat_scale(qpow(2), mm(M["E"], M["K"])), d),
        ("K F K^-1 = q^-2 F", mm(M["K"], M["F"]), la.mat_scale(qpow(-2), mm(M["F"], M["K"])), d),
        (
            "E F - F E = (K - K^-1 g^2)/(q - q^-1)",
            la.mat_sub(mm(M["E"], M["F"]), mm(M["F"], M["E"])),
            la.mat_scale(_QMQ.inv(), la.mat_sub(M["K"], mm(M["K^-1"], mm(M["g"], M["g"])))),
            d - 1,
        ),
    ]
    for x, xi in (("K", "K^-1"), ("g", "g^-1"), ("h", "h^-1")):
        checks.append((f"{x} {xi} = 1", mm(M[x], M[xi]), la.identity(d), d))
    for name, lhs, rhs, ncols in checks:
        for i in range(d):
            for j in range(ncols):
                if lhs[i][j] != rhs[i][j]:
                    return False, name
    return True, None


@dataclass(frozen=True)
class MaximalVector:
    depth: int
    weight: tuple
    epsilon: int | None  # a = ε b q^(depth-1); None for the generator at depth 0


def maximal_vectors(V: TruncatedVerma) -> list[MaximalVector]:
    """Indices n where E kills F^n v, found by testing the E coefficient."""
    out = [MaximalVector(0, (V.a, V.b, V.c), None)]
    for n in range(1, V.dim):
        if V.e_coefficient(n):
            continue
        # the coefficient vanishes exactly when a = ±b q^(n-1)
        eps = 1 if V.a == V.b * qpow(n - 1) else -1
        out.append(MaximalVector(n, (V.k_eigenvalue(n), V.b, V.c), eps))
    return out


def hom_criterion(a, b, c, a2, b2, c2) -> tuple[int, int] | None:
    """(n, ε) with a = ε q^(-n-1) b, a2 = ε q^(n-1) b, (b, c) = (b2, c2), n >= 1."""
    a, b, c, a2, b2, c2 = (as_ratfunc(x) for x in (a, b, c, a2, b2, c2))
    if b != b2 or c != c2:
        return None
    sp = (a2 / b).signed_qpower()
    if sp is None:
        return None
    eps, k = sp
    n = k + 1
    if n < 1 or a != eps * qpow(-n - 1) * b:
        return None
    return n, eps


@dataclass(frozen=True)
class VermaHom:
    status: str  # "hom", "none" or "inconclusive"
    degree: int | None = None
    epsilon: int | None = None
    matrix: tuple | None = None  # target x source on the truncation
    verified_columns: int = 0
    injective: bool | None = None

    @property
    def exists(self) -> bool:
        return self.status == "hom"


def verma_hom(a, b, c, a2, b2, c2, cutoff: int = DEFAULT_CUTOFF) -> VermaHom:
    """Embedding V(a,b,c) -> V(a2,b2,c2), F^p v -> F^(p+n) v', of degree n >= 1."""
    crit = hom_criterion(a, b, c, a2, b2, c2)
    if crit is None:
        return VermaHom("none")
    n, eps = crit
    if n > cutoff:
        return VermaHom("inconclusive", n, eps)
    src, tgt = verma(a, b, c, cutoff), verma(a2, b2, c2, cutoff)
    d = src.dim
    cols = d - n  # source indices 0..N-n land inside the truncation
    X = la.zeros(d, d)
    for p in range(cols):
        X[p + n][p] = ONE
    Ms, Mt = src.matrices(), tgt.matrices()
    for name in ("E", "F", "K", "g", "h"):
        lhs = la.mat_mul(X, Ms[name])
        rhs = la.mat_mul(Mt[name], X)
        # F's image of the last mapped column lands on index N+1 of the target
        limit = cols - 1 if name == "F" else cols
        for j in range(limit):
            for i in range(d):
                if lhs[i][j] != rhs[i][j]:
                    return VermaHom("none")
    sub = [[X[i][j] for j in range(cols)] for i in range(d)]
    injective = la.rank(sub) == cols
    return VermaHom("hom", n, eps, tuple(tuple(r) for r in X), cols, injective)


@dataclass(frozen=True)
class VermaSimplicity:
    status: str  # "simple-up-to-bound", "not-simple" or "unknown-beyond-bound"
    depth: int | None = None
    epsilon: int | None = None

    def __str__(self):
        if self.status == "not-simple":
            return f"not-simple(depth {self.depth}, eps {self.epsilon:+d})"
        return self.status


def is_simple_verma(a, b, c, bound: int = DEFAULT_CUTOFF) -> VermaSimplicity:
    """Decide whether a/b = ±q^k with 0 <= k <= bound (submodule at depth k+1)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    a, b, c = as_ratfunc(a), as_ratfunc(b), as_ratfunc(c)
    if not a or not b or not c:
        raise ValueError("Verma parameters a, b, c must be nonzero")
    sp = (a / b).signed_qpower()
    if sp is None or sp[1] < 0:
        return VermaSimplicity("simple-up-to-bound")
    eps, k = sp
    if k > bound:
        return VermaSimplicity("unknown-beyond-bound", k + 1, eps)
    return VermaSimplicity("not-simple", k + 1, eps)


def simple_quotient_data(a, b, c) -> HighestWeightData | None:
    """(ε, k, b, c) when a = ε b q^k with k >= 0: the simple quotient is finite-dimensional."""
    a, b, c = as_ratfunc(a), as_ratfunc(b), as_ratfunc(c)
    sp = (a / b).signed_qpower()
    if sp is None or sp[1] < 0:
        return None
    return HighestWeightData(sp[0], sp[1], b, c)


def chevalley_verma_tensor(lam, b, c, cutoff: int = DEFAULT_CUTOFF) -> dict[str, la.Matrix]:
    """V(λ) ⊗ K_{b,c} for the Chevalley-generator Verma module V(λ).

    Basis v_p with K' v_p = q^-2p λ v_p, F' v_p = [p+1] v_(p+1) and
    E' v_(p+1) = (q^-p λ - q^p λ^-1)/(q - q^-1) v_p; on the tensor product
    E = b E', K = b K', F = F', g = b, h = c.
    """
    lam, b, c = as_ratfunc(lam), as_ratfunc(b), as_ratfunc(c)
    d = cutoff + 1
    E, F, K = (la.zeros(d, d) for _ in range(3))
    for p in range(d):
        K[p][p] = b * qpow(-2 * p) * lam
        if p < cutoff:
            F[p + 1][p] = qint(p + 1)
        if p > 0:
            E[p - 1][p] = b * (qpow(-(p - 1)) * lam - qpow(p - 1) * lam.inv()) / _QMQ
    ident = la.identity(d)
    return {"E": E, "F": F, "K": K, "g": la.mat_scale(b, ident), "h": la.mat_scale(c, ident)}


def chevalley_basis_map(cutoff: int = DEFAULT_CUTOFF) -> la.Matrix:
    """f(v_p ⊗ 1) = F^p v / [p]! as a diagonal matrix."""
    d = cutoff + 1
    f = la.zeros(d, d)
    for p in range(d):
        f[p][p] = qfact(p).inv()
    return f
