"""Finite-dimensional modules over U_{g,h} given by action matrices.

A :class:`WeightModule` stores one matrix per generator name in
``E F K K^-1 g g^-1 h h^-1``.  All constructions here produce modules whose
``K``, ``g`` and ``h`` matrices are triangular in the stored basis, so their
eigenvalues can be read off the diagonal.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import linalg as la
from .field import ONE, ZERO, RatFunc, as_ratfunc, qint, qpow
from .hopf import antipode, coproduct
from .pbw import GENERATORS, AlgebraElement, anti_involution, generator

__all__ = [
    "GEN_NAMES",
    "HighestWeightData",
    "ExtensionParams",
    "WeightModule",
    "ModuleReport",
    "HighestWeightResult",
    "NotCompletelyReducibleError",
    "simple_module",
    "torus_module",
    "direct_sum",
    "check_module",
    "matrix_of",
    "act",
    "highest_weight_vectors",
    "tensor",
    "decompose",
    "dual_module",
    "twisted_dual",
    "extension_module",
    "is_submodule",
    "is_split_selfextension",
    "intertwiner_space",
    "is_intertwiner",
    "isomorphic",
    "ext_dims_torus",
]

GEN_NAMES = tuple(GENERATORS)  # E F K K^-1 g g^-1 h h^-1
_BASIC = ("E", "F", "K", "g", "h")
_INVERSES = {"K^-1": "K", "g^-1": "g", "h^-1": "h"}

Weight = tuple[RatFunc, RatFunc, RatFunc]


@dataclass(frozen=True)
class HighestWeightData:
    """Label (ε, n, α, β) of the simple module with highest weight (εαq^n, α, β)."""

    epsilon: int
    n: int
    alpha: RatFunc
    beta: RatFunc

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        alpha, beta = as_ratfunc(self.alpha), as_ratfunc(self.beta)
        if not alpha or not beta:
            raise ValueError("alpha and beta must be nonzero")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def dim(self) -> int:
        return self.n + 1

    @property
    def highest_weight(self) -> Weight:
        return (self.epsilon * self.alpha * qpow(self.n), self.alpha, self.beta)

    def __str__(self):
        return f"V(eps={self.epsilon:+d}, n={self.n}, alpha={self.alpha}, beta={self.beta})"

    def to_dict(self) -> dict:
        return {"epsilon": self.epsilon, "n": self.n, "alpha": str(self.alpha), "beta": str(self.beta)}


@dataclass(frozen=True)
class ExtensionParams:
    x: RatFunc = ZERO
    y: RatFunc = ZERO

    def __post_init__(self):
        object.__setattr__(self, "x", as_ratfunc(self.x))
        object.__setattr__(self, "y", as_ratfunc(self.y))

    def __add__(self, other: "ExtensionParams") -> "ExtensionParams":
        return ExtensionParams(self.x + other.x, self.y + other.y)

    def scaled(self, k) -> "ExtensionParams":
        k = as_ratfunc(k)
        return ExtensionParams(k * self.x, k * self.y)

    @property
    def is_split(self) -> bool:
        return not self.x and not self.y


class WeightModule:
    """Action matrices for the eight generators plus optional weight labels.

    Matrices for ``K^-1``, ``g^-1``, ``h^-1`` are computed by inversion when
    not supplied.
    """

    def __init__(self, action: dict, basis_labels=None, weights=None):
        action = {name: la.as_matrix(m) for name, m in action.items()}
        missing = [x for x in _BASIC if x not in action]
        if missing:
            raise ValueError(f"missing action matrices for {missing}")
        dim = len(action["K"])
        if dim < 1:
            raise ValueError("a module needs dimension at least 1")
        for inv, base in _INVERSES.items():
            if inv not in action:
                action[inv] = la.inverse(action[base])
        for name, m in action.items():
            if name not in GEN_NAMES:
                raise ValueError(f"unknown generator {name!r}")
            if la.shape(m) != (dim, dim):
                raise ValueError(f"matrix for {name} has shape {la.shape(m)}, expected {(dim, dim)}")
        self.dim = dim
        self.action = {name: action[name] for name in GEN_NAMES}
        self.basis_labels = list(basis_labels) if basis_labels else [f"e{i}" for i in range(dim)]
        if len(self.basis_labels) != dim:
            raise ValueError("basis_labels has the wrong length")
        self.weights = [tuple(as_ratfunc(x) for x in w) for w in weights] if weights else None
        self._powers: dict = {}

    def matrix(self, name: str) -> la.Matrix:
        return self.action[name]

    def _power(self, name: str, k: int) -> la.Matrix:
        if k == 0:
            return la.identity(self.dim)
        if k < 0:
            name, k = {"K": "K^-1", "g": "g^-1", "h": "h^-1"}[name], -k
        key = (name, k)
        if key not in self._powers:
            base = self.action[name]
            self._powers[key] = base if k == 1 else la.mat_mul(self._power(name, k - 1), base)
        return self._powers[key]

    def __eq__(self, other):
        if not isinstance(other, WeightModule):
            return NotImplemented
        return self.dim == other.dim and all(la.mat_equal(self.action[x], other.action[x]) for x in GEN_NAMES)

    __hash__ = None

    def __repr__(self):
        return f"WeightModule(dim={self.dim})"


# -- constructions -------------------------------------------------------------


def _coerce_hw(d) -> HighestWeightData:
    if isinstance(d, HighestWeightData):
        return d
    return HighestWeightData(*d)


def simple_module(d: HighestWeightData) -> WeightModule:
    """The simple module V_{ε,n,α,β} on the basis v_0..v_n."""
    d = _coerce_hw(d)
    eps, n, alpha, beta = d.epsilon, d.n, d.alpha, d.beta
    dim = n + 1
    E, F, K = la.zeros(dim, dim), la.zeros(dim, dim), la.zeros(dim, dim)
    for p in range(dim):
        K[p][p] = eps * alpha * qpow(n - 2 * p)
        if p < n:
            F[p + 1][p] = qint(p + 1)
        if p > 0:
            E[p - 1][p] = eps * alpha * qint(n - p + 1)
    g = la.mat_scale(alpha, la.identity(dim))
    h = la.mat_scale(beta, la.identity(dim))
    weights = [(K[p][p], alpha, beta) for p in range(dim)]
    return WeightModule(
        {"E": E, "F": F, "K": K, "g": g, "h": h}, [f"v{p}" for p in range(dim)], weights
    )


def torus_module(alpha, beta) -> WeightModule:
    """The one-dimensional module with g = α, h = β (and K = α, E = F = 0)."""
    return simple_module(HighestWeightData(1, 0, alpha, beta))


def direct_sum(*modules: WeightModule) -> WeightModule:
    action = {x: la.block_diag(*(m.action[x] for m in modules)) for x in GEN_NAMES}
    labels = [f"{i}:{lab}" for i, m in enumerate(modules) for lab in m.basis_labels]
    weights = None
    if all(m.weights for m in modules):
        weights = [w for m in modules for w in m.weights]
    return WeightModule(action, labels, weights)


def _element_matrix(a: AlgebraElement, M: WeightModule) -> la.Matrix:
    total = la.zeros(M.dim, M.dim)
    for (l, m, n, s, t), c in a.items():
        term = la.identity(M.dim)
        for name, k in (("F", l), ("K", m), ("g", n), ("h", s), ("E", t)):
            if k:
                term = la.mat_mul(term, M._power(name, k))
        total = la.mat_add(total, la.mat_scale(c, term))
    return total


def matrix_of(a, M: WeightModule) -> la.Matrix:
    """Matrix by which an algebra element (or generator name) acts on ``M``."""
    if isinstance(a, str):
        if a in M.action:
            return M.action[a]
        a = generator(a)
    return _element_matrix(a, M)


def act(a, M: WeightModule, v) -> la.Vector:
    v = [as_ratfunc(x) for x in v]
    if len(v) != M.dim:
        raise ValueError(f"vector of length {len(v)} does not match module dimension {M.dim}")
    return la.mat_vec(matrix_of(a, M), v)


def tensor(M: WeightModule, N: WeightModule) -> WeightModule:
    """M ⊗ N with generators acting through the coproduct."""
    action = {}
    for x in GEN_NAMES:
        total = la.zeros(M.dim * N.dim, M.dim * N.dim)
        for (ma, mb), c in coproduct(generator(x)).items():
            a = _element_matrix(AlgebraElement._raw({ma: ONE}), M)
            b = _element_matrix(AlgebraElement._raw({mb: ONE}), N)
            total = la.mat_add(total, la.mat_scale(c, la.kron(a, b)))
        action[x] = total
    labels = [f"{a}⊗{b}" for a in M.basis_labels for b in N.basis_labels]
    weights = None
    if M.weights and N.weights:
        weights = [tuple(x * y for x, y in zip(wa, wb)) for wa in M.weights for wb in N.weights]
    return WeightModule(action, labels, weights)


def dual_module(M: WeightModule) -> WeightModule:
    """M* with (a f)(m) = f(S(a) m): X acts by the transpose of S(X)."""
    action = {x: la.transpose(matrix_of(antipode(generator(x)), M)) for x in GEN_NAMES}
    weights = [tuple(w.inv() for w in wt) for wt in M.weights] if M.weights else None
    return WeightModule(action, [f"{lab}*" for lab in M.basis_labels], weights)


def twisted_dual(M: WeightModule) -> WeightModule:
    """Dual twisted by the anti-involution i: X acts by the transpose of i(X)."""
    action = {x: la.transpose(matrix_of(anti_involution(generator(x)), M)) for x in GEN_NAMES}
    return WeightModule(action, [f"{lab}^" for lab in M.basis_labels], M.weights)


def extension_module(d: HighestWeightData, p: ExtensionParams) -> WeightModule:
    """V_{ε,n} ⊗ M_{x,y} on the basis v_0⊗w1..v_n⊗w1, v_0⊗w2..v_n⊗w2.

    The span of the ``w1`` vectors is a submodule isomorphic to V_{ε,n,α,β}
    and so is the quotient; ``x`` and ``y`` twist g and h.
    """
    d = _coerce_hw(d)
    if not isinstance(p, ExtensionParams):
        p = ExtensionParams(*p)
    eps, n, alpha, beta = d.epsilon, d.n, d.alpha, d.beta
    x, y = p.x, p.y
    dim = 2 * (n + 1)

    def i1(k):
        return k

    def i2(k):
        return n + 1 + k

    E, F, K, g, h = (la.zeros(dim, dim) for _ in range(5))
    for k in range(n + 1):
        lam = eps * qpow(n - 2 * k)
        for i in (i1, i2):
            K[i(k)][i(k)] = lam * alpha
            g[i(k)][i(k)] = alpha
            h[i(k)][i(k)] = beta
            if k < n:
                F[i(k + 1)][i(k)] = qint(k + 1)
            if k > 0:
                E[i(k - 1)][i(k)] = eps * alpha * qint(n - k + 1)
        K[i1(k)][i2(k)] = lam * x
        g[i1(k)][i2(k)] = x
        h[i1(k)][i2(k)] = y
        if k > 0:
            E[i1(k - 1)][i2(k)] = eps * qint(n - k + 1) * x
    labels = [f"v{k}⊗w1" for k in range(n + 1)] + [f"v{k}⊗w2" for k in range(n + 1)]
    weights = [(K[i][i], alpha, beta) for i in range(dim)]
    return WeightModule({"E": E, "F": F, "K": K, "g": g, "h": h}, labels, weights)


# -- verification ---------------------------------------------------------------


@dataclass
class ModuleReport:
    ok: bool
    failed_relation: str | None = None
    entry: tuple[int, int] | None = None
    checked: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failed_relation": self.failed_relation,
            "entry": list(self.entry) if self.entry else None,
            "checked": self.checked,
        }


def _relations(M: WeightModule):
    A = M.action
    mm = la.mat_mul
    one = la.identity(M.dim)
    q2, qm2 = qpow(2), qpow(-2)
    inv_qmq = (qpow(1) - qpow(-1)).inv()
    yield "K E K^-1 = q^2 E", mm(A["K"], A["E"]), la.mat_scale(q2, mm(A["E"], A["K"]))
    yield "K F K^-1 = q^-2 F", mm(A["K"], A["F"]), la.mat_scale(qm2, mm(A["F"], A["K"]))
    yield (
        "E F - F E = (K - K^-1 g^2)/(q - q^-1)",
        la.mat_sub(mm(A["E"], A["F"]), mm(A["F"], A["E"])),
        la.mat_scale(inv_qmq, la.mat_sub(A["K"], mm(A["K^-1"], mm(A["g"], A["g"])))),
    )
    for x, xi in (("K", "K^-1"), ("g", "g^-1"), ("h", "h^-1")):
        yield f"{x} {xi} = 1", mm(A[x], A[xi]), one
        yield f"{xi} {x} = 1", mm(A[xi], A[x]), one
    for c in ("g", "h"):
        for x in ("E", "F", "K", "g", "h"):
            if x != c:
                yield f"{c} {x} = {x} {c}", mm(A[c], A[x]), mm(A[x], A[c])


def check_module(M: WeightModule) -> ModuleReport:
    """Check every defining relation as an exact matrix identity."""
    checked = []
    for name, lhs, rhs in _relations(M):
        checked.append(name)
        diff = la.first_difference(lhs, rhs)
        if diff is not None:
            return ModuleReport(False, name, diff, checked)
    return ModuleReport(True, None, None, checked)


# -- highest weight theory --------------------------------------------------------


@dataclass(frozen=True)
class HighestWeightResult:
    vectors: tuple = ()  # (vector, (λ, α, β)) pairs
    non_diagonalizable: tuple = ()  # names among K, g, h

    @property
    def diagonalizable(self) -> bool:
        return not self.non_diagonalizable

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _distinct_diagonal(m: la.Matrix) -> list[RatFunc]:
    seen = []
    for i in range(len(m)):
        if m[i][i] not in seen:
            seen.append(m[i][i])
    return seen


def _shifted(m: la.Matrix, lam: RatFunc) -> list[dict[int, RatFunc]]:
    rows = []
    for i, row in enumerate(m):
        r = {j: x for j, x in enumerate(row) if x and j != i}
        d = row[i] - lam
        if d:
            r[i] = d
        rows.append(r)
    return rows


def _rows(m: la.Matrix) -> list[dict[int, RatFunc]]:
    return [{j: x for j, x in enumerate(row) if x} for row in m]


def highest_weight_vectors(M: WeightModule) -> HighestWeightResult:
    """Vectors killed by E that are common eigenvectors of K, g, h.

    If one of K, g, h does not act diagonalizably on ker E the result
    carries that operator in ``non_diagonalizable`` and no vectors.
    """
    e_rows = _rows(M.action["E"])
    ker_dim = len(la.nullspace_sparse(e_rows, M.dim))
    cands = {x: _distinct_diagonal(M.action[x]) for x in ("K", "g", "h")}
    bad = []
    for x in ("K", "g", "h"):
        total = sum(
            len(la.nullspace_sparse(e_rows + _shifted(M.action[x], lam), M.dim)) for lam in cands[x]
        )
        if total != ker_dim:
            bad.append(x)
    if bad:
        return HighestWeightResult((), tuple(bad))
    out = []
    for lam in cands["K"]:
        k_rows = e_rows + _shifted(M.action["K"], lam)
        if not la.nullspace_sparse(k_rows, M.dim):
            continue
        for a in cands["g"]:
            g_rows = k_rows + _shifted(M.action["g"], a)
            if not la.nullspace_sparse(g_rows, M.dim):
                continue
            for b in cands["h"]:
                for v in la.nullspace_sparse(g_rows + _shifted(M.action["h"], b), M.dim):
                    out.append((v, (lam, a, b)))
    return HighestWeightResult(tuple(out), ())


class NotCompletelyReducibleError(ValueError):
    def __init__(self, message: str, defect: int):
        super().__init__(message)
        self.defect = defect


def decompose(M: WeightModule) -> Counter:
    """Multiset of simple constituents of a completely reducible module.

    Raises :class:`NotCompletelyReducibleError` with the dimension not
    covered by the submodules generated by highest-weight vectors.
    """
    hw = highest_weight_vectors(M)
    if hw.non_diagonalizable:
        raise NotCompletelyReducibleError(
            f"{'/'.join(hw.non_diagonalizable)} not diagonalizable on highest-weight space",
            M.dim - len(hw.vectors),
        )
    F = M.action["F"]
    span = []
    result = Counter()
    for v, (lam, alpha, beta) in hw.vectors:
        string = [v]
        while True:
            w = la.mat_vec(F, string[-1])
            if la.vec_is_zero(w) or len(string) > M.dim:
                break
            string.append(w)
        n = len(string) - 1
        eps_rf = lam / (alpha * qpow(n))
        if eps_rf == 1:
            eps = 1
        elif eps_rf == -1:
            eps = -1
        else:
            raise NotCompletelyReducibleError(
                f"highest weight {lam} is not ±alpha q^{n} for an F-string of length {n + 1}", M.dim
            )
        result[HighestWeightData(eps, n, alpha, beta)] += 1
        span.extend(string)
    r = la.rank(span) if span else 0
    if r != M.dim:
        raise NotCompletelyReducibleError(
            f"highest-weight submodules span {r} of {M.dim} dimensions", M.dim - r
        )
    return result


# -- homomorphisms --------------------------------------------------------------


def _commutation_rows(A: la.Matrix, B: la.Matrix, rows_out: int, cols_out: int):
    """Equations for X (rows_out x cols_out) with X A = B X, X flattened row-major."""
    eqs = []
    for i in range(rows_out):
        for j in range(cols_out):
            r: dict[int, RatFunc] = {}
            for k in range(cols_out):
                a = A[k][j]
                if a:
                    idx = i * cols_out + k
                    r[idx] = r.get(idx, ZERO) + a
            for k in range(rows_out):
                b = B[i][k]
                if b:
                    idx = k * cols_out + j
                    r[idx] = r.get(idx, ZERO) - b
            r = {k: v for k, v in r.items() if v}
            if r:
                eqs.append(r)
    return eqs


def intertwiner_space(M: WeightModule, N: WeightModule) -> list[la.Matrix]:
    """Basis of Hom(M, N) as N.dim x M.dim matrices."""
    eqs = []
    for x in _BASIC:
        eqs.extend(_commutation_rows(M.action[x], N.action[x], N.dim, M.dim))
    basis = la.nullspace_sparse(eqs, N.dim * M.dim)
    return [[v[i * M.dim : (i + 1) * M.dim] for i in range(N.dim)] for v in basis]


def is_intertwiner(X: la.Matrix, M: WeightModule, N: WeightModule) -> bool:
    return all(
        la.mat_equal(la.mat_mul(X, M.action[x]), la.mat_mul(N.action[x], X)) for x in GEN_NAMES
    )


def isomorphic(M: WeightModule, N: WeightModule, seed: int = 0, tries: int = 5):
    """An invertible intertwiner M -> N, or ``None``.

    A generic small-integer combination of a basis of Hom(M, N) is tested for
    invertibility, with up to ``tries`` samples.
    """
    if M.dim != N.dim:
        return None
    basis = intertwiner_space(M, N)
    if not basis:
        return None
    rng = random.Random(seed)
    for attempt in range(tries):
        if attempt == 0 and len(basis) == 1:
            coeffs = [1]
        else:
            coeffs = [rng.randint(1, 7 + 3 * attempt) for _ in basis]
        X = la.zeros(N.dim, M.dim)
        for c, B in zip(coeffs, basis):
            X = la.mat_add(X, la.mat_scale(c, B))
        if la.is_invertible(X):
            return X
        if len(basis) == 1:
            break
    return None


def _as_columns(vectors) -> la.Matrix:
    vectors = [[as_ratfunc(x) for x in v] for v in vectors]
    return la.transpose(vectors)


def is_submodule(M: WeightModule, sub) -> bool:
    B = _as_columns(sub)
    r = la.rank(la.transpose(B))
    for x in GEN_NAMES:
        XB = la.mat_mul(M.action[x], B)
        if la.rank(la.transpose(B) + la.transpose(XB)) != r:
            return False
    return True


def is_split_selfextension(M: WeightModule, sub) -> bool:
    """Whether the submodule spanned by ``sub`` has a complementary submodule.

    Decided by solving for a module map Y: M -> sub with Y restricted to sub
    equal to the identity.
    """
    sub = [[as_ratfunc(x) for x in v] for v in sub]
    k, d = len(sub), M.dim
    if la.rank(sub) != k:
        raise ValueError("sub vectors are linearly dependent")
    if not is_submodule(M, sub):
        raise ValueError("sub is not a submodule")
    B = _as_columns(sub)  # d x k
    # action on sub in the basis given by the vectors: X B = B R_X
    restricted = {}
    for x in _BASIC:
        XB = la.mat_mul(M.action[x], B)
        cols = []
        for j in range(k):
            sol = la.solve(B, [XB[i][j] for i in range(d)])
            cols.append(sol)
        restricted[x] = la.transpose(cols)
    # unknown Y (k x d): Y A_x = R_x Y for all x, and Y B = I
    eqs = []
    for x in _BASIC:
        eqs.extend(_commutation_rows(M.action[x], restricted[x], k, d))
    rhs_index = k * d
    for i in range(k):
        for j in range(k):
            r = {i * d + m: B[m][j] for m in range(d) if B[m][j]}
            if i == j:
                r[rhs_index] = -ONE
            eqs.append(r)
    # inconsistent iff the constant column becomes a pivot
    _, pivots = la._rref_rows(eqs, rhs_index + 1)
    return rhs_index not in pivots


def ext_dims_torus(alpha, beta, alpha2, beta2) -> tuple[int, int, int]:
    """Dimensions of Ext^0, Ext^1, Ext^2 between one-dimensional torus modules.

    Uses the Koszul complex K -> K^2 -> K with maps (α'-α, β'-β)^T and
    (β'-β, -(α'-α)).
    """
    vals = [as_ratfunc(v) for v in (alpha, beta, alpha2, beta2)]
    if any(not v for v in vals):
        raise ValueError("torus parameters must be nonzero")
    a, b, a2, b2 = vals
    phi1 = [[a2 - a], [b2 - b]]
    phi2 = [[b2 - b, -(a2 - a)]]
    r1, r2 = la.rank(phi1), la.rank(phi2)
    return (1 - r1, 2 - r2 - r1, 1 - r2)
