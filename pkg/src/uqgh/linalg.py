"""Dense matrices over Q(q) and sparse Gaussian elimination.

Matrices are lists of rows of :class:`RatFunc`.  Elimination works on
sparse rows (dicts column -> entry) and picks the simplest available pivot,
which keeps intermediate rational functions small.
"""

from __future__ import annotations

from .field import ONE, ZERO, RatFunc, as_ratfunc

Matrix = list[list[RatFunc]]
Vector = list[RatFunc]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def as_matrix(rows) -> Matrix:
    return [[as_ratfunc(x) for x in row] for row in rows]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    c = as_ratfunc(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner, cols = len(b), (len(b[0]) if b else 0)
    if len(a[0]) != inner:
        raise ValueError(f"shape mismatch: {shape(a)} times {shape(b)}")
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if a and len(a[0]) != len(v):
        raise ValueError(f"shape mismatch: {shape(a)} times vector of length {len(v)}")
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if not x:
                continue
            for k in range(rb):
                for l in range(cb):
                    y = b[k][l]
                    if y:
                        out[i * rb + k][j * cb + l] = x * y
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def first_difference(a: Matrix, b: Matrix):
    """First ``(i, j)`` where the matrices differ, or ``None``."""
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return i, j
    return None


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


# -- elimination ---------------------------------------------------------------


def _size(x: RatFunc) -> int:
    # rough complexity of a pivot candidate
    return len(x._num.coeffs()) + len(x._den.coeffs())


def _rref_rows(rows: list[dict[int, RatFunc]], ncols: int):
    """Reduced row echelon form of sparse rows. Returns (rows, pivot_cols)."""
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    done: list[dict[int, RatFunc]] = []
    for col in range(ncols):
        best = None
        for idx, r in enumerate(rows):
            x = r.get(col)
            if x is not None and (best is None or _size(x) < best[1]):
                best = (idx, _size(x))
        if best is None:
            continue
        prow = rows.pop(best[0])
        inv = prow[col].inv()
        prow = {j: x * inv for j, x in prow.items()}
        for r in rows + done:
            f = r.get(col)
            if f is None:
                continue
            for j, x in prow.items():
                y = r.get(j, ZERO) - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        rows = [r for r in rows if r]
        done.append(prow)
        pivots.append(col)
        if not rows:
            break
    return done, pivots


def _sparse(a: Matrix) -> list[dict[int, RatFunc]]:
    return [{j: x for j, x in enumerate(row) if x} for row in a]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    ncols = shape(a)[1]
    rows, pivots = _rref_rows(_sparse(a), ncols)
    dense = [[r.get(j, ZERO) for j in range(ncols)] for r in rows]
    return dense, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(_rref_rows(_sparse(a), shape(a)[1])[1])


def nullspace_sparse(rows: list[dict[int, RatFunc]], ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    red, pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(red, pivots):
            x = r.get(free)
            if x is not None:
                v[p] = -x
        basis.append(v)
    return basis


def nullspace(a: Matrix) -> list[Vector]:
    return nullspace_sparse(_sparse(a), shape(a)[1])


def column_space(a: Matrix) -> list[Vector]:
    """A basis of the column span (pivot columns of ``a``)."""
    _, pivots = rref(a)
    cols = transpose(a)
    return [cols[j] for j in pivots]


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of ``a x = b``, or ``None`` if inconsistent."""
    ncols = shape(a)[1]
    aug = []
    for row, bi in zip(a, b):
        r = {j: x for j, x in enumerate(row) if x}
        if bi:
            r[ncols] = bi
        aug.append(r)
    red, pivots = _rref_rows(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in zip(red, pivots):
        x[p] = r.get(ncols, ZERO)
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [{j: x for j, x in enumerate(row) if x} | {n + i: ONE} for i, row in enumerate(a)]
    red, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    out = zeros(n, n)
    for r, p in zip(red, pivots):
        for j in range(n):
            out[p][j] = r.get(n + j, ZERO)
    return out


def is_invertible(a: Matrix) -> bool:
    return len(a) == shape(a)[1] and rank(a) == len(a)


def vec_is_zero(v: Vector) -> bool:
    return all(not x for x in v)


def vec_scale(c, v: Vector) -> Vector:
    c = as_ratfunc(c)
    return [c * x for x in v]


def vec_add(u: Vector, v: Vector) -> Vector:
    return [x + y for x, y in zip(u, v)]


def vec_sub(u: Vector, v: Vector) -> Vector:
    return [x - y for x, y in zip(u, v)]


def proportional(u: Vector, v: Vector) -> RatFunc | None:
    """``c`` with ``u == c v`` (``v`` nonzero), else ``None``."""
    c = None
    for x, y in zip(u, v):
        if y:
            c = x / y
            break
    if c is None:
        return None
    return c if all(x == c * y for x, y in zip(u, v)) else None
