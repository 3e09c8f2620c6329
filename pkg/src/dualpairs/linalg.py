"""Dense exact linear algebra and finite free algebras.

Matrices are stored row-major over a Ring.  Two algebra presentations are
supported: MonicPoly (the power basis of R[x]/(f)) and SCAlgebra (explicit
structure constants).  Both expose the same small protocol -- dim, base,
unit_row(), mul_coords() and to_sc() -- so the dual-pair layer can treat
them interchangeably.

Conventions: matrices of linear maps act on column coordinate vectors
(column j = image of the j-th basis vector); matrices describing a basis of
a subspace have one basis vector per row.
"""

from __future__ import annotations

import itertools
from collections import namedtuple

from .errors import (
    DimensionCapExceeded,
    MixedBase,
    NoPrimitiveElement,
    NotInvertible,
    NotSubalgebra,
    UnsupportedRing,
)
from . import rings
from .rings import Ring, RingElement, coefficient_map

DIMENSION_CAP = 64


class Matrix:
    """Immutable exact matrix over a Ring."""

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring: Ring, data):
        self.ring = ring
        self.data = tuple(tuple(row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        zero = ring.zero()
        return cls(ring, [[zero] * cols for _ in range(rows)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ring.key(), self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.to_str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def column(self, j: int):
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [self.column(j) for j in range(self.cols)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise MixedBase("matrix product over mixed rings")
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not match")
        R = self.ring
        ot = other.transpose()
        return Matrix(R, [[_dot(R, row, col) for col in ot.data] for row in self.data])

    def matvec(self, vec):
        """M @ v for a column coordinate vector given as a flat sequence."""
        R = self.ring
        return tuple(_dot(R, row, vec) for row in self.data)

    def vecmat(self, vec):
        """v @ M for a row coordinate vector given as a flat sequence."""
        R = self.ring
        return tuple(_dot(R, vec, self.column(j)) for j in range(self.cols))

    def map_entries(self, fn, ring: Ring) -> "Matrix":
        return Matrix(ring, [[fn(x) for x in row] for row in self.data])

    def to_lists(self):
        return [list(row) for row in self.data]

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        _, det = _invert_with_det(self, need_inverse=False)
        return det

    def is_invertible(self) -> bool:
        try:
            return not self.ring.is_zero(self.det())
        except NotInvertible:
            return False


def _dot(R: Ring, u, v):
    acc = R.zero()
    for x, y in zip(u, v):
        if not R.is_zero(x) and not R.is_zero(y):
            acc = R.add(acc, R.mul(x, y))
    return acc


def _invert_with_det(M: Matrix, need_inverse: bool = True):
    """Gaussian elimination with exact pivoting; returns (inverse|None, det)."""
    R = M.ring
    n = M.rows
    a = [list(row) for row in M.data]
    inv = [list(row) for row in Matrix.identity(R, n).data] if need_inverse else None
    det = R.one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if not R.is_zero(a[r][col])), None)
        if pivot is None:
            raise NotInvertible("matrix is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            if need_inverse:
                inv[col], inv[pivot] = inv[pivot], inv[col]
            det = R.neg(det)
        det = R.mul(det, a[col][col])
        c = R.inv(a[col][col])
        a[col] = [R.mul(c, x) for x in a[col]]
        if need_inverse:
            inv[col] = [R.mul(c, x) for x in inv[col]]
        for r in range(n):
            if r == col or R.is_zero(a[r][col]):
                continue
            factor = a[r][col]
            a[r] = [R.sub(x, R.mul(factor, y)) for x, y in zip(a[r], a[col])]
            if need_inverse:
                inv[r] = [R.sub(x, R.mul(factor, y)) for x, y in zip(inv[r], inv[col])]
    return (Matrix(R, inv) if need_inverse else None), det


def invert(M: Matrix) -> Matrix:
    inv, _ = _invert_with_det(M)
    return inv


def inverse_transpose(M: Matrix) -> Matrix:
    """The matrix N with M^t N = 1."""
    if M.rows != M.cols:
        raise NotInvertible("inverse transpose of a non-square matrix")
    return invert(M).transpose()


def solve_right(M: Matrix, rhs):
    """Unique solution x of M x = rhs for square invertible M."""
    return invert(M).matvec(rhs)


def kron(A: Matrix, B: Matrix) -> Matrix:
    if A.ring != B.ring:
        raise MixedBase("Kronecker product over mixed rings")
    R = A.ring
    data = []
    for ai in range(A.rows):
        for bi in range(B.rows):
            row = []
            for aj in range(A.cols):
                for bj in range(B.cols):
                    row.append(R.mul(A.entry(ai, aj), B.entry(bi, bj)))
            data.append(row)
    return Matrix(R, data)


def rref(ring: Ring, rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not ring.is_zero(rows[i][col])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        c = ring.inv(rows[r][col])
        rows[r] = [ring.mul(c, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not ring.is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def nullspace(ring: Ring, rows, ncols: int):
    """Basis rows of the right kernel {v : rows @ v = 0}."""
    red, pivots = rref(ring, rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        vec = [ring.zero()] * ncols
        vec[j] = ring.one()
        for r, pc in enumerate(pivots):
            vec[pc] = ring.neg(red[r][j])
        basis.append(tuple(vec))
    return basis


def coords_in_rowspace(ring: Ring, basis_rows, vec):
    """Coefficients expressing vec in the given independent rows, or None."""
    if not basis_rows:
        return () if all(ring.is_zero(x) for x in vec) else None
    n = len(vec)
    aug = [list(row) + [x] for row, x in zip(zip(*basis_rows), vec)]  # transpose | vec
    red, pivots = rref(ring, aug)
    k = len(basis_rows)
    if k in pivots:
        return None  # vec independent of the rows
    coeffs = [ring.zero()] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = red[r][k]
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Algebra presentations
# ---------------------------------------------------------------------------

class MonicPoly:
    """A monic polynomial c0 + c1 x + ... + x^n over a base ring.

    Doubles as the power-basis presentation of the algebra R[x]/(f).
    """

    __slots__ = ("base", "coeffs", "_cache")

    kind = "monogenic"

    def __init__(self, base: Ring, coeffs):
        payloads = []
        for c in coeffs:
            if isinstance(c, RingElement):
                payloads.append(c.payload)
            elif isinstance(c, int):
                payloads.append(base.from_int(c))
            else:
                payloads.append(c)
        self.base = base
        self.coeffs = tuple(payloads)
        self._cache = {}

    @classmethod
    def from_roots(cls, base: Ring, root_payloads) -> "MonicPoly":
        poly = [base.one()]
        for r in root_payloads:
            poly = rings._pmul(base, poly, [base.neg(r), base.one()])
        full = list(poly) + [base.zero()] * 0
        return cls(base, full[:-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def dim(self) -> int:
        return self.degree

    def __eq__(self, other):
        return (
            isinstance(other, MonicPoly)
            and self.base == other.base
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.base.key(), self.coeffs))

    def __repr__(self):
        terms = [self.base.to_str(c) for c in self.coeffs]
        return f"MonicPoly({terms} + x^{self.degree})"

    def __call__(self, x):
        if isinstance(x, RingElement):
            emb = coefficient_map(self.base, x.ring)
            if emb is None:
                raise UnsupportedRing("cannot evaluate over this ring")
            coeffs = [emb(c) for c in self.coeffs] + [x.ring.one()]
            return RingElement(x.ring, rings._peval(x.ring, coeffs, x.payload))
        coeffs = list(self.coeffs) + [self.base.one()]
        return rings._peval(self.base, coeffs, x)

    def derivative(self):
        """Raw low-first coefficient list of f' (not monic)."""
        full = list(self.coeffs) + [self.base.one()]
        der = [self.base.mul(self.base.from_int(i), full[i]) for i in range(1, len(full))]
        return rings._pnorm(self.base, der)

    def is_squarefree(self) -> bool:
        full = list(self.coeffs) + [self.base.one()]
        g = rings._pgcd(self.base, full, self.derivative())
        return len(g) == 1

    def map_ring(self, S: Ring) -> "MonicPoly":
        emb = coefficient_map(self.base, S)
        if emb is None:
            raise UnsupportedRing(f"cannot map coefficients into {S!r}")
        return MonicPoly(S, [emb(c) for c in self.coeffs])

    # -- algebra protocol ----------------------------------------------------

    def unit_row(self):
        n = self.degree
        return (self.base.one(),) + (self.base.zero(),) * (n - 1)

    def mul_coords(self, u, v, S: Ring | None = None):
        S = S or self.base
        table = self._sparse_rows(S)
        return _sparse_mul(S, table, self.degree, u, v)

    def to_sc(self) -> "SCAlgebra":
        return monogenic_to_sc(self)

    def _sparse_rows(self, S: Ring):
        key = S.key()
        cached = self._cache.get(("rows", key))
        if cached is not None:
            return cached
        emb = coefficient_map(self.base, S)
        if emb is None:
            raise UnsupportedRing(f"cannot map coefficients into {S!r}")
        n = self.degree
        # coordinates of x^k for k = 0 .. 2n-2, reduced mod f, over S
        mod = [emb(c) for c in self.coeffs]
        powers = []
        cur = [S.one()] + [S.zero()] * (n - 1)
        for _ in range(2 * n - 1):
            powers.append(list(cur))
            cur = rings._pmod_monic(S, [S.zero()] + cur, mod) if n > 0 else []
        table = {}
        for i in range(n):
            for j in range(i, n):
                row = powers[i + j]
                table[(i, j)] = tuple((k, c) for k, c in enumerate(row) if not S.is_zero(c))
        self._cache[("rows", key)] = table
        return table


class SCAlgebra:
    """A finite free commutative algebra given by structure constants.

    sc[i][j][k] is the coefficient of e_k in e_i e_j; unit is the coordinate
    row of 1.
    """

    __slots__ = ("base", "dim", "sc", "unit", "_cache")

    kind = "sc"

    def __init__(self, base: Ring, sc, unit, check: bool = True):
        self.base = base
        self.sc = tuple(tuple(tuple(row) for row in plane) for plane in sc)
        self.unit = tuple(unit)
        self.dim = len(self.sc)
        self._cache = {}
        if self.dim > DIMENSION_CAP:
            raise DimensionCapExceeded(f"dimension {self.dim} exceeds cap {DIMENSION_CAP}")
        if check:
            self.validate()

    def validate(self):
        R, n = self.base, self.dim
        if len(self.unit) != n:
            raise ValueError("unit vector has wrong length")
        for i in range(n):
            if len(self.sc[i]) != n or any(len(r) != n for r in self.sc[i]):
                raise ValueError("structure constant tensor has wrong shape")
        for i in range(n):
            for j in range(i + 1, n):
                if self.sc[i][j] != self.sc[j][i]:
                    raise ValueError("structure constants are not commutative")
        basis = [tuple(R.one() if t == k else R.zero() for t in range(n)) for k in range(n)]
        for k in range(n):
            if self.mul_coords(self.unit, basis[k]) != basis[k]:
                raise ValueError("unit law fails")
        for i in range(n):
            for j in range(i, n):
                eij = self.mul_coords(basis[i], basis[j])
                for k in range(n):
                    left = self.mul_coords(eij, basis[k])
                    right = self.mul_coords(basis[i], self.mul_coords(basis[j], basis[k]))
                    if left != right:
                        raise ValueError(f"associativity fails at ({i},{j},{k})")

    def __eq__(self, other):
        return (
            isinstance(other, SCAlgebra)
            and self.base == other.base
            and self.sc == other.sc
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.base.key(), self.sc, self.unit))

    def __repr__(self):
        return f"SCAlgebra(dim={self.dim} over {self.base!r})"

    # -- algebra protocol ------------------------------------------------------

    def unit_row(self):
        return self.unit

    def mul_coords(self, u, v, S: Ring | None = None):
        S = S or self.base
        table = self._sparse_rows(S)
        return _sparse_mul(S, table, self.dim, u, v)

    def to_sc(self) -> "SCAlgebra":
        return self

    def _sparse_rows(self, S: Ring):
        key = S.key()
        cached = self._cache.get(("rows", key))
        if cached is not None:
            return cached
        emb = coefficient_map(self.base, S)
        if emb is None:
            raise UnsupportedRing(f"cannot map coefficients into {S!r}")
        table = {}
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                row = self.sc[i][j]
                entries = tuple(
                    (k, emb(c)) for k, c in enumerate(row) if not self.base.is_zero(c)
                )
                table[(i, j)] = entries
        self._cache[("rows", key)] = table
        return table


def _sparse_mul(S: Ring, table, n: int, u, v):
    out = [S.zero()] * n
    for i, x in enumerate(u):
        if S.is_zero(x):
            continue
        for j, y in enumerate(v):
            if S.is_zero(y):
                continue
            xy = S.mul(x, y)
            row = table[(i, j)] if i <= j else table[(j, i)]
            for k, c in row:
                out[k] = S.add(out[k], S.mul(xy, c))
    return tuple(out)


def algebra_basis(alg):
    R, n = alg.base, alg.dim
    return [tuple(R.one() if t == k else R.zero() for t in range(n)) for k in range(n)]


def monogenic_to_sc(f: MonicPoly) -> SCAlgebra:
    """Structure constants of the power basis of R[x]/(f)."""
    R, n = f.base, f.degree
    table = f._sparse_rows(R)
    sc = [[[R.zero()] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            row = table[(i, j)] if i <= j else table[(j, i)]
            for k, c in row:
                sc[i][j][k] = c
    return SCAlgebra(R, sc, f.unit_row(), check=False)


def tensor_sc(A, B) -> SCAlgebra:
    """Tensor product algebra with basis (i,j) in lexicographic order."""
    if A.base != B.base:
        raise MixedBase("tensor product over mixed bases")
    R = A.base
    a, b = A.to_sc(), B.to_sc()
    n, m = a.dim, b.dim
    dim = n * m
    if dim > DIMENSION_CAP:
        raise DimensionCapExceeded(f"tensor dimension {dim} exceeds cap")
    sc = [[[R.zero()] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(n):
        for i2 in range(m):
            p = i1 * m + i2
            for j1 in range(n):
                for j2 in range(m):
                    q = j1 * m + j2
                    for k1 in range(n):
                        c1 = a.sc[i1][j1][k1]
                        if R.is_zero(c1):
                            continue
                        for k2 in range(m):
                            c2 = b.sc[i2][j2][k2]
                            if R.is_zero(c2):
                                continue
                            sc[p][q][k1 * m + k2] = R.mul(c1, c2)
    unit = [R.zero()] * dim
    for i1 in range(n):
        for i2 in range(m):
            unit[i1 * m + i2] = R.mul(a.unit[i1], b.unit[i2])
    return SCAlgebra(R, sc, unit, check=False)


def tensor_mul(A, B, u, v, S: Ring | None = None):
    """Product of two elements of A (x) B given as flat (i,j)-lex coordinate rows.

    Works without materialising the tensor-product structure constants.
    """
    S = S or A.base
    ta, tb = A.to_sc()._sparse_rows(S), B.to_sc()._sparse_rows(S)
    n, m = A.dim, B.dim
    out = [S.zero()] * (n * m)
    nz_u = [(divmod(p, m), x) for p, x in enumerate(u) if not S.is_zero(x)]
    nz_v = [(divmod(q, m), y) for q, y in enumerate(v) if not S.is_zero(y)]
    for (i1, i2), x in nz_u:
        for (j1, j2), y in nz_v:
            xy = S.mul(x, y)
            row1 = ta[(i1, j1)] if i1 <= j1 else ta[(j1, i1)]
            row2 = tb[(i2, j2)] if i2 <= j2 else tb[(j2, i2)]
            for k1, c1 in row1:
                xc = S.mul(xy, c1)
                for k2, c2 in row2:
                    idx = k1 * m + k2
                    out[idx] = S.add(out[idx], S.mul(xc, c2))
    return tuple(out)


QuotientResult = namedtuple("QuotientResult", ["algebra", "projection", "lift", "ideal_basis"])


def ideal_quotient(alg, gens) -> QuotientResult:
    """Quotient of an algebra over a field by the ideal generated by gens.

    The ideal is the smallest subspace containing gens and closed under
    multiplication by basis vectors.  The quotient basis is the echelon
    complement (non-pivot coordinates), so results are deterministic.
    """
    R, n = alg.base, alg.dim
    basis = algebra_basis(alg)
    current = [g for g in gens if not all(R.is_zero(x) for x in g)]
    rows, pivots = rref(R, current) if current else ([], [])
    while True:
        new = []
        for row in rows:
            for e in basis:
                prod = alg.mul_coords(row, e)
                new.append(prod)
        combined, piv2 = rref(R, list(rows) + new) if (rows or new) else ([], [])
        if len(combined) == len(rows):
            break
        rows, pivots = combined, piv2
    comp = [j for j in range(n) if j not in pivots]
    dim_q = len(comp)

    def reduce_mod(vec):
        vec = list(vec)
        for r, pc in enumerate(pivots):
            c = vec[pc]
            if not R.is_zero(c):
                vec = [R.sub(x, R.mul(c, y)) for x, y in zip(vec, rows[r])]
        return vec

    def project(vec):
        red = reduce_mod(vec)
        return tuple(red[j] for j in comp)

    proj_cols = [project(e) for e in basis]
    projection = Matrix(R, [[proj_cols[j][r] for j in range(n)] for r in range(dim_q)])
    lift_rows = [basis[j] for j in comp]
    sc = [[[R.zero()] * dim_q for _ in range(dim_q)] for _ in range(dim_q)]
    for i in range(dim_q):
        for j in range(i, dim_q):
            prod = project(alg.mul_coords(lift_rows[i], lift_rows[j]))
            for k in range(dim_q):
                sc[i][j][k] = prod[k]
                sc[j][i][k] = prod[k]
    unit_q = project(alg.unit_row())
    quotient = SCAlgebra(R, sc, unit_q, check=False)
    lift = Matrix(R, lift_rows) if dim_q else Matrix(R, [])
    ideal = Matrix(R, rows) if rows else Matrix(R, [])
    return QuotientResult(quotient, projection, lift, ideal)


def subalgebra_on_rows(alg, basis_rows):
    """Inherited structure constants on a subspace, or NotSubalgebra."""
    R = alg.base
    m = len(basis_rows)
    unit_coeffs = coords_in_rowspace(R, basis_rows, alg.unit_row())
    if unit_coeffs is None:
        raise NotSubalgebra("subspace does not contain the unit")
    sc = [[[R.zero()] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            prod = alg.mul_coords(basis_rows[i], basis_rows[j])
            coeffs = coords_in_rowspace(R, basis_rows, prod)
            if coeffs is None:
                raise NotSubalgebra("subspace is not closed under multiplication")
            for k in range(m):
                sc[i][j][k] = coeffs[k]
                sc[j][i][k] = coeffs[k]
    return SCAlgebra(R, sc, unit_coeffs, check=False)


def equalizer_subalgebra(g: Matrix, g0: Matrix, alg):
    """Kernel of (g - g0) as a subalgebra of alg; returns (algebra, basis rows)."""
    if g.ring != g0.ring or g.rows != g0.rows or g.cols != g0.cols:
        raise MixedBase("equalizer of maps with different shapes or rings")
    R = g.ring
    diff_rows = [
        tuple(R.sub(g.entry(i, j), g0.entry(i, j)) for j in range(g.cols))
        for i in range(g.rows)
    ]
    basis = nullspace(R, diff_rows, g.cols)
    sub = subalgebra_on_rows(alg, basis)
    return sub, Matrix(R, basis) if basis else Matrix(R, [])


def orthogonal_complement(phi: Matrix, W: Matrix) -> Matrix:
    """Basis rows of {b : w Phi b^t = 0 for all rows w of W}."""
    R = phi.ring
    if phi.rows != phi.cols:
        raise NotInvertible("pairing matrix must be square")
    if not phi.is_invertible():
        raise NotInvertible("pairing matrix is singular")
    if W.rows == 0:
        return Matrix.identity(R, phi.cols)
    constraint = W * phi  # rows: functional b -> w Phi b^t
    basis = nullspace(R, constraint.data, phi.cols)
    return Matrix(R, basis) if basis else Matrix(R, [])


PRIMITIVE_CAND_CAP = 20000


def primitive_element(alg):
    """A generator of the algebra with independent powers, plus its data.

    Returns (coords, minimal polynomial, T) where row i of T holds the
    coordinates of the i-th power of the generator.  The search is
    deterministic: basis vectors first, then integer combinations with
    coefficients 0..dim.
    """
    R, n = alg.base, alg.dim
    if n == 0:
        raise NoPrimitiveElement("zero algebra has no generator")
    basis = algebra_basis(alg)

    def candidates():
        for e in basis:
            yield e
        for combo in itertools.product(range(n + 1), repeat=n):
            if all(c == 0 for c in combo):
                continue
            yield tuple(
                _int_comb(R, combo)
            )

    def _int_comb(ring, combo):
        return [ring.from_int(c) for c in combo]

    tried = 0
    seen = set()
    for cand in candidates():
        cand = tuple(cand)
        if cand in seen:
            continue
        seen.add(cand)
        tried += 1
        if tried > PRIMITIVE_CAND_CAP:
            break
        powers = [alg.unit_row()]
        for _ in range(n):
            powers.append(alg.mul_coords(powers[-1], cand))
        _, pivots = rref(R, powers[:n])
        if len(pivots) < n:
            continue
        # minimal polynomial: express g^n in the first n powers
        coeffs = coords_in_rowspace(R, powers[:n], powers[n])
        minpoly = MonicPoly(R, [R.neg(c) for c in coeffs])
        T = Matrix(R, powers[:n])
        return cand, minpoly, T
    raise NoPrimitiveElement(f"no primitive element found for dim-{n} algebra")


# ---------------------------------------------------------------------------
# Algebra homomorphisms
# ---------------------------------------------------------------------------

def _monogenic_view(alg):
    """(minpoly, U) with U[j] = coefficients of basis vector j in generator powers.

    For a MonicPoly this is the identity view; for an SCAlgebra it comes from
    primitive_element.
    """
    cached = getattr(alg, "_cache", {}).get("monoview")
    if cached is not None:
        return cached
    if alg.kind == "monogenic":
        view = (alg, Matrix.identity(alg.base, alg.degree))
    else:
        _, minpoly, T = primitive_element(alg)
        view = (minpoly, invert(T))
    alg._cache["monoview"] = view
    return view


def poly_roots_in_algebra(f: MonicPoly, alg, seed: int = 0):
    """All coordinate rows alpha in alg with f(alpha) = 0.

    f has coefficients in the base ring of alg.  Over finite bases the search
    is exhaustive (capped); over Q the algebra is viewed through a primitive
    element and roots are obtained by the numeric-assisted exact finder.
    """
    R = alg.base
    n = alg.dim
    if f.degree == 1:
        root = tuple(R.mul(R.neg(f.coeffs[0]), x) for x in alg.unit_row())
        return [root]
    if R.cardinality() is not None:
        if R.cardinality() ** n > ENUMERATION_CAP:
            raise DimensionCapExceeded("finite enumeration above cap")
        out = []
        fmod = f
        for combo in itertools.product(list(R.elements()), repeat=n):
            if _poly_at_algebra_elt(fmod, alg, combo) == tuple([R.zero()] * n):
                out.append(tuple(combo))
        return sorted(out, key=lambda row: tuple(R.element_key(x) for x in row))
    if R.kind != "Q":
        raise UnsupportedRing("root finding in algebras needs a finite or rational base")
    minpoly, U = _monogenic_view(alg)
    if not minpoly.is_squarefree():
        raise UnsupportedRing("root finding in a non-etale algebra over Q")
    S = rings.extension(rings.QQ, minpoly.coeffs) if minpoly.degree > 1 else rings.QQ
    roots = rings.roots_in_ring(f, S, seed=seed)
    out = []
    Tmat = invert(U)  # rows: powers of the generator in algebra coordinates
    for r in roots:
        if minpoly.degree == 1:
            payload = (r.payload,)
        else:
            payload = r.payload
        # alpha = sum payload_i * (generator^i in algebra coords)
        alpha = [R.zero()] * n
        for i, c in enumerate(payload):
            if R.is_zero(c):
                continue
            for j in range(n):
                alpha[j] = R.add(alpha[j], R.mul(c, Tmat.entry(i, j)))
        out.append(tuple(alpha))
    return sorted(set(out), key=lambda row: tuple(R.element_key(x) for x in row))


def _poly_at_algebra_elt(f: MonicPoly, alg, coords):
    """Horner evaluation of f at an algebra element given by its coordinates."""
    R = alg.base
    out = tuple(R.zero() for _ in range(alg.dim))
    full = list(f.coeffs) + [R.one()]
    for c in reversed(full):
        out = alg.mul_coords(out, coords)
        if not R.is_zero(c):
            out = tuple(R.add(x, R.mul(c, u)) for x, u in zip(out, alg.unit_row()))
    return out


def algebra_homs_to_ring(alg, S: Ring, seed: int = 0):
    """All algebra homomorphisms alg -> S as coordinate rows over S, sorted."""
    R = alg.base
    emb = coefficient_map(R, S)
    if emb is None:
        raise UnsupportedRing(f"no coefficient map into {S!r}")
    if alg.kind == "monogenic":
        roots = rings.roots_in_ring(alg, S, seed=seed)
        rows = []
        for r in roots:
            row, acc = [], S.one()
            for _ in range(alg.degree):
                row.append(acc)
                acc = S.mul(acc, r.payload)
            rows.append(tuple(row))
        return sorted(rows, key=lambda row: tuple(S.element_key(x) for x in row))
    try:
        _, minpoly, T = primitive_element(alg)
    except NoPrimitiveElement:
        return _homs_by_enumeration(alg, S)
    roots = rings.roots_in_ring(minpoly, S, seed=seed)
    Tinv = invert(T)
    tinv_s = Tinv.map_entries(emb, S)
    rows = []
    for r in roots:
        powers, acc = [], S.one()
        for _ in range(alg.dim):
            powers.append(acc)
            acc = S.mul(acc, r.payload)
        # sigma(a_j) = sum_i Tinv[j][i]-transposed relation: sigma-vec = Tinv @ powers
        rows.append(tuple(tinv_s.matvec(powers)))
    return sorted(set(rows), key=lambda row: tuple(S.element_key(x) for x in row))


def _homs_by_enumeration(alg, S: Ring):
    card = S.cardinality()
    n = alg.dim
    if card is None or card ** n > ENUMERATION_CAP:
        raise DimensionCapExceeded("hom enumeration above cap")
    emb = coefficient_map(alg.base, S)
    basis = algebra_basis(alg)
    unit = alg.unit_row()
    out = []
    for combo in itertools.product(list(S.elements()), repeat=n):
        if _dot(S, combo, [emb(x) for x in unit]) != S.one():
            continue
        good = True
        for i in range(n):
            for j in range(i, n):
                prod = alg.mul_coords(basis[i], basis[j])
                lhs = _dot(S, combo, [emb(x) for x in prod])
                if lhs != S.mul(combo[i], combo[j]):
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(tuple(combo))
    return sorted(out, key=lambda row: tuple(S.element_key(x) for x in row))


def algebra_maps(src, dst, seed: int = 0):
    """All algebra homomorphisms src -> dst as column-convention matrices."""
    if src.base != dst.base:
        raise MixedBase("homomorphisms need a common base ring")
    R = src.base
    n_src, n_dst = src.dim, dst.dim
    try:
        minpoly, U = _monogenic_view(src)
    except NoPrimitiveElement:
        return _maps_by_enumeration(src, dst)
    roots = poly_roots_in_algebra(minpoly, dst, seed=seed)
    out = []
    for alpha in roots:
        powers = [dst.unit_row()]
        for _ in range(n_src - 1):
            powers.append(dst.mul_coords(powers[-1], alpha))
        # column j of F: image of src basis vector j = sum_i U[j][i] alpha^i
        cols = []
        for j in range(n_src):
            col = [R.zero()] * n_dst
            for i in range(n_src):
                c = U.entry(j, i)
                if R.is_zero(c):
                    continue
                for k in range(n_dst):
                    col[k] = R.add(col[k], R.mul(c, powers[i][k]))
            cols.append(col)
        F = Matrix(R, [[cols[j][k] for j in range(n_src)] for k in range(n_dst)])
        out.append(F)
    out.sort(key=lambda M: tuple(tuple(R.element_key(x) for x in row) for row in M.data))
    return out


def _maps_by_enumeration(src, dst):
    R = src.base
    card = R.cardinality()
    n_src, n_dst = src.dim, dst.dim
    if card is None or card ** (n_src * n_dst) > ENUMERATION_CAP:
        raise DimensionCapExceeded("map enumeration above cap")
    src_basis = algebra_basis(src)
    elements = list(itertools.product(list(R.elements()), repeat=n_dst))
    out = []
    for images in itertools.product(elements, repeat=n_src):
        # linear map determined by images of the src basis
        def apply(vec, images=images):
            acc = [R.zero()] * n_dst
            for c, img in zip(vec, images):
                if R.is_zero(c):
                    continue
                for k in range(n_dst):
                    acc[k] = R.add(acc[k], R.mul(c, img[k]))
            return tuple(acc)

        if apply(src.unit_row()) != tuple(dst.unit_row()):
            continue
        good = True
        for i in range(n_src):
            for j in range(i, n_src):
                lhs = apply(src.mul_coords(src_basis[i], src_basis[j]))
                rhs = dst.mul_coords(images[i], images[j])
                if lhs != rhs:
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(Matrix(R, [[images[j][k] for j in range(n_src)] for k in range(n_dst)]))
    out.sort(key=lambda M: tuple(tuple(R.element_key(x) for x in row) for row in M.data))
    return out


def is_algebra_hom(F: Matrix, src, dst) -> bool:
    """Check that the column-convention matrix F defines an algebra map src -> dst."""
    R = F.ring
    if tuple(F.matvec(src.unit_row())) != tuple(dst.unit_row()):
        return False
    basis = algebra_basis(src)
    cols = [F.matvec(e) for e in basis]
    for i in range(src.dim):
        for j in range(i, src.dim):
            lhs = F.matvec(src.mul_coords(basis[i], basis[j]))
            rhs = dst.mul_coords(cols[i], cols[j])
            if tuple(lhs) != tuple(rhs):
                return False
    return True
