"""Dual pairs of algebras and their categorical operations.

A DualPair holds two finite free algebras A, B over a common base ring and
the matrix of a perfect pairing Phi (rows indexed by the basis of A, columns
by the basis of B).  Morphisms are pairs of algebra maps (f: A' -> A,
g: B -> B') adjoint under the pairings; both are stored as column-convention
matrices.

The comultiplications induced on A and B are recovered from the pairing
alone, which is the main reason this presentation is convenient: no
comultiplication data is ever stored in a pair file.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AdjointNotAlgebraMap,
    AxiomsFailed,
    InvalidHopf,
    MixedBase,
    NotAField,
    NotAlgebraMap,
    NotInvertible,
    OrderSearchExceeded,
)
from . import linalg
from .linalg import (
    Matrix,
    MonicPoly,
    SCAlgebra,
    algebra_basis,
    algebra_maps,
    ideal_quotient,
    inverse_transpose,
    invert,
    is_algebra_hom,
    kron,
    nullspace,
    orthogonal_complement,
    subalgebra_on_rows,
    tensor_mul,
    tensor_sc,
)
from .rings import Ring, coefficient_map

UNCHECKED = "unchecked"
AXIOMS_VERIFIED = "axioms"
NUMERICALLY_VERIFIED = "numeric"


class DualPair:
    """Two finite free algebras plus the matrix of a perfect pairing."""

    __slots__ = ("base", "A", "B", "phi", "_cache")

    def __init__(self, A, B, phi: Matrix):
        if A.base != B.base or phi.ring != A.base:
            raise MixedBase("algebras and pairing must share one base ring")
        if A.dim != B.dim:
            raise ValueError("dual pairs need algebras of equal rank")
        if phi.rows != A.dim or phi.cols != B.dim:
            raise ValueError("pairing matrix has the wrong shape")
        if A.dim < 1:
            raise ValueError("dual pairs need rank at least 1")
        self.base = A.base
        self.A = A
        self.B = B
        self.phi = phi
        self._cache = {"validated": UNCHECKED}

    @property
    def n(self) -> int:
        return self.A.dim

    @property
    def validated(self) -> str:
        return self._cache["validated"]

    def __eq__(self, other):
        return (
            isinstance(other, DualPair)
            and self.A == other.A
            and self.B == other.B
            and self.phi == other.phi
        )

    def __hash__(self):
        return hash((self.A, self.B, self.phi))

    def __repr__(self):
        return f"DualPair(n={self.n} over {self.base!r}, validated={self.validated})"

    def algebra(self, side: str):
        if side == "A":
            return self.A
        if side == "B":
            return self.B
        raise ValueError("side must be 'A' or 'B'")

    def phi_in(self, S: Ring) -> Matrix:
        key = ("phi", S.key())
        if key not in self._cache:
            emb = coefficient_map(self.base, S)
            self._cache[key] = self.phi.map_entries(emb, S)
        return self._cache[key]

    def theta_in(self, S: Ring) -> Matrix:
        key = ("theta", S.key())
        if key not in self._cache:
            emb = coefficient_map(self.base, S)
            self._cache[key] = theta_of(self).map_entries(emb, S)
        return self._cache[key]


def theta_of(P: DualPair) -> Matrix:
    """Matrix of theta, the element of A (x) B inducing the identity: Phi^-t."""
    if "theta" not in P._cache:
        P._cache["theta"] = inverse_transpose(P.phi)
    return P._cache["theta"]


def counit(P: DualPair, side: str = "A"):
    """epsilon_1 = Phi(. , 1_B) on the A side, epsilon_2 = Phi(1_A, .) on B."""
    if side == "A":
        return P.phi.matvec(P.B.unit_row())
    return tuple(P.phi.transpose().matvec(P.A.unit_row()))


def comultiplication(P: DualPair, side: str = "A") -> Matrix:
    """Matrix (n^2 rows, n columns) of the comultiplication induced by Phi.

    Column i holds the coordinates of mu(e_i) in the (j,k)-lexicographic
    basis of the tensor square.  Obtained by pairing against all products
    b_l b_m and inverting the square pairing, which needs no linear solve:
    mu_1 = (Theta (x) Theta) C^t with C[i,(l,m)] = Phi(a_i, b_l b_m).
    """
    key = ("mu", side)
    if key in P._cache:
        return P._cache[key]
    R, n = P.base, P.n
    theta = theta_of(P)
    if side == "A":
        first, second = P.A, P.B
        pair_fn = lambda i, prod: linalg._dot(R, P.phi.row(i), prod)
        K = kron(theta, theta)
    else:
        first, second = P.B, P.A
        phit = P.phi.transpose()
        pair_fn = lambda i, prod: linalg._dot(R, phit.row(i), prod)
        K = kron(theta.transpose(), theta.transpose())
    basis = algebra_basis(second)
    prods = {}
    for l in range(n):
        for m in range(l, n):
            prods[(l, m)] = second.mul_coords(basis[l], basis[m])
    cols = []
    for i in range(n):
        c = []
        for l in range(n):
            for m in range(n):
                prod = prods[(l, m)] if l <= m else prods[(m, l)]
                c.append(pair_fn(i, prod))
        cols.append(K.matvec(c))
    mu = Matrix(R, [[cols[i][r] for i in range(n)] for r in range(n * n)])
    P._cache[key] = mu
    return mu


@dataclass
class AxiomReport:
    """Outcome of verify_axioms: ok flag plus failure witnesses."""

    ok: bool
    failures: list = field(default_factory=list)


def verify_axioms(P: DualPair) -> AxiomReport:
    """Check the dual-pair axioms by verifying that the induced counits and
    comultiplications are algebra homomorphisms, plus theta^n = 1.

    Failures are reported with witnesses, never raised.
    """
    R, n = P.base, P.n
    failures = []
    try:
        theta = theta_of(P)
    except NotInvertible:
        return AxiomReport(False, ["pairing matrix is not invertible"])
    unit_a, unit_b = P.A.unit_row(), P.B.unit_row()
    # (1) Phi(1,1) = 1
    val = linalg._dot(R, P.phi.matvec(unit_b), unit_a)
    if val != R.one():
        failures.append(f"Phi(1,1) = {R.to_str(val)} != 1")
    eps1 = counit(P, "A")
    eps2 = counit(P, "B")
    basis_a, basis_b = algebra_basis(P.A), algebra_basis(P.B)
    # (2)/(3): counits multiplicative on basis pairs
    for side, eps, alg, basis in (("A", eps1, P.A, basis_a), ("B", eps2, P.B, basis_b)):
        for i in range(n):
            for j in range(i, n):
                prod = alg.mul_coords(basis[i], basis[j])
                lhs = linalg._dot(R, eps, prod)
                rhs = R.mul(eps[i], eps[j])
                if lhs != rhs:
                    failures.append(f"counit on side {side} not multiplicative at ({i},{j})")
    # (4): comultiplications unit-preserving and multiplicative
    for side, alg in (("A", P.A), ("B", P.B)):
        mu = comultiplication(P, side)
        unit = alg.unit_row()
        unit_tensor = [R.zero()] * (n * n)
        for i in range(n):
            for j in range(n):
                unit_tensor[i * n + j] = R.mul(unit[i], unit[j])
        if tuple(mu.matvec(unit)) != tuple(unit_tensor):
            failures.append(f"comultiplication on side {side} does not preserve the unit")
        basis = algebra_basis(alg)
        mu_cols = [mu.matvec(e) for e in basis]
        for i in range(n):
            for j in range(i, n):
                prod = alg.mul_coords(basis[i], basis[j])
                lhs = mu.matvec(prod)
                rhs = tensor_mul(alg, alg, mu_cols[i], mu_cols[j])
                if tuple(lhs) != tuple(rhs):
                    failures.append(
                        f"comultiplication on side {side} not multiplicative at ({i},{j})"
                    )
    # Deligne: theta is an n-th root of unity in A (x) B
    theta_flat = [theta.entry(i, j) for i in range(n) for j in range(n)]
    acc = tuple(theta_flat)
    power = _tensor_power(P, acc, n)
    unit_ab = [R.zero()] * (n * n)
    for i in range(n):
        for j in range(n):
            unit_ab[i * n + j] = R.mul(P.A.unit_row()[i], P.B.unit_row()[j])
    if tuple(power) != tuple(unit_ab):
        failures.append(f"theta^{n} != 1 in the tensor product")
    ok = not failures
    if ok:
        P._cache["validated"] = AXIOMS_VERIFIED
    return AxiomReport(ok, failures)


def _tensor_power(P: DualPair, flat, e: int):
    """flat^e in A (x) B by square and multiply."""
    R, n = P.base, P.n
    unit_ab = [R.zero()] * (n * n)
    for i in range(n):
        for j in range(n):
            unit_ab[i * n + j] = R.mul(P.A.unit_row()[i], P.B.unit_row()[j])
    result = tuple(unit_ab)
    base = tuple(flat)
    while e:
        if e & 1:
            result = tensor_mul(P.A, P.B, result, base)
        base = tensor_mul(P.A, P.B, base, base)
        e >>= 1
    return result


def base_change(P: DualPair, S: Ring) -> DualPair:
    """The same pair with coefficients mapped into S."""
    emb = coefficient_map(P.base, S)
    if emb is None:
        raise MixedBase(f"no coefficient map from {P.base!r} into {S!r}")
    return DualPair(_map_algebra(P.A, S, emb), _map_algebra(P.B, S, emb),
                    P.phi.map_entries(emb, S))


def _map_algebra(alg, S: Ring, emb):
    if alg.kind == "monogenic":
        return MonicPoly(S, [emb(c) for c in alg.coeffs])
    sc = [[[emb(c) for c in row] for row in plane] for plane in alg.sc]
    unit = [emb(c) for c in alg.unit]
    return SCAlgebra(S, sc, unit, check=False)


def dual(P: DualPair) -> DualPair:
    """The Cartier dual (B, A, Phi^t)."""
    Q = DualPair(P.B, P.A, P.phi.transpose())
    Q._cache["validated"] = P.validated
    return Q


# ---------------------------------------------------------------------------
# Hopf round trips
# ---------------------------------------------------------------------------

@dataclass
class HopfData:
    """Algebra plus comultiplication matrix (n^2 x n) and counit row."""

    algebra: object
    comult: Matrix
    counit: tuple

    def validate(self):
        alg = self.algebra
        R, n = alg.base, alg.dim
        if self.comult.rows != n * n or self.comult.cols != n:
            raise InvalidHopf("comultiplication matrix has the wrong shape")
        basis = algebra_basis(alg)
        cols = [self.comult.matvec(e) for e in basis]
        unit = alg.unit_row()
        unit_tensor = [R.zero()] * (n * n)
        for i in range(n):
            for j in range(n):
                unit_tensor[i * n + j] = R.mul(unit[i], unit[j])
        if tuple(self.comult.matvec(unit)) != tuple(unit_tensor):
            raise InvalidHopf("comultiplication does not preserve the unit")
        if linalg._dot(R, self.counit, unit) != R.one():
            raise InvalidHopf("counit does not preserve the unit")
        for i in range(n):
            for j in range(i, n):
                prod = alg.mul_coords(basis[i], basis[j])
                if tuple(self.comult.matvec(prod)) != tuple(
                    tensor_mul(alg, alg, cols[i], cols[j])
                ):
                    raise InvalidHopf("comultiplication is not multiplicative")
                if linalg._dot(R, self.counit, prod) != R.mul(self.counit[i], self.counit[j]):
                    raise InvalidHopf("counit is not multiplicative")
        # cocommutativity: mu[(i,j), k] symmetric in (i,j)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.comult.entry(i * n + j, k) != self.comult.entry(j * n + i, k):
                        raise InvalidHopf("comultiplication is not cocommutative")
        # coassociativity: (mu (x) id) mu = (id (x) mu) mu on basis vectors
        for k in range(n):
            col = cols[k]
            left = [R.zero()] * (n ** 3)
            right = [R.zero()] * (n ** 3)
            for i in range(n):
                for j in range(n):
                    c = col[i * n + j]
                    if R.is_zero(c):
                        continue
                    for u in range(n):
                        for v in range(n):
                            left[u * n * n + v * n + j] = R.add(
                                left[u * n * n + v * n + j], R.mul(c, cols[i][u * n + v])
                            )
                            right[i * n * n + u * n + v] = R.add(
                                right[i * n * n + u * n + v], R.mul(c, cols[j][u * n + v])
                            )
            if left != right:
                raise InvalidHopf("comultiplication is not coassociative")
        # counit axiom: (eps (x) id) mu = id
        for k in range(n):
            contracted = [R.zero()] * n
            for i in range(n):
                for j in range(n):
                    contracted[j] = R.add(contracted[j], R.mul(self.counit[i], cols[k][i * n + j]))
            expected = [R.one() if t == k else R.zero() for t in range(n)]
            if contracted != expected:
                raise InvalidHopf("counit axiom fails")


def hopf_export(P: DualPair) -> HopfData:
    """The Hopf algebra (A, m, e, mu_1, eps_1) presented by this pair."""
    if P.validated == UNCHECKED:
        report = verify_axioms(P)
        if not report.ok:
            raise AxiomsFailed("; ".join(report.failures))
    data = HopfData(P.A, comultiplication(P, "A"), tuple(counit(P, "A")))
    data.validate()
    return data


def pair_from_hopf(H: HopfData) -> DualPair:
    """The dual pair (A, A^dual, canonical pairing) of a Hopf algebra.

    The multiplication on the dual basis is read off from the
    comultiplication matrix, and the pairing matrix is the identity.
    """
    H.validate()
    alg = H.algebra
    R, n = alg.base, alg.dim
    sc_b = [[[H.comult.entry(i * n + j, k) for k in range(n)] for j in range(n)] for i in range(n)]
    # re-index: b_i b_j = sum_k mu[(i,j),k] b_k
    sc = [[[sc_b[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]
    B = SCAlgebra(R, sc, H.counit, check=True)
    return DualPair(alg, B, Matrix.identity(R, n))


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

class Morphism:
    """A morphism of dual pairs: (f: A' -> A, g: B -> B') with adjointness.

    F and G are column-convention matrices for f and g; source = (A,B,Phi),
    target = (A',B',Phi').
    """

    __slots__ = ("source", "target", "F", "G")

    def __init__(self, source: DualPair, target: DualPair, F: Matrix, G: Matrix,
                 check: bool = True):
        self.source = source
        self.target = target
        self.F = F
        self.G = G
        if check:
            self.validate()

    def validate(self):
        src, tgt = self.source, self.target
        if not is_algebra_hom(self.F, tgt.A, src.A):
            raise NotAlgebraMap("F is not an algebra homomorphism A' -> A")
        if not is_algebra_hom(self.G, src.B, tgt.B):
            raise NotAlgebraMap("G is not an algebra homomorphism B -> B'")
        if self.F.transpose() * src.phi != tgt.phi * self.G:
            raise AdjointNotAlgebraMap("adjointness F^t Phi = Phi' G fails")

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.F == other.F
            and self.G == other.G
        )

    def __hash__(self):
        return hash((self.F, self.G))

    def __repr__(self):
        return f"Morphism({self.source.n} -> {self.target.n}, F={self.F.to_lists()})"

    def is_isomorphism(self) -> bool:
        return self.F.is_invertible() and self.G.is_invertible()


def zero_morphism(P: DualPair, Pp: DualPair) -> Morphism:
    """f0 = unit_A . counit', with g0 its adjoint."""
    R = P.base
    if R != Pp.base:
        raise MixedBase("zero morphism needs a common base")
    eps_p = counit(Pp, "A")
    unit_a = P.A.unit_row()
    F = Matrix(R, [[R.mul(unit_a[i], eps_p[j]) for j in range(Pp.n)] for i in range(P.n)])
    G = _adjoint(P, Pp, F)
    return Morphism(P, Pp, F, G, check=True)


def identity_morphism(P: DualPair) -> Morphism:
    I = Matrix.identity(P.base, P.n)
    return Morphism(P, P, I, I, check=False)


def _adjoint(P: DualPair, Pp: DualPair, F: Matrix) -> Matrix:
    """G with F^t Phi = Phi' G."""
    return invert(Pp.phi) * F.transpose() * P.phi


def hom_set(P: DualPair, Pp: DualPair, seed: int = 0):
    """All morphisms P -> P' in the category of dual pairs.

    Algebra maps A' -> A are enumerated through roots of the presenting
    polynomial; each one is kept iff its pairing adjoint is an algebra map.
    """
    if P.base != Pp.base:
        raise MixedBase("hom sets need a common base")
    out = []
    for F in algebra_maps(Pp.A, P.A, seed=seed):
        G = _adjoint(P, Pp, F)
        if is_algebra_hom(G, P.B, Pp.B):
            out.append(Morphism(P, Pp, F, G, check=False))
    return out


def add_morphisms(m1: Morphism, m2: Morphism) -> Morphism:
    """The sum of two morphisms: f-parts added as A-valued points of the target."""
    if m1.source != m2.source or m1.target != m2.target:
        raise MixedBase("morphism sum needs equal sources and targets")
    P, Pp = m1.source, m1.target
    A = P.A
    R = P.base
    # view f as a row of A-elements: entry j = f(a'_j); convert through Phi'
    theta_p = theta_of(Pp)
    phi_p = Pp.phi
    rows1 = [m1.F.column(j) for j in range(Pp.n)]  # A-coordinates of f(a'_j)
    rows2 = [m2.F.column(j) for j in range(Pp.n)]

    def hat(rows):
        # theta'^t acts on the column of A-valued entries: hat_l = sum_j inv(phi')[l][j] rows[j]
        inv_phi = invert(phi_p)
        out = []
        for l in range(Pp.n):
            acc = [R.zero()] * A.dim
            for j in range(Pp.n):
                c = inv_phi.entry(l, j)
                if R.is_zero(c):
                    continue
                for k in range(A.dim):
                    acc[k] = R.add(acc[k], R.mul(c, rows[j][k]))
            out.append(tuple(acc))
        return out

    hat1, hat2 = hat(rows1), hat(rows2)
    # multiply in B' (x) A using the structure constants of B'
    Bp = Pp.B
    prod = [tuple([R.zero()] * A.dim) for _ in range(Pp.n)]
    table = Bp.to_sc()
    for i in range(Pp.n):
        for j in range(Pp.n):
            coeff_vec = table.sc[i][j]
            term = A.mul_coords(hat1[i], hat2[j])
            for k in range(Pp.n):
                c = coeff_vec[k]
                if R.is_zero(c):
                    continue
                prod[k] = tuple(R.add(x, R.mul(c, t)) for x, t in zip(prod[k], term))
    # convert back: f''(a'_j) = sum_l phi'[j][l]... rows_out[j] = sum_l phi'[l][j]? use phi' on the left
    rows_out = []
    for j in range(Pp.n):
        acc = [R.zero()] * A.dim
        for l in range(Pp.n):
            c = phi_p.entry(j, l)
            if R.is_zero(c):
                continue
            for k in range(A.dim):
                acc[k] = R.add(acc[k], R.mul(c, prod[l][k]))
        rows_out.append(acc)
    F = Matrix(R, [[rows_out[j][k] for j in range(Pp.n)] for k in range(A.dim)])
    G = _adjoint(P, Pp, F)
    if not is_algebra_hom(F, Pp.A, P.A) or not is_algebra_hom(G, P.B, Pp.B):
        raise AdjointNotAlgebraMap("morphism sum left the category; invalid inputs")
    return Morphism(P, Pp, F, G, check=False)


def compose(m2: Morphism, m1: Morphism) -> Morphism:
    """m2 after m1 (m1: P -> P', m2: P' -> P'')."""
    if m1.target != m2.source:
        raise MixedBase("composition needs matching middle pair")
    return Morphism(m1.source, m2.target, m1.F * m2.F, m2.G * m1.G, check=False)


# ---------------------------------------------------------------------------
# Direct sums, kernels, cokernels
# ---------------------------------------------------------------------------

@dataclass
class DirectSum:
    pair: DualPair
    inj1: Morphism
    inj2: Morphism
    proj1: Morphism
    proj2: Morphism


def direct_sum(P: DualPair, Pp: DualPair) -> DirectSum:
    """Biproduct: tensor algebras on both sides, Kronecker pairing."""
    if P.base != Pp.base:
        raise MixedBase("direct sum needs a common base")
    R = P.base
    A2 = tensor_sc(P.A, Pp.A)
    B2 = tensor_sc(P.B, Pp.B)
    phi2 = kron(P.phi, Pp.phi)
    S = DualPair(A2, B2, phi2)
    n, m = P.n, Pp.n
    eps_p = counit(Pp, "A")
    eps = counit(P, "A")
    eps2_p = counit(Pp, "B")
    eps2 = counit(P, "B")
    unit_a, unit_ap = P.A.unit_row(), Pp.A.unit_row()
    unit_b, unit_bp = P.B.unit_row(), Pp.B.unit_row()
    # inj1: P -> S given by f(a (x) a') = a eps'(a'), g(b) = b (x) 1
    F_data = [[R.zero()] * (n * m) for _ in range(n)]
    for i in range(n):
        for j in range(m):
            F_data[i][i * m + j] = eps_p[j]
    G_data = [[R.zero()] * n for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            G_data[i * m + j][i] = unit_bp[j]
    inj1 = Morphism(P, S, Matrix(R, F_data), Matrix(R, G_data), check=True)
    F_data = [[R.zero()] * (n * m) for _ in range(m)]
    for i in range(n):
        for j in range(m):
            F_data[j][i * m + j] = eps[i]
    G_data = [[R.zero()] * m for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            G_data[i * m + j][j] = unit_b[i]
    inj2 = Morphism(Pp, S, Matrix(R, F_data), Matrix(R, G_data), check=True)
    # proj1: S -> P given by f(a) = a (x) 1, g(b (x) b') = b eps2'(b')
    F_data = [[R.zero()] * n for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            F_data[i * m + j][i] = unit_ap[j]
    G_data = [[R.zero()] * (n * m) for _ in range(n)]
    for i in range(n):
        for j in range(m):
            G_data[i][i * m + j] = eps2_p[j]
    proj1 = Morphism(S, P, Matrix(R, F_data), Matrix(R, G_data), check=True)
    F_data = [[R.zero()] * m for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            F_data[i * m + j][j] = unit_a[i]
    G_data = [[R.zero()] * (n * m) for _ in range(m)]
    for i in range(n):
        for j in range(m):
            G_data[j][i * m + j] = eps2[i]
    proj2 = Morphism(S, Pp, Matrix(R, F_data), Matrix(R, G_data), check=True)
    return DirectSum(S, inj1, inj2, proj1, proj2)


def kernel(m: Morphism):
    """Kernel of a morphism over a field base: (pair, inclusion morphism).

    The A side is the coequalizer of f and f0 (an ideal quotient); the B side
    is the orthogonal complement of its kernel, a subalgebra of B.
    """
    P, Pp = m.source, m.target
    R = P.base
    if not R.is_field() or R.kind == "ext" and False:
        raise NotAField("kernels need a field base")
    zero = zero_morphism(P, Pp)
    gens = []
    for j in range(Pp.n):
        diff = tuple(R.sub(m.F.entry(k, j), zero.F.entry(k, j)) for k in range(P.n))
        gens.append(diff)
    quot = ideal_quotient(P.A, gens)
    A2 = quot.algebra
    ker_rows = quot.ideal_basis.data if quot.ideal_basis.rows else []
    W = Matrix(R, ker_rows) if ker_rows else Matrix.zeros(R, 0, P.n)
    B2_basis = orthogonal_complement(P.phi, W) if ker_rows else Matrix.identity(R, P.n)
    B2 = subalgebra_on_rows(P.B, list(B2_basis.data))
    # induced pairing: phi2[i][j] = Phi(lift(a2_i), b2_j)
    lift_rows = quot.lift.data if quot.lift.rows else []
    phi2 = Matrix(R, [
        [linalg._dot(R, P.phi.matvec(brow), arow) for brow in B2_basis.data]
        for arow in lift_rows
    ]) if lift_rows else Matrix(R, [])
    if A2.dim == 0:
        raise NotInvertible("kernel pair would have rank 0")  # cannot happen: unit survives
    K = DualPair(A2, B2, phi2)
    # inclusion morphism K -> P: f = projection A -> A2, g = inclusion B2 -> B
    F = quot.projection
    G = B2_basis.transpose()
    incl = Morphism(K, P, F, G, check=True)
    return K, incl


def cokernel(m: Morphism):
    """Cokernel via duality: dualize, take the kernel, dualize back."""
    P, Pp = m.source, m.target
    m_dual = Morphism(dual(Pp), dual(P), m.G, m.F, check=False)
    Kd, incl_d = kernel(m_dual)
    C = dual(Kd)
    proj = Morphism(Pp, C, incl_d.G, incl_d.F, check=True)
    return C, proj
