"""Exact arithmetic for base rings and splitting fields.

Supported rings: the rationals, prime fields F_p, and explicit extensions
K[t]/(h) with h monic (towers allowed).  Elements are stored as plain
payloads -- Fraction for Q, int in [0, p) for F_p, and a tuple of base
payloads of fixed length for extensions -- so that the linear algebra on
top of this module stays cheap.  RingElement is a thin wrapper used at API
boundaries.

The module also houses elements of (1/n)Z/Z (FracCyclic), discrete logs in
a cyclic group of roots of unity, arbitrary-precision complex values backed
by mpmath (BigComplex), and the exact and numeric-assisted root finders.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd

import mpmath

from .errors import (
    CoefficientNotMapped,
    CompositeModulus,
    NoSuchRoot,
    NotInSubgroup,
    NotInvertible,
    PrecisionExhausted,
    ReducibleModulus,
    UnsupportedRing,
    ZeroDegreeModulus,
)

EXHAUSTIVE_ROOT_BOUND = 2 ** 16  # exhaustive search below, Cantor-Zassenhaus above
ENUMERATION_CAP = 2 ** 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any desk-scale input."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Descriptor of a supported base ring; also implements element arithmetic.

    kind is one of "Q", "Fp", "ext".  Arithmetic methods act on raw payloads.
    Instances are immutable and hashable; build them through rationals(),
    prime_field() and extension().
    """

    __slots__ = ("kind", "p", "base", "modulus", "_key", "_card")

    def __init__(self, kind, p=None, base=None, modulus=None):
        self.kind = kind
        self.p = p
        self.base = base
        self.modulus = modulus
        if kind == "Q":
            self._key = ("Q",)
            self._card = None
        elif kind == "Fp":
            self._key = ("Fp", p)
            self._card = p
        else:
            self._key = ("ext", base._key, modulus)
            self._card = None if base._card is None else base._card ** len(modulus)

    # -- identity ----------------------------------------------------------

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F{self.p}"
        return f"{self.base!r}[t]/(deg {len(self.modulus)})"

    # -- structure -----------------------------------------------------------

    def cardinality(self):
        return self._card

    def characteristic(self) -> int:
        r = self
        while r.kind == "ext":
            r = r.base
        return 0 if r.kind == "Q" else r.p

    def degree(self) -> int:
        return 1 if self.kind != "ext" else len(self.modulus)

    def is_field(self) -> bool:
        # extensions of Q are accepted as fields without verification;
        # finite extensions have verified irreducible moduli.
        return True

    # -- element payloads -----------------------------------------------------

    def zero(self):
        if self.kind == "Q":
            return Fraction(0)
        if self.kind == "Fp":
            return 0
        return (self.base.zero(),) * len(self.modulus)

    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        if self.kind == "Q":
            return Fraction(k)
        if self.kind == "Fp":
            return k % self.p
        d = len(self.modulus)
        return (self.base.from_int(k),) + (self.base.zero(),) * (d - 1)

    def embed(self, a):
        """Embed a base-ring payload into this extension."""
        if self.kind != "ext":
            raise UnsupportedRing("embed is only defined on extensions")
        return (a,) + (self.base.zero(),) * (len(self.modulus) - 1)

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def add(self, a, b):
        if self.kind == "Q":
            return a + b
        if self.kind == "Fp":
            return (a + b) % self.p
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self.kind == "Q":
            return a - b
        if self.kind == "Fp":
            return (a - b) % self.p
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self.kind == "Q":
            return -a
        if self.kind == "Fp":
            return (-a) % self.p
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        if self.kind == "Q":
            return a * b
        if self.kind == "Fp":
            return (a * b) % self.p
        prod = _pmul(self.base, list(a), list(b))
        return tuple(_pmod_monic(self.base, prod, self.modulus))

    def inv(self, a):
        if self.kind == "Q":
            if a == 0:
                raise NotInvertible("division by zero in Q")
            return 1 / a
        if self.kind == "Fp":
            if a % self.p == 0:
                raise NotInvertible("division by zero in F_p")
            return pow(a, self.p - 2, self.p)
        g, u = _pxgcd_mod(self.base, list(a), list(self.modulus))
        if len(g) != 1:
            raise NotInvertible("element is a zero divisor in the extension")
        c = self.base.inv(g[0])
        u = [self.base.mul(c, x) for x in u]
        u += [self.base.zero()] * (len(self.modulus) - len(u))
        return tuple(u)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def scalar_from(self, other: "Ring", a):
        """Map a payload of `other` into this ring (see coefficient_map)."""
        fn = coefficient_map(other, self)
        if fn is None:
            raise CoefficientNotMapped(f"no coefficient map {other!r} -> {self!r}")
        return fn(a)

    # -- enumeration and canonical order ---------------------------------------

    def elements(self):
        """All elements in canonical order (finite rings only)."""
        if self.kind == "Q":
            raise UnsupportedRing("cannot enumerate Q")
        if self.kind == "Fp":
            yield from range(self.p)
            return
        base_elems = list(self.base.elements())
        for combo in itertools.product(base_elems, repeat=len(self.modulus)):
            yield combo

    def element_key(self, a):
        if self.kind == "Q":
            return a
        if self.kind == "Fp":
            return a
        base = self.base
        return tuple(base.element_key(x) for x in a)

    # -- text form ----------------------------------------------------------------

    def to_str(self, a) -> str:
        if self.kind == "Q":
            return str(a)
        if self.kind == "Fp":
            return str(a)
        return "[" + ",".join(self.base.to_str(x) for x in a) + "]"

    def from_str(self, s: str):
        s = s.strip()
        if self.kind == "Q":
            return Fraction(s)
        if self.kind == "Fp":
            return int(s) % self.p
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"malformed extension element {s!r}")
        parts, depth, cur = [], 0, []
        for ch in s[1:-1]:
            if ch == "," and depth == 0:
                parts.append("".join(cur))
                cur = []
                continue
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            cur.append(ch)
        parts.append("".join(cur))
        if len(parts) != len(self.modulus):
            raise ValueError(f"expected {len(self.modulus)} coordinates in {s!r}")
        return tuple(self.base.from_str(part) for part in parts)


class RingElement:
    """An element of a Ring: parent descriptor plus exact payload."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def __repr__(self):
        return self.ring.to_str(self.payload)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring.key(), self.payload))

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise UnsupportedRing("elements of different rings")
            return other.payload
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError(f"cannot combine RingElement with {type(other).__name__}")

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.payload, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.payload, self._coerce(other)))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.payload, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RingElement(self.ring, self.ring.div(self.payload, self._coerce(other)))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.payload, e))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.payload)

    def is_one(self) -> bool:
        return self.payload == self.ring.one()


QQ = Ring("Q")


def rationals() -> Ring:
    return QQ


def prime_field(p: int) -> Ring:
    if not isinstance(p, int) or not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    return Ring("Fp", p=p)


def extension(base: Ring, modulus) -> Ring:
    """Build K[t]/(h); h given by its low coefficients c0..c_{d-1}, monic implied.

    Over a finite base the modulus is verified irreducible; over Q it is
    accepted as supplied.
    """
    coeffs = []
    for c in modulus:
        if isinstance(c, RingElement):
            if c.ring != base:
                raise UnsupportedRing("modulus coefficient from the wrong ring")
            coeffs.append(c.payload)
        elif isinstance(c, int):
            coeffs.append(base.from_int(c))
        else:
            coeffs.append(c)
    coeffs = tuple(coeffs)
    if len(coeffs) == 0:
        raise ZeroDegreeModulus("extension modulus must have degree >= 1")
    ring = Ring("ext", base=base, modulus=coeffs)
    if base.cardinality() is not None and len(coeffs) > 1:
        if not _is_irreducible(base, list(coeffs) + [base.one()]):
            raise ReducibleModulus("modulus is reducible over the finite base")
    return ring


def make_ring(spec) -> Ring:
    """Build a ring from a descriptor literal (parsed JSON-style object)."""
    if spec == "Q" or spec == {"kind": "Q"}:
        return QQ
    if not isinstance(spec, dict):
        raise UnsupportedRing(f"bad ring descriptor {spec!r}")
    kind = spec.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return prime_field(spec["p"])
    if kind == "ext":
        base = make_ring(spec["base"])
        coeffs = [base.from_str(str(c)) for c in spec["modulus"]]
        return extension(base, coeffs)
    raise UnsupportedRing(f"bad ring descriptor {spec!r}")


def ring_descriptor(ring: Ring):
    """Inverse of make_ring: a JSON-ready descriptor object."""
    if ring.kind == "Q":
        return {"kind": "Q"}
    if ring.kind == "Fp":
        return {"kind": "Fp", "p": ring.p}
    return {
        "kind": "ext",
        "base": ring_descriptor(ring.base),
        "modulus": [ring.base.to_str(c) for c in ring.modulus],
    }


def coefficient_map(src: Ring, dst: Ring):
    """Return a payload map src -> dst, or None if there is none.

    Supported: identity, inclusion of a base into its extensions (towers),
    and the partial reduction map Q -> (ring of characteristic p), which
    raises CoefficientNotMapped on denominators divisible by p.
    """
    if src == dst:
        return lambda a: a
    if dst.kind == "ext":
        inner = coefficient_map(src, dst.base)
        if inner is not None:
            return lambda a: dst.embed(inner(a))
        return None
    if src.kind == "Q" and dst.kind == "Fp":
        p = dst.p

        def reduce_q(a, p=p):
            if a.denominator % p == 0:
                raise CoefficientNotMapped(f"denominator of {a} vanishes mod {p}")
            return a.numerator * pow(a.denominator, p - 2, p) % p

        return reduce_q
    return None


# ---------------------------------------------------------------------------
# Polynomial arithmetic on raw coefficient lists (low degree first).
# ---------------------------------------------------------------------------

def _pnorm(ring, a):
    while a and ring.is_zero(a[-1]):
        a.pop()
    return a


def _padd(ring, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ring.zero()
        y = b[i] if i < len(b) else ring.zero()
        out.append(ring.add(x, y))
    return _pnorm(ring, out)


def _psub(ring, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ring.zero()
        y = b[i] if i < len(b) else ring.zero()
        out.append(ring.sub(x, y))
    return _pnorm(ring, out)


def _pmul(ring, a, b):
    if not a or not b:
        return []
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ring.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return _pnorm(ring, out)


def _pscale(ring, c, a):
    return _pnorm(ring, [ring.mul(c, x) for x in a])


def _pdivmod(ring, a, b):
    """Divide with remainder; the leading coefficient of b must be invertible."""
    a = list(a)
    if not b:
        raise NotInvertible("polynomial division by zero")
    inv_lead = ring.inv(b[-1])
    q = [ring.zero()] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = ring.mul(a[-1], inv_lead)
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = ring.sub(a[k + i], ring.mul(c, y))
        a = _pnorm(ring, a)
        if not a:
            break
    return _pnorm(ring, q), a


def _pmod_monic(ring, a, modulus):
    """Reduce a modulo the monic polynomial with low coefficients `modulus`."""
    d = len(modulus)
    a = list(a)
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if ring.is_zero(c):
            continue
        a[k] = ring.zero()
        for i in range(d):
            a[k - d + i] = ring.sub(a[k - d + i], ring.mul(c, modulus[i]))
    a = a[:d]
    a += [ring.zero()] * (d - len(a))
    return a


def _pgcd(ring, a, b):
    """Monic gcd over a field."""
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(ring, a, b)
        a, b = b, r
    if a:
        c = ring.inv(a[-1])
        a = [ring.mul(c, x) for x in a]
    return a


def _pxgcd_mod(ring, a, m):
    """Return (g, u) with g = gcd(a, m) monic-ish and u*a = g mod m."""
    r0, r1 = list(m), _pnorm(ring, list(a))
    s0, s1 = [], [ring.one()]
    while r1:
        q, r = _pdivmod(ring, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(ring, s0, _pmul(ring, q, s1))
    return r0, s0


def _ppow_mod(ring, a, e: int, modulus):
    """a^e modulo a monic polynomial (low-coefficient form, implied leading 1)."""
    result = [ring.one()]
    a = _pmod_monic(ring, list(a), modulus)
    a = _pnorm(ring, list(a))
    while e:
        if e & 1:
            result = _pmod_monic(ring, _pmul(ring, result, a), modulus)
            result = _pnorm(ring, result)
        a = _pmod_monic(ring, _pmul(ring, a, a), modulus)
        a = _pnorm(ring, a)
        e >>= 1
    out = list(result) + [ring.zero()] * (len(modulus) - len(result))
    return out[: len(modulus)]


def _peval(ring, coeffs, x):
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = ring.add(ring.mul(acc, x), c)
    return acc


def _is_irreducible(base: Ring, poly) -> bool:
    """Irreducibility of a monic poly over a finite field.

    Checks gcd(t^(q^i) - t, h) = 1 for i < deg h and = h at i = deg h.
    """
    q = base.cardinality()
    d = len(poly) - 1
    modulus = poly[:-1]
    x = [base.zero(), base.one()]
    for i in range(1, d + 1):
        power = _ppow_mod(base, x, q ** i, modulus)
        diff = _psub(base, _pnorm(base, power), x)
        g = _pgcd(base, list(poly), diff)
        if i < d:
            if len(g) != 1:
                return False
        else:
            if len(g) != d + 1:
                return False
    return True


def find_irreducible(base: Ring, degree: int) -> tuple:
    """Smallest (canonical order) monic irreducible of given degree over a finite field."""
    if base.cardinality() is None:
        raise UnsupportedRing("irreducible search needs a finite base")
    if degree < 1:
        raise ZeroDegreeModulus("degree must be at least 1")
    for combo in itertools.product(list(base.elements()), repeat=degree):
        poly = list(combo) + [base.one()]
        if degree == 1 or _is_irreducible(base, poly):
            return tuple(combo)
    raise NoSuchRoot("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------

def roots_in_ring(f, S: Ring, seed: int = 0):
    """All roots of the monic polynomial f (a MonicPoly) in the field S.

    The result is duplicate-free and sorted in the canonical element order.
    """
    emb = coefficient_map(f.base, S)
    if emb is None:
        raise UnsupportedRing(f"coefficients of f do not map into {S!r}")
    coeffs = [emb(c) for c in f.coeffs] + [S.one()]
    if S.kind == "Q":
        payloads = _roots_rational(coeffs)
    elif S.cardinality() is not None:
        payloads = _roots_finite(S, coeffs, seed)
    elif S.kind == "ext" and S.characteristic() == 0:
        payloads = _roots_qext(S, _rational_coeffs(f, S))
    else:
        raise UnsupportedRing(f"root finding not supported over {S!r}")
    payloads = sorted(set(payloads), key=S.element_key)
    return [RingElement(S, a) for a in payloads]


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _roots_rational(coeffs):
    """Rational roots of a polynomial with Fraction coefficients (monic lead)."""
    ring = QQ
    coeffs = [Fraction(c) for c in coeffs]
    roots = []
    # strip zero roots
    k = 0
    while k < len(coeffs) - 1 and coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
        coeffs = coeffs[k:]
    if len(coeffs) <= 1:
        return roots
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead, const = ints[-1], ints[0]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if _peval(ring, coeffs, cand) == 0:
                    roots.append(cand)
    return roots


def _roots_finite(S: Ring, coeffs, seed: int):
    card = S.cardinality()
    if card <= EXHAUSTIVE_ROOT_BOUND:
        return [a for a in S.elements() if S.is_zero(_peval(S, coeffs, a))]
    # linear part of f: gcd(f, x^|S| - x), then split into linear factors
    modulus = list(coeffs[:-1])  # f is monic
    x = [S.zero(), S.one()]
    power = _ppow_mod(S, x, card, modulus)
    diff = _psub(S, _pnorm(S, power), x)
    h = _pgcd(S, list(coeffs), diff)
    rng = random.Random(seed)
    return _split_linear(S, h, rng, card)


def _split_linear(S: Ring, h, rng, card):
    """Split a monic product of distinct linear factors into its roots."""
    deg = len(h) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [S.neg(h[0])]
    p = S.characteristic()
    while True:
        if p > 2:
            a = _random_element(S, rng)
            w = _ppow_mod(S, [a, S.one()], (card - 1) // 2, h[:-1])
            w = _pnorm(S, list(w))
            g = _pgcd(S, list(h), _psub(S, w, [S.one()]))
        else:
            # char 2: use the trace map of a random scalar multiple of x
            a = _random_element(S, rng)
            m = card.bit_length() - 1
            term = _pmod_monic(S, [S.zero(), a], h[:-1])
            acc = list(term)
            for _ in range(m - 1):
                term = _pmod_monic(S, _pmul(S, _pnorm(S, list(term)), _pnorm(S, list(term))), h[:-1])
                acc = [S.add(u, v) for u, v in zip(acc, term)]
            g = _pgcd(S, list(h), _pnorm(S, acc))
        if 0 < len(g) - 1 < deg:
            other, rem = _pdivmod(S, list(h), list(g))
            assert not rem
            return _split_linear(S, g, rng, card) + _split_linear(S, other, rng, card)


def _random_element(S: Ring, rng):
    if S.kind == "Fp":
        return rng.randrange(S.p)
    return tuple(_random_element(S.base, rng) for _ in range(len(S.modulus)))


def _rational_coeffs(f, S: Ring):
    """Coefficients of f as Fractions; the numeric route needs rational data."""
    if f.base.kind == "Q":
        return list(f.coeffs)
    if f.base == S:
        out = []
        for c in f.coeffs:
            if any(not S.base.is_zero(x) for x in c[1:]):
                raise UnsupportedRing("numeric-assisted roots need rational coefficients")
            inner = c[0]
            if isinstance(inner, Fraction):
                out.append(inner)
            else:
                raise UnsupportedRing("numeric-assisted roots need rational coefficients")
        return out
    raise UnsupportedRing("numeric-assisted roots need rational coefficients")


def _roots_qext(S: Ring, f_coeffs_q):
    """Roots in S = Q[t]/(h) of a monic f with rational coefficients.

    Complex embeddings pick out candidate assignments root-of-h -> root-of-f;
    each candidate is interpolated, rationally reconstructed and then verified
    exactly, so the result is always sound.  Completeness holds once the
    working precision exceeds the height of the true coordinates; two
    precision levels cover every desk-scale input.
    """
    if S.base.kind != "Q":
        raise UnsupportedRing("numeric-assisted roots need a Q-extension")
    fq = [Fraction(c) for c in f_coeffs_q] + [Fraction(1)]
    # squarefree part (over Q) keeps the assignment count small
    der = [Fraction(i) * fq[i] for i in range(1, len(fq))]
    g = _pgcd(QQ, list(fq), der)
    if len(g) > 1:
        fq, _ = _pdivmod(QQ, list(fq), g)
    h = [Fraction(c) for c in S.modulus] + [Fraction(1)]
    found = {}
    for prec in (256, 1024):
        try:
            found.update(_qext_candidates(S, fq, h, prec))
        except PrecisionExhausted:
            continue
    return list(found.values())


def _to_mpf(c: Fraction):
    return mpmath.mpf(c.numerator) / c.denominator


def _qext_candidates(S: Ring, fq, h, prec):
    m = len(h) - 1
    with mpmath.workprec(prec):
        hroots = _sorted_complex(mpmath.polyroots([_to_mpf(c) for c in reversed(h)],
                                                  maxsteps=200, extraprec=prec))
        froots = _sorted_complex(mpmath.polyroots([_to_mpf(c) for c in reversed(fq)],
                                                  maxsteps=200, extraprec=prec))
        if len(set(map(_root_key, hroots))) != m:
            raise PrecisionExhausted("modulus roots not separated")
        vand = mpmath.matrix([[hroots[i] ** j for j in range(m)] for i in range(m)])
        vinv = vand ** -1
        bound = 1 << max(16, prec // 4)
        out = {}
        for assign in itertools.product(range(len(froots)), repeat=m):
            values = mpmath.matrix([froots[k] for k in assign])
            coeffs = vinv * values
            cand = []
            ok = True
            for i in range(m):
                z = coeffs[i]
                if abs(mpmath.im(z)) > mpmath.mpf(2) ** (-prec // 3):
                    ok = False
                    break
                fr = _mpf_to_fraction(mpmath.re(z)).limit_denominator(bound)
                if abs(mpmath.re(z) - mpmath.mpf(fr.numerator) / fr.denominator) > mpmath.mpf(2) ** (-prec // 3):
                    ok = False
                    break
                cand.append(fr)
            if not ok:
                continue
            payload = tuple(cand)
            if payload in out:
                continue
            if S.is_zero(_peval(S, [S.embed(c) for c in fq[:-1]] + [S.one()], payload)):
                out[payload] = payload
    return out


def _root_key(z):
    return (mpmath.nstr(mpmath.re(z), 12), mpmath.nstr(mpmath.im(z), 12))


def _sorted_complex(roots):
    return sorted(roots, key=lambda z: (mpmath.re(z), mpmath.im(z)))


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    val = Fraction(man)
    val = val * Fraction(2) ** exp
    return -val if sign else val


# ---------------------------------------------------------------------------
# Roots of unity and discrete logarithms
# ---------------------------------------------------------------------------

def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def element_order(elem: RingElement, bound: int) -> int:
    """Multiplicative order, provided it divides some k <= bound."""
    ring = elem.ring
    acc = elem.payload
    for k in range(1, bound + 1):
        if acc == ring.one():
            return k
        acc = ring.mul(acc, elem.payload)
    raise NotInSubgroup(f"order exceeds {bound}")


def root_of_unity(S: Ring, n: int) -> RingElement:
    """Deterministic element of exact multiplicative order n in a finite field."""
    card = S.cardinality()
    if card is None:
        raise UnsupportedRing("root_of_unity needs a finite field")
    if n < 1 or (card - 1) % n != 0:
        raise NoSuchRoot(f"no root of unity of order {n} in a field of size {card}")
    if n == 1:
        return RingElement(S, S.one())
    cof = (card - 1) // n
    primes = _prime_factors(n)
    for g in S.elements():
        if S.is_zero(g):
            continue
        h = S.pow(g, cof)
        if h == S.one():
            continue
        if all(S.pow(h, n // q) != S.one() for q in primes):
            return RingElement(S, h)
    raise NoSuchRoot("exhausted the field without finding a generator")  # pragma: no cover


def dlog_mu(zeta: RingElement, beta: RingElement, n: int) -> "FracCyclic":
    """k/n in (1/n)Z/Z with beta = zeta^k, found by listing powers of zeta."""
    if zeta.ring != beta.ring:
        raise NotInSubgroup("zeta and beta live in different rings")
    ring = zeta.ring
    acc = ring.one()
    for k in range(n):
        if acc == beta.payload:
            return FracCyclic(k, n)
        acc = ring.mul(acc, zeta.payload)
    raise NotInSubgroup("beta is not a power of zeta")


class FracCyclic:
    """An element of (1/n)Z/Z, stored as a reduced fraction num/den in [0,1)."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        if den <= 0:
            raise ValueError("denominator must be positive")
        num %= den
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g

    @classmethod
    def from_fraction(cls, f: Fraction) -> "FracCyclic":
        return cls(f.numerator % f.denominator, f.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other):
        return FracCyclic.from_fraction(self.as_fraction() + other.as_fraction())

    def __neg__(self):
        return FracCyclic(-self.num, self.den) if self.num else FracCyclic(0, 1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k: int) -> "FracCyclic":
        return FracCyclic(self.num * k, self.den)

    def is_zero(self) -> bool:
        return self.num == 0

    def __eq__(self, other):
        return isinstance(other, FracCyclic) and (self.num, self.den) == (other.num, other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"{self.num}/{self.den}"

    def sort_key(self):
        return self.as_fraction()


# ---------------------------------------------------------------------------
# Arbitrary-precision complex values and certified polynomial roots
# ---------------------------------------------------------------------------

class BigComplex:
    """Arbitrary-precision complex number with an explicit precision tag.

    Operations run at the minimum precision of their operands, which is
    recorded on the result.
    """

    __slots__ = ("re", "im", "precision_bits")

    def __init__(self, re, im, precision_bits: int):
        if precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        with mpmath.workprec(precision_bits):
            self.re = +mpmath.mpf(re)
            self.im = +mpmath.mpf(im)
        self.precision_bits = precision_bits

    @classmethod
    def from_mpc(cls, z, precision_bits: int) -> "BigComplex":
        return cls(mpmath.re(z), mpmath.im(z), precision_bits)

    @classmethod
    def from_fraction(cls, f: Fraction, precision_bits: int) -> "BigComplex":
        with mpmath.workprec(precision_bits):
            return cls(mpmath.mpf(f.numerator) / f.denominator, 0, precision_bits)

    def mpc(self):
        return mpmath.mpc(self.re, self.im)

    def _binary(self, other, op):
        prec = min(self.precision_bits, other.precision_bits)
        with mpmath.workprec(prec):
            z = op(self.mpc(), other.mpc())
        return BigComplex.from_mpc(z, prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def abs(self):
        with mpmath.workprec(self.precision_bits):
            return abs(self.mpc())

    def __repr__(self):
        return f"BigComplex({mpmath.nstr(self.re, 10)}, {mpmath.nstr(self.im, 10)}, {self.precision_bits})"


def complex_roots(coeffs, precision_bits: int):
    """Certified complex roots of a squarefree monic rational polynomial.

    Initial approximations come from simultaneous iteration; each root is
    then Newton-refined at working precision and checked against the
    residual bound |f(z)| < 2^(-precision/2).  Raises PrecisionExhausted
    when the residual check fails.
    """
    coeffs = [Fraction(c) for c in coeffs]
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    with mpmath.workprec(precision_bits + 32):
        poly = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(coeffs)]
        try:
            roots = mpmath.polyroots(poly, maxsteps=300, extraprec=precision_bits)
        except mpmath.libmp.NoConvergence as exc:
            raise PrecisionExhausted("root iteration did not converge") from exc
        der = [c * (deg - i) for i, c in enumerate(poly[:-1])]
        refined = []
        for z in roots:
            z = mpmath.mpc(z)
            for _ in range(8):
                fz = mpmath.polyval(poly, z)
                dz = mpmath.polyval(der, z)
                if dz == 0:
                    break
                z = z - fz / dz
            if abs(mpmath.polyval(poly, z)) >= mpmath.mpf(2) ** (-(precision_bits // 2)):
                raise PrecisionExhausted("residual check failed")
            refined.append(z)
        refined = _sorted_complex(refined)
    return [BigComplex.from_mpc(z, precision_bits) for z in refined]


class FieldAutomorphism:
    """An automorphism of a ring, as a payload map with a printable name."""

    __slots__ = ("ring", "fn", "name")

    def __init__(self, ring: Ring, fn, name: str):
        self.ring = ring
        self.fn = fn
        self.name = name

    def apply(self, payload):
        return self.fn(payload)

    def __repr__(self):
        return f"FieldAutomorphism({self.name})"


def identity_automorphism(ring: Ring) -> FieldAutomorphism:
    return FieldAutomorphism(ring, lambda a: a, "id")


def frobenius_automorphism(L: Ring, power: int = 1) -> FieldAutomorphism:
    """x -> x^(p^power) on a finite field L of characteristic p."""
    p = L.characteristic()
    if p == 0 or L.cardinality() is None:
        raise UnsupportedRing("Frobenius needs a finite field")
    e = p ** power
    return FieldAutomorphism(L, lambda a: L.pow(a, e), f"x^[{p}^{power}]")
