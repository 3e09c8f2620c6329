"""Exception hierarchy shared by all modules.

Every failure mode that callers are expected to handle has its own class;
they all derive from DualPairError so the CLI can map any of them to a
diagnostic exit.
"""


class DualPairError(Exception):
    """Base class for all errors raised by this package."""


# --- rings ---------------------------------------------------------------

class CompositeModulus(DualPairError):
    """The claimed prime p is composite."""


class ReducibleModulus(DualPairError):
    """An extension modulus over a finite field is reducible."""


class ZeroDegreeModulus(DualPairError):
    """An extension modulus must have degree at least 1."""


class UnsupportedRing(DualPairError):
    """The requested operation is not available over this ring."""


class NoSuchRoot(DualPairError):
    """No root of unity of the requested order exists."""


class NotInSubgroup(DualPairError):
    """An element does not lie in the cyclic group generated by zeta."""


class NotInvertible(DualPairError):
    """A matrix or ring element has no inverse."""


class CoefficientNotMapped(DualPairError):
    """A coefficient cannot be mapped into the target ring."""


class PrecisionExhausted(DualPairError):
    """A numeric check stayed inconclusive after the doubling limit."""


# --- linear algebra / algebras -------------------------------------------

class MixedBase(DualPairError):
    """Operands live over different base rings."""


class NotSubalgebra(DualPairError):
    """A subspace is not closed under multiplication or misses the unit."""


class NoPrimitiveElement(DualPairError):
    """The search for a single generator of the algebra was exhausted."""


class DimensionCapExceeded(DualPairError):
    """A dense structure-constant computation exceeds the configured cap."""


# --- dual pairs -----------------------------------------------------------

class AxiomsFailed(DualPairError):
    """The pairing does not satisfy the dual-pair axioms."""


class InvalidHopf(DualPairError):
    """The given comultiplication/counit data is not a Hopf structure."""


class AdjointNotAlgebraMap(DualPairError):
    """The adjoint of a map fails to be an algebra homomorphism."""


class NotAField(DualPairError):
    """Kernels and cokernels require a field base."""


# --- points ---------------------------------------------------------------

class MixedTarget(DualPairError):
    """Points live over different target rings."""


class NotAlgebraMap(DualPairError):
    """A coordinate row does not define an algebra homomorphism."""


class OrderSearchExceeded(DualPairError):
    """Iterated addition did not reach the identity within the rank bound."""


# --- abelian identification ------------------------------------------------

class SeqMismatch(DualPairError):
    """Two H_d elements belong to different divisor sequences."""


class MalformedTable(DualPairError):
    """A pairing table violates its shape or denominator invariants."""


# --- validation / structure -------------------------------------------------

class CharDividesOrder(DualPairError):
    """The base characteristic divides the rank of the pair."""


class SplitCountMismatch(DualPairError):
    """The supplied field does not split the algebras completely."""


class ZetaOrderTooSmall(DualPairError):
    """Some pairing value lies outside the cyclic group of zeta."""


class NotEtale(DualPairError):
    """An algebra fails the squarefreeness/trace-form test."""


# --- galois -----------------------------------------------------------------

class BadReduction(DualPairError):
    """The pair does not reduce to a dual pair at the given prime."""


class NotAPoint(DualPairError):
    """An automorphism image of a point is not a point of the pair."""


class SolveFailed(DualPairError):
    """A structural linear system had no (unique) solution."""


class NotDescended(DualPairError):
    """Computed coefficients are not fixed by the Galois action."""


class SingularVandermonde(DualPairError):
    """Interpolation nodes are not pairwise distinct."""


# --- gallery ------------------------------------------------------------------

class UnsupportedBase(DualPairError):
    """The gallery constructor does not support this base ring."""


class ZeroParameter(DualPairError):
    """A nonzero parameter was required."""
