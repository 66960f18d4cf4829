"""Exception types shared across the package."""


class MetaplecticError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(MetaplecticError):
    """Inversion or division by a zero scalar / zero denominator."""


class NotDivisible(MetaplecticError):
    """An exact division was requested but the divisor does not divide."""


class UnsupportedType(MetaplecticError):
    """Root system type outside the supported crystallographic range."""


class GroupTooLarge(MetaplecticError):
    """Weyl group order exceeds the enumeration cap."""


class LatticeMismatch(MetaplecticError):
    """Arithmetic between group-algebra elements on incompatible lattices."""


class DenominatorZero(MetaplecticError):
    """A rational group-algebra element was built with zero denominator."""


class CosetGroupTooLarge(MetaplecticError):
    """|P/P^m| exceeds the cap for the coset decomposition."""


class NotInC(MetaplecticError):
    """Weight outside the fundamental W-set C where the normalizer lives."""


class NotDominant(MetaplecticError):
    """A dominant weight was required."""


class NotInLattice(MetaplecticError):
    """A lattice point of the rescaled lattice was required."""


class InternalMismatch(MetaplecticError):
    """Two evaluation paths that must agree produced different results."""


class ClosureCapExceeded(MetaplecticError):
    """Monomial support closure exceeded the configured cap."""


class NonUniqueEigenvector(MetaplecticError):
    """Joint eigenspace of the Y-operators is not one-dimensional."""


class NormalizationFailure(MetaplecticError):
    """The eigenvector has zero coefficient on the normalizing monomial."""


class FixtureMismatch(MetaplecticError):
    """A computed polynomial differs from the embedded reference table."""
