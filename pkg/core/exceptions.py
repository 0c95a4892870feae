"""Custom exceptions for frobcat."""


class FrobCatError(Exception):
    """Base exception for frobcat."""

    pass


class FieldMismatchError(FrobCatError):
    """Raised when objects over different fields are combined."""

    pass


class DimensionMismatchError(FrobCatError):
    """Raised when ambient dimensions or shapes do not agree."""

    pass


class RationalsFactorLimit(FrobCatError):
    """Raised when a rational factorization needs an irreducible factor of degree > 2."""

    pass


class WeylError(FrobCatError):
    """Raised for invalid Weyl group input (bad index, type mismatch)."""

    pass


class EnumerationBoundExceeded(WeylError):
    """Raised when a Weyl group is larger than the configured enumeration bound."""

    pass


class AlgebraError(FrobCatError):
    """Base exception for algebra construction failures."""

    pass


class NotAssociativeError(AlgebraError):
    """Raised when structure constants violate associativity or unit laws."""

    pass


class NotFiniteDimensional(AlgebraError):
    """Raised when new basis paths still appear at the degree cap."""

    pass


class SmallCharacteristic(AlgebraError):
    """Raised when the characteristic is too small for the trace-form radical."""

    pass


class NonSplit(AlgebraError):
    """Raised when a semisimple component is not split over the base field."""

    pass


class NotBasic(AlgebraError):
    """Raised when an algebra has isomorphic indecomposable projectives."""

    pass


class PresentationCapExceeded(AlgebraError):
    """Raised when a quiver presentation does not reconcile within the cap."""

    pass


class ImproperIdealError(AlgebraError):
    """Raised when a quotient by the whole algebra is requested."""

    pass


class ParentMismatchError(AlgebraError):
    """Raised when ideals of different algebras are combined."""

    pass


class ModuleError(FrobCatError):
    """Base exception for module computations."""

    pass


class AlgebraMismatchError(ModuleError):
    """Raised when modules over different algebras are combined."""

    pass


class NotAModuleError(ModuleError):
    """Raised when action matrices do not define a unital module."""

    pass


class CutoffExceeded(ModuleError):
    """Raised when a homological degree beyond the cutoff is requested."""

    pass


class IsoNotVerified(ModuleError):
    """Raised when the randomized isomorphism search fails despite matching invariants."""

    pass


class TorsionError(FrobCatError):
    """Base exception for torsion-theoretic constructions."""

    pass


class PsiConstructionError(TorsionError):
    """Raised when no sign convention makes the arrow swap an anti-automorphism."""

    pass


class MembershipError(TorsionError):
    """Raised when a module is not an object of C_{v,w}."""

    pass


class HomologicalError(FrobCatError):
    """Base exception for homological dimension computations."""

    pass


class NotGorensteinWithinCutoff(HomologicalError):
    """Raised when injective dimensions differ or exceed the cutoff."""

    pass


class GorensteinAnomaly(HomologicalError):
    """Raised when two computations of the same dimension disagree."""

    pass


class ConfigError(FrobCatError):
    """Raised when the run configuration cannot be loaded."""

    pass


class ConfigValidationError(ConfigError):
    """Raised when the run configuration fails schema validation."""

    pass


class SuiteError(FrobCatError):
    """Raised when a verification suite is unknown or cannot run."""

    pass
