"""Exception types shared across the package."""


class DaseinkitError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(DaseinkitError):
    """A matrix deviates from self-adjointness beyond the configured tolerance."""


class NotProjection(DaseinkitError):
    """A matrix is not idempotent / self-adjoint enough to be a projection."""


class NotUnitVector(DaseinkitError):
    """A state vector is not normalised."""


class NumericalFailure(DaseinkitError):
    """A numerical routine failed to converge or violated a sanity bound."""


class InvalidParameter(DaseinkitError):
    """A scalar or structural argument is out of its allowed range."""


class DimMismatch(DaseinkitError):
    """Operands act on spaces of different dimensions."""


class DegenerateIntersection(DaseinkitError):
    """Atom recovery inside an algebra intersection kept colliding eigenvalues."""


class SizeLimitExceeded(DaseinkitError):
    """An enumeration or closure grew past its configured cap."""


class RestrictionAmbiguous(DaseinkitError):
    """An atom has zero or several dominating atoms in a coarser context."""


class PresheafMismatch(DaseinkitError):
    """Subobjects over different presheaves were combined."""


class UnboundSymbol(DaseinkitError):
    """An expression symbol has no operator bound in the environment."""


class MissingSymbol(DaseinkitError):
    """An expression does not use exactly the designated symbols."""


class InvalidStageMap(DaseinkitError):
    """A per-stage map is not a bijection or does not preserve the stage algebra."""


class NotComposable(DaseinkitError):
    """Two cells or functors do not have matching shapes for composition."""


class ParseError(DaseinkitError):
    """A configuration file is not valid JSON."""


class SchemaError(DaseinkitError):
    """A configuration file violates the expected schema.

    The message starts with a JSON-pointer-style location, e.g.
    ``/system/operators/A: matrix is not Hermitian``.
    """
