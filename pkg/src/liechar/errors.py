"""Exception hierarchy shared by the library and the CLI."""


class LiecharError(Exception):
    """Base class for all computational failures raised by liechar."""


class UnsupportedAlgebra(LiecharError, ValueError):
    pass


class NonDominantWeight(LiecharError, ValueError):
    pass


class NonExactDivision(LiecharError):
    pass


class NotWeylInvariant(LiecharError):
    pass


class NonTermination(LiecharError):
    pass


class NegativeMultiplicity(LiecharError):
    pass


class HalfIntegerCoefficient(LiecharError):
    pass


class NonIntegerCoefficient(LiecharError):
    pass


class ResonantDenominator(LiecharError):
    pass


class DegreeOverflow(LiecharError):
    pass


class InconsistentSystem(LiecharError):
    pass


class SchemaError(LiecharError, ValueError):
    """A JSON document does not match the expected schema or version."""
