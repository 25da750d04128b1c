"""Exception hierarchy shared by all orbitforge modules."""


class OrbitforgeError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(OrbitforgeError):
    """A configured resource cap (field size, element count, point count) was hit."""


class NonPrime(OrbitforgeError, ValueError):
    pass


class SizeCapExceeded(CapExceeded):
    pass


class NoPrimitivePolynomial(OrbitforgeError, RuntimeError):
    """Exhausted the polynomial search space; impossible for valid inputs."""


class ZeroInput(OrbitforgeError, ValueError):
    pass


class SNotDividingN(OrbitforgeError, ValueError):
    pass


class ContextMismatch(OrbitforgeError, ValueError):
    pass


class NotInN(OrbitforgeError, ValueError):
    pass


class NotASubgroup(OrbitforgeError, ValueError):
    pass


class NotInGqn(OrbitforgeError, ValueError):
    pass


class HasRegularOrbit(OrbitforgeError, ValueError):
    pass


class ElementCapExceeded(CapExceeded):
    pass


class PointCapExceeded(CapExceeded):
    pass


class UnsupportedBackend(OrbitforgeError, TypeError):
    pass


class IntransitiveTop(OrbitforgeError, ValueError):
    pass


class ConstructionFailed(OrbitforgeError, RuntimeError):
    pass


class GcdViolation(OrbitforgeError, ValueError):
    pass


class DegenerateField(OrbitforgeError, ValueError):
    pass


class EvenOrder(OrbitforgeError, ValueError):
    pass


class EvenCharacteristic(OrbitforgeError, ValueError):
    pass


class BaseStabilizerNontrivial(OrbitforgeError, ValueError):
    pass


class PartitionStabilized(OrbitforgeError, ValueError):
    pass


class NoPartitionFound(OrbitforgeError, RuntimeError):
    pass


class DegreeCapExceeded(CapExceeded):
    pass


class SchemaError(OrbitforgeError, ValueError):
    """A group-spec or search-config document failed validation."""
