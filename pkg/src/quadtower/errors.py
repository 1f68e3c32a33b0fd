"""Exception types shared across the package."""


class QuadTowerError(Exception):
    pass


class DivisionByZero(QuadTowerError, ZeroDivisionError):
    pass


class LevelMismatch(QuadTowerError):
    """Tower levels incompatible and not coercible via the inclusions."""


class CurveMismatch(QuadTowerError):
    """A divisor or point was used on the wrong curve."""


class BoundExceeded(QuadTowerError):
    """A configured enumeration bound would be exceeded."""


class ZeroElement(QuadTowerError):
    """The zero element has no divisor."""


class SingularMap(QuadTowerError):
    """A linear map required to be invertible is singular."""


class NonRegular(QuadTowerError):
    """The invariant is not a unit, so no coset representative exists."""


class NotInDomain(QuadTowerError):
    """An invariant lies outside the lattice-bounded domain A_D."""


class BadEpsilon(QuadTowerError):
    """Local unit factors need a nonzero trace-zero element."""


class ZeroNorm(QuadTowerError):
    """Petersson norm vanished where a division by it was required."""


class EmptySpan(QuadTowerError):
    """The requested span contains no nonzero annihilating element."""


class ConfigError(QuadTowerError):
    """Invalid run configuration."""


class ComputationFailed(QuadTowerError):
    """An embedded invariant failed during a computation."""
