"""Exception hierarchy shared across the package."""


class HolevoError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HolevoError):
    """Operands have incompatible shapes or subsystem dimensions."""


class InvalidDensity(HolevoError):
    """A matrix failed one of the density-matrix invariants.

    Carries the measured deviation so callers can report how badly the
    invariant was violated.
    """

    def __init__(self, message, deviation):
        super().__init__(f"{message} (deviation {deviation:.3e})")
        self.deviation = deviation


class NotHermitian(InvalidDensity):
    pass


class NotUnitTrace(InvalidDensity):
    pass


class NotPositive(InvalidDensity):
    pass


class InvalidPovm(HolevoError):
    """POVM elements are not positive or do not sum to the identity."""


class IncompleteKraus(HolevoError):
    """Kraus operators do not satisfy the completeness relation."""

    def __init__(self, deviation):
        super().__init__(f"Kraus completeness violated (deviation {deviation:.3e})")
        self.deviation = deviation


class PremiseNotSatisfied(HolevoError):
    """A demonstration's premise does not hold for the supplied inputs."""


class UnknownCheck(HolevoError):
    """Campaign configuration names a check that is not registered."""
