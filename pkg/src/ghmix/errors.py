"""Exception types shared across the package."""


class GhmixError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GhmixError, ValueError):
    """Invalid argument outside a function's mathematical domain."""


class SingularMatrixError(GhmixError, ValueError):
    """A scale matrix failed its triangular factorization."""


class ParseError(GhmixError, ValueError):
    """A data file could not be parsed."""


class FitError(GhmixError, RuntimeError):
    """Base class for failures inside an EM run."""


class NonFiniteDensityError(FitError):
    """A component log-density came out non-finite during the E-step."""

    def __init__(self, row, component, value):
        self.row = row
        self.component = component
        self.value = value
        super().__init__(
            f"non-finite log-density {value!r} at observation {row}, "
            f"component {component}"
        )


class DegenerateDenominatorError(FitError):
    """The shared mu/beta update denominator collapsed for a component.

    Signals a symmetric or near-Gaussian stall; the caller is expected to
    retry the update with beta frozen for the current iteration.
    """

    def __init__(self, component, denominator):
        self.component = component
        self.denominator = denominator
        super().__init__(
            f"degenerate update denominator {denominator!r} for component "
            f"{component}"
        )


class EmptyComponentError(FitError):
    """A component's expected membership fell below the configured floor."""

    def __init__(self, component, mass, floor):
        self.component = component
        self.mass = mass
        self.floor = floor
        super().__init__(
            f"component {component} holds expected mass {mass:.6g} < {floor:.6g}"
        )
