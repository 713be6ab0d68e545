"""Exception types shared across the package."""


class AvpointsError(Exception):
    """Base class for all package-specific errors."""


class NotFullRank(AvpointsError):
    pass


class NotSublattice(AvpointsError):
    pass


class IndexTooLarge(AvpointsError):
    pass


class NotWeil(AvpointsError):
    """Raised when a polynomial fails Weil validation.

    The first argument is a short machine-readable reason code.
    """

    @property
    def reason(self):
        return self.args[0] if self.args else "unknown"


class NotPalindromic(AvpointsError):
    pass


class DimensionCapExceeded(AvpointsError):
    pass


class MalformedLabel(AvpointsError):
    pass


class NotSquareFree(AvpointsError):
    pass


class NotStable(AvpointsError):
    pass


class DegenerateFrobenius(AvpointsError):
    pass


class NotCoprime(AvpointsError):
    pass


class CandidateSpaceTooLarge(AvpointsError):
    pass


class FactorizationFailed(AvpointsError):
    pass


class SearchCapExceeded(AvpointsError):
    pass


class NotFoundWithinCap(SearchCapExceeded):
    """A point-count search came back empty under the configured caps.

    Never a nonexistence claim unless the search was exhaustive and the
    caller says so.
    """


class InsufficientSupply(AvpointsError):
    pass


class ObstructionExists(AvpointsError):
    """Wraps a NonexistenceReport (available as .report)."""

    def __init__(self, report):
        super().__init__(report)
        self.report = report
