"""Exception hierarchy shared by all effindex modules."""


class EffindexError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EffindexError):
    """A file could not be parsed (malformed row, bad header, bad literal)."""


class ValidationError(EffindexError):
    """Parsed data violates a domain invariant (bad dates, bad prices)."""


class TooShortError(EffindexError):
    """Series is shorter than the minimum length an operation supports."""


class WrongKindError(EffindexError):
    """A log series of the wrong kind (price vs return) was supplied."""


class DegenerateSpectrumError(EffindexError):
    """All low-frequency periodogram ordinates are zero."""


class NonConvergenceError(EffindexError):
    """The one-dimensional minimizer failed to bracket a minimum."""


class ZeroOrdinateError(EffindexError):
    """A zero ordinate appeared where a logarithm must be taken."""


class TooFewFrequenciesError(EffindexError):
    """Not enough low frequencies for a regression with intercept."""


class DegeneratePathError(EffindexError):
    """Path has no variation at the scales the estimator inspects."""


class ZeroVarianceError(EffindexError):
    """Series is constant and cannot be standardized."""


class BadToleranceError(EffindexError):
    """Entropy tolerance leaves no positive rescaling denominator."""


class EmbeddingFailureError(EffindexError):
    """Circulant embedding produced a materially negative eigenvalue."""


class UnknownSymbolError(EffindexError):
    """A symbol could not be resolved to a group."""


class DegenerateRegressorError(EffindexError):
    """Regression input has a constant explanatory variable."""


class MissingReportError(EffindexError):
    """A command requires a report file that does not exist."""


class NoInputError(EffindexError):
    """No usable input series were found."""


class BadSpecError(EffindexError):
    """Generator parameters are missing, out of range, or inconsistent."""
