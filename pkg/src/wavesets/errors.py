"""Exception hierarchy shared by all modules."""


class WaveletSetError(ValueError):
    """Base class for every error raised by :mod:`wavesets`."""


class MalformedInputError(WaveletSetError):
    """An interval with ``lo > hi``, an unparsable rational, or a bad document."""


class MustSplitError(WaveletSetError):
    """An interval straddles 0 where a sign-preserving projection was requested."""


class DomainError(WaveletSetError):
    """A family or case parameter lies outside its admissible domain."""


class DegenerateSlopeError(WaveletSetError):
    """Two consecutive polygonal vertices share an abscissa."""


class ValidationError(WaveletSetError):
    """Construction data failed validation.

    ``item`` names the violated condition (for instance ``"a"``, ``"b"``,
    ``"c"`` for classification data, or a slope-ordering tag for polygonals).
    """

    def __init__(self, message, item=None):
        super().__init__(message)
        self.item = item


class NotAWaveletSetError(WaveletSetError):
    """A verifier precondition or a certificate chain failed.

    ``position`` is the chain index at which the failure was detected, when
    that is meaningful.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotClassifiableError(WaveletSetError):
    """No classification data reproduces the given symmetric set."""
