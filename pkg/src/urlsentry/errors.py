"""Exception types shared across the toolkit.

Every error raised by the package derives from UrlSentryError so callers
(and the CLI exit-code mapping) can treat input/data problems uniformly.
"""


class UrlSentryError(Exception):
    """Base class for all errors raised by urlsentry."""


class EmptyInput(UrlSentryError):
    """Raw URL was empty after trimming whitespace."""


class UnparsableUrl(UrlSentryError):
    """No recognizable hostname (or otherwise malformed URL)."""


class SchemaMismatch(UrlSentryError):
    """Feature vector and model/schema digests disagree."""


class MissingFile(UrlSentryError):
    """A required input file does not exist."""


class MissingColumn(UrlSentryError):
    """A required CSV column is absent from the header."""


class EmptyCorpus(UrlSentryError):
    """No usable records were loaded."""


class DegenerateCorpus(UrlSentryError):
    """A label class required by the operation is absent (or too small)."""


class EmptyPartition(UrlSentryError):
    """Impurity requested for a partition with zero records."""


class KTooLarge(UrlSentryError):
    """k exceeds the number of training records."""


class UnknownHyperparameter(UrlSentryError):
    """A learner config named a hyperparameter the algorithm does not have."""


class IoFailure(UrlSentryError):
    """Filesystem write failed."""


class IntegrityFailure(UrlSentryError):
    """Model file is corrupt: digest mismatch or undecodable content."""


class UnsupportedVersion(UrlSentryError):
    """Model file format version is newer than this package understands."""


class MalformedFeedLine(UrlSentryError):
    """A zero-day feed line did not parse as 'ISO-date,URL'."""


class NetworkUnavailable(UrlSentryError):
    """Live feed fetch failed or was attempted without --live."""
