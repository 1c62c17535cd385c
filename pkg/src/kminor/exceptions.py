class KMinorError(Exception):
    """Base class for errors raised by kminor."""


class SearchExhausted(KMinorError):
    """A bounded combinatorial search ran out of candidates or node budget."""


class SDRInfeasible(KMinorError):
    """No system of distinct representatives exists for the star centers."""


class BuildCapExceeded(KMinorError):
    """The instance has more vertices than the configured build cap allows."""


class CertificateParseError(KMinorError):
    """The certificate text does not follow the KMINOR v1 grammar."""
