"""Exception types shared across the toolkit."""


class CorpusKGError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(CorpusKGError, ValueError):
    """An operation was called with arguments outside its contract."""


class FormatError(CorpusKGError, ValueError):
    """An input file does not match its declared format.

    Where possible the message names the offending line or location.
    """


class ConfigError(CorpusKGError, ValueError):
    """A configuration file or flag violates a constraint.

    The message always names the offending key (e.g. ``cluster.k``).
    """
