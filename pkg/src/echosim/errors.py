"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument to a generator, engine, or metric is out of its valid range."""


class ConfigError(Exception):
    """A run configuration is malformed, inconsistent, or incomplete."""


class BackendError(Exception):
    """A text backend failed at the transport level (network, HTTP, timeout)."""


class OpinionParseError(ValueError):
    """Backend output did not contain a usable belief/opinion pair."""
