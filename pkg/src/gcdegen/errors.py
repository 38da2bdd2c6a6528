"""Exception types raised across gcdegen."""


class GcDegenError(Exception):
    """Base class for every error raised by gcdegen."""


class BoundExceededError(GcDegenError, ValueError):
    """An input is larger than a configured enumeration bound.

    Raise the bound through :class:`gcdegen.config.Limits` (or ``--force`` /
    ``--max-enum`` on the command line) to run anyway.
    """


class ShapeMismatchError(GcDegenError, ValueError):
    """Two objects that must share a size ``n`` (or a length) do not."""


class HypothesisNotMetError(GcDegenError, ValueError):
    """A minor does not satisfy the hypothesis of the lowest-weight lemma.

    Some cell of its antidiagonal lies strictly below the main antidiagonal.
    """


class ConfigError(GcDegenError, ValueError):
    """Invalid configuration value, e.g. a malformed environment variable."""


class OrientationError(GcDegenError, RuntimeError):
    """No candidate orientation matches face counts with Demazure dimensions."""
