"""Exception types shared across the package."""


class DimensionGuardError(ValueError):
    """A requested dimension exceeds the configured materialization guard."""


class StateInvariantError(RuntimeError):
    """An arc-count state or replacement plan broke a construction invariant."""
