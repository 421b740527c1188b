"""Exception types shared across the package."""


class MultiborsukError(Exception):
    """Base class for domain errors raised by this package."""


class BoundExceededError(MultiborsukError):
    """An exponential procedure was asked to run past its configured size bound."""


class AmbiguousDiameterError(MultiborsukError):
    """A pairwise distance fell inside the forbidden classification band."""


class HypothesisError(MultiborsukError):
    """An operation's structural hypothesis failed; the message names it."""


class ConstructionError(MultiborsukError):
    """A geometric construction could not be completed or failed verification."""
