"""Exception hierarchy shared by all jamgame modules."""


class JamGameError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(JamGameError, ValueError):
    """Argument outside the mathematical domain of a function."""


class SingularError(JamGameError, ValueError):
    """Evaluation requested at a singular point (derivative blow-up)."""


class InvalidParams(JamGameError, ValueError):
    """A game parameter violates its invariant; the message names the field."""


class InvalidStrategy(JamGameError, ValueError):
    """A strategy profile violates the strategy-space invariants."""


class BracketError(JamGameError, RuntimeError):
    """Root bracketing failed where a sign change was guaranteed.

    Reaching this indicates corrupted parameters, not a numerical edge case.
    """


class ApproxUndefined(JamGameError, ValueError):
    """The closed-form leader approximation has no real solution here."""


class DegenerateUtility(JamGameError, ValueError):
    """An efficiency ratio was requested against a non-positive utility."""


class EmptyWindow(JamGameError, ValueError):
    """An estimator was asked to run on an empty observation window."""


class ConfigError(JamGameError, ValueError):
    """A scenario configuration file is missing keys or unparseable."""
