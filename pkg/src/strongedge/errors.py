"""Exception types shared across the package.

The CLI maps each class to a fixed exit code, so library code should raise
these rather than bare ValueError when the distinction matters.
"""


class InputError(ValueError):
    """Malformed input: bad file syntax, invalid edge lists, unknown names."""


class PreconditionError(ValueError):
    """Input is well formed but outside the class an algorithm requires.

    ``witness`` carries the obstruction found (an odd cycle, a long induced
    cycle, ...) when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GeneratorExhausted(RuntimeError):
    """A rejection sampler ran out of attempts."""
