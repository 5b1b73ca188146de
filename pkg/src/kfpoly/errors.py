"""Exception types shared across the package."""


class RankError(ValueError):
    """Rank parameter or simple index out of range."""


class DomainError(ValueError):
    """Input outside the domain of an operation (e.g. non-dominant weight)."""


class InvariantViolation(AssertionError):
    """An internal invariant failed; signals a bug or a bad input."""


class Falsification(RuntimeError):
    """A checked mathematical contract failed on a concrete instance.

    ``report`` carries the JSON-ready description ``{instance, kind, witness}``.
    """

    def __init__(self, kind, instance, witness):
        self.report = {"instance": instance, "kind": kind, "witness": witness}
        super().__init__(f"{kind} at {instance}: {witness}")
