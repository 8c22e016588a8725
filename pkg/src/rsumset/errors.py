"""Exception types shared across the package."""


class ModulusError(ValueError):
    """Operands live over different primes, or the modulus itself is invalid."""


class PreconditionError(ValueError):
    """Inputs fall outside the hypotheses an operation is defined for."""


class CheckFailure(AssertionError):
    """A mathematically guaranteed check failed.

    The checks that raise this are consequences of proven theorems, so a
    failure points at a bug in this package rather than at the mathematics.
    """

    def __init__(self, name, detail=""):
        self.name = name
        self.detail = detail
        msg = f"check {name!r} failed"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
