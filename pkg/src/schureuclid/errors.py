"""Exception types shared across the package."""


class NotSmooth(ValueError):
    """``m`` has a prime factor outside the basis.

    ``cofactor`` is what remains of ``m`` after every basis prime has been
    divided out; ``witness`` is its smallest prime factor.
    """

    def __init__(self, m, cofactor, witness, argument=None):
        self.m = m
        self.cofactor = cofactor
        self.witness = witness
        self.argument = argument
        where = f" ({argument})" if argument else ""
        super().__init__(
            f"{m}{where} is not smooth over the basis: cofactor {cofactor}, "
            f"prime witness {witness}"
        )


class CapExceeded(RuntimeError):
    """An admissible coloring of the whole search range exists."""

    def __init__(self, t, mode, cap, witness=None):
        self.t = t
        self.mode = mode
        self.cap = cap
        self.witness = witness
        super().__init__(
            f"[1, {cap}] admits an admissible {t}-coloring ({mode}); "
            f"the Schur number is >= {cap} and undetermined at this cap"
        )


class HorizonExhausted(RuntimeError):
    """No monochromatic triple was found up to the horizon."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"no monochromatic triple in [1, {cap}]")


class CapRequired(ValueError):
    """No certified default horizon exists for this palette and mode."""


class NotATriple(ValueError):
    pass


class NotPrimitive(ValueError):
    pass


class SumMismatch(ValueError):
    pass


class MantissaMismatch(ValueError):
    def __init__(self, mantissas):
        self.mantissas = tuple(mantissas)
        super().__init__(
            "mantissas differ: " + ", ".join(str(d) for d in self.mantissas)
        )


class VerificationError(Exception):
    """A certificate failed an independent re-check."""
