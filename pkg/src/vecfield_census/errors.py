"""Exception types shared across the package."""


class CensusError(Exception):
    """Base class for all errors raised by this package."""


class UnknownCharacter(CensusError):
    """Input text contains a character outside the bracketing alphabet."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"unknown character {char!r} at position {position}")


class NotValid(CensusError):
    """A string failed the validity rules; ``reason`` names the first violation."""

    def __init__(self, reason: str, position: int | None = None):
        self.reason = reason
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"not a valid bracketing ({reason}{where})")


class OddLength(CensusError):
    """An even-length string was required."""


class NotDivisible(CensusError):
    """An exact division left a remainder.  Signals an implementation bug:
    every division performed by this package is mathematically integral."""

    def __init__(self, numerator: int, denominator: int):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{numerator} is not divisible by {denominator}")


class NegativeResult(CensusError):
    """A quantity that counts objects came out negative (bug signal)."""


class NotADivisor(CensusError):
    """A symmetry order was requested that does not divide the slot count."""


class CapExceeded(CensusError):
    """An exhaustive-search request exceeded the configured size cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"n={n} exceeds the exhaustive-search cap {cap}; "
            f"raise it explicitly (or via VECFIELD_ORACLE_CAP) if you accept the runtime"
        )


class NoEdgeAtVertexOrBeyond(CensusError):
    """Re-rooting asked for the nearest full edge, but the tree has none."""
