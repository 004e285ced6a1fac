"""
Exception hierarchy shared by the algebra services
"""


class AlgebraError(ValueError):
    """Base class for invalid inputs to the algebra services"""


class OverlapOrGap(AlgebraError):
    """Blocks overlap or fail to cover the point set"""


class OutOfRange(AlgebraError):
    """A point or vertex label lies outside the admissible range"""


class SizeMismatch(AlgebraError):
    """Operands have different sizes or degrees"""


class NotBiequivalence(AlgebraError):
    """Some block misses the top or the bottom row"""


class DegreeTooSmall(AlgebraError):
    """The degree is below the minimum the operation supports"""


class IndexOutOfRange(AlgebraError):
    """A generator index is invalid for the degree"""


class NotInLocalSubmonoid(AlgebraError):
    """Element is not fixed on both sides by the idempotent epsilon"""


class NotAUnit(AlgebraError):
    """Element is not a permutation diagram"""


class ParseError(AlgebraError):
    """Text does not match the literal or word grammar"""


class CapExceeded(RuntimeError):
    """An enumeration grew beyond its configured cap"""

    def __init__(self, what: str, cap: int, reached: int):
        super().__init__(f"{what} exceeded cap of {cap} (reached {reached})")
        self.what = what
        self.cap = cap
        self.reached = reached
