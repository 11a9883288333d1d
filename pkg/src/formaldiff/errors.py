"""Exception types raised by the engine."""


class FormalDiffError(Exception):
    """Base class for every engine error."""


class DomainError(FormalDiffError, ArithmeticError):
    """A primitive was evaluated outside its domain."""


class NotDifferentiable(FormalDiffError):
    """A non-smooth symbol blocks symbolic differentiation."""

    def __init__(self, symbol, level=None):
        self.symbol = symbol
        self.level = level
        msg = f"symbol {symbol!r} is not smooth"
        if level is not None:
            msg += f" (while computing differential level {level})"
        super().__init__(msg)


class ArityMismatch(FormalDiffError, ValueError):
    pass


class OrderNotZero(FormalDiffError, ValueError):
    """Differential-respecting substitution needs a precalculus variable."""


class NotPolynomialInDifferentials(FormalDiffError, ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"differential variables occur non-polynomially in {witness!r}")


class TooLarge(FormalDiffError, ValueError):
    pass


class MixedVariables(FormalDiffError, ValueError):
    """A term mixes differential and difference variables."""


class UnknownSymbol(FormalDiffError, KeyError):
    def __str__(self):
        return f"unknown function symbol {self.args[0]!r}"


class ParseError(FormalDiffError, SyntaxError):
    """Malformed surface syntax; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")
