"""Exception types shared by the engine, the kernels and the CLI."""


class NonExactDivisionError(ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class ExponentOverflowError(OverflowError):
    """A monomial exponent exceeded the packed-key capacity."""


class PoleError(ZeroDivisionError):
    """A rational function was evaluated (or expanded) where its denominator vanishes."""


class SymbolicResidueError(ValueError):
    """A numeric result was requested but symbols other than x remain."""
