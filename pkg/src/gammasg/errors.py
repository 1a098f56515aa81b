"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GammaSemigroupError(ValueError):
    """Base class for all errors raised by gammasg."""


class NotAssociative(GammaSemigroupError):
    def __init__(self, witness: tuple[int, int, int, int, int]):
        self.witness = tuple(int(w) for w in witness)
        a, alpha, b, beta, c = self.witness
        super().__init__(
            f"table is not associative at (a, alpha, b, beta, c) = {self.witness}: "
            f"([a alpha b] beta c) != (a alpha [b beta c])"
        )


class IndexOutOfRange(GammaSemigroupError):
    def __init__(self, position: int, value: int, bound: int):
        self.position = position
        self.value = value
        self.bound = bound
        super().__init__(f"table entry {value} at flat position {position} is outside 0..{bound - 1}")


class BadZero(GammaSemigroupError):
    def __init__(self, zero: int, element: int, gamma: int):
        self.zero = zero
        self.witness = (element, gamma)
        super().__init__(
            f"declared zero {zero} fails its law at element {element}, gamma {gamma}"
        )


class ShapeError(GammaSemigroupError):
    pass


class EmptyGenerator(GammaSemigroupError):
    pass


class CatalogTooLarge(GammaSemigroupError):
    pass


class NoZero(GammaSemigroupError):
    def __init__(self, what: str = "operation"):
        super().__init__(f"{what} requires a designated zero element")


class NotClosed(GammaSemigroupError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"subset is not closed: product {witness} leaves the subset")


class NotAnIdeal(GammaSemigroupError):
    pass


class NotCommutative(GammaSemigroupError):
    pass


class NotAChain(GammaSemigroupError):
    def __init__(self, i: int, j: int):
        self.witness = (i, j)
        super().__init__(f"chain members {i} and {j} are incomparable under inclusion")


class NotPrime(GammaSemigroupError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"chain member {index} is not a prime ideal")


class TooLarge(GammaSemigroupError):
    pass


class ExhaustedTries(GammaSemigroupError):
    pass


class NotAssociativeBinary(GammaSemigroupError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"binary table is not associative at {witness}")


class TooLargeForCanonicalization(GammaSemigroupError):
    pass


class TableSyntaxError(GammaSemigroupError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class UnknownCheck(GammaSemigroupError, KeyError):
    def __str__(self) -> str:
        return f"unknown check id {self.args[0]!r}"
