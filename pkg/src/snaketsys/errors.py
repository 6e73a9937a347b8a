"""Domain exceptions shared across the package."""


class DomainError(ValueError):
    """Base class for violated mathematical preconditions."""


class NotReduced(DomainError):
    pass


class NotSinkOrSource(DomainError):
    pass


class OutsideWindow(DomainError):
    pass


class NotCommuting(DomainError):
    pass


class NotBraidPattern(DomainError):
    pass


class WrongCarrier(DomainError):
    pass


class NotLongestWord(DomainError):
    pass


class ParityMismatch(DomainError):
    pass


class NotPrimeSnakePair(DomainError):
    pass


class NotSnake(DomainError):
    pass


class NotPrimeSnake(DomainError):
    pass


class TooShort(DomainError):
    pass


class MissingTableEntry(DomainError):
    pass
