class PotalgError(Exception):
    """Base class for all engine errors."""


class DomainError(PotalgError, ValueError):
    """A mathematical precondition does not hold."""


class AlphabetError(PotalgError, ValueError):
    """Operands live over different alphabets or fields."""


class EmptyPolynomialError(DomainError):
    pass


class StalenessError(DomainError):
    """A query reaches past the degree range a truncated basis certifies."""


class ConfigError(PotalgError):
    pass


class ParseError(PotalgError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        before = text[:pos]
        self.line = before.count("\n") + 1
        self.column = pos - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")
