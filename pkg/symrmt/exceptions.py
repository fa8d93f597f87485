import textwrap
import typing as ty


class ArgumentLocation(ty.NamedTuple):
    argument: str
    text: str

    def __str__(self) -> str:
        return f"{self.argument}={self.text!r}"


class SymRmtException(Exception):
    """Root exception for anything raised by the exact engine or its oracles"""

    pass


class PreconditionError(SymRmtException):
    "Indicates that an operation was called outside of its domain"

    def __init__(self, operation: str, detail: str) -> None:
        self.operation = operation
        self.detail = detail

    def __str__(self) -> str:
        return f"Precondition violated in {self.operation}: {self.detail}"


class BoundExceeded(PreconditionError):
    "A configured size bound (see symrmt.config) was exceeded"

    def __init__(
        self, operation: str, bound: str, limit: int, value: int
    ) -> None:
        detail = f"{bound} is {limit} but {value} was requested"
        super().__init__(operation, detail)
        self.bound = bound
        self.limit = limit
        self.value = value


class ParsingError(SymRmtException):
    "Indicates that textual input (partitions, rationals, points) is malformed"
    location: ArgumentLocation
    msg: str

    def __init__(self, location: ArgumentLocation, msg: str = "") -> None:
        self.location = location
        self.msg = msg

    def __str__(self) -> str:
        title = self.__class__.__name__
        header = f"{title} at {self.location}"
        body = textwrap.indent(textwrap.fill(self.msg), "  ")
        return f"{header}\n{body}"


class OracleInconsistency(SymRmtException):
    "A brute-force oracle produced a structurally impossible intermediate"

    pass
