"""Exception hierarchy shared by every module of the package."""


class GraphError(Exception):
    """Base class for domain errors raised by distdom."""


class GraphDisconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class OrderTooSmall(GraphError):
    pass


class OrderTooLarge(GraphError):
    pass


class ParameterOutOfRange(GraphError):
    pass


class ConfigError(GraphError):
    pass


class ParseError(GraphError):
    """Malformed graph text. ``line`` is 1-based, ``offset`` is 0-based."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
