"""Exception hierarchy shared across the package."""


class SymcircError(Exception):
    pass


class CircuitParseError(SymcircError):
    """Netlist syntax or reference error, carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(SymcircError):
    pass


class ShapeError(SymcircError):
    """Circuit shape not supported by the requested reduction/evaluator."""


class CapExceeded(SymcircError):
    pass


class OracleLimitExceeded(CapExceeded):
    pass


class RankCapExceeded(CapExceeded):
    pass


class MonomialCapExceeded(CapExceeded):
    pass


class WeightCapExceeded(CapExceeded):
    pass


class SizeCapExceeded(CapExceeded):
    pass


class DimensionError(SymcircError):
    pass


class PatternError(SymcircError):
    pass


class SingularMinorError(SymcircError):
    pass
