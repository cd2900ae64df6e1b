class QuartetError(Exception):
    pass


class ConfigError(QuartetError):
    pass


# arithmetic

class ZeroDenominator(QuartetError, ZeroDivisionError):
    pass


class DivisionByZero(QuartetError, ZeroDivisionError):
    pass


class InexactDivision(QuartetError, ArithmeticError):
    pass


class PoleAtPoint(QuartetError, ArithmeticError):
    pass


class TableMismatch(QuartetError, ValueError):
    pass


class MissingBinding(QuartetError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ScalarSyntaxError(QuartetError, ValueError):
    pass


# geometry

class DegenerateConstruction(QuartetError):
    pass


class ConjugateAtInfinity(DegenerateConstruction):
    pass


# construction scripts

class ScriptError(QuartetError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


class LexError(ScriptError):
    pass


class ParseError(ScriptError):
    pass


class ScriptTypeError(ScriptError):
    pass


class ScriptNameError(ScriptError):
    pass


class ScriptEvalError(ScriptError):
    """An arithmetic or geometry error raised while evaluating a script node."""

    def __init__(self, cause: QuartetError, line: int = 0, col: int = 0):
        super().__init__(f"{cause.__class__.__name__}: {cause}", line, col)
        self.cause = cause
