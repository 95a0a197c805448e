"""Exception hierarchy. Every error raised by the library derives from RhoCalcError."""


class RhoCalcError(Exception):
    pass


class ParseError(RhoCalcError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownGenerator(RhoCalcError, KeyError):
    def __str__(self):
        return f"UnknownGenerator({self.args[0]})"


class UndeclaredGenerator(RhoCalcError):
    def __str__(self):
        return f"UndeclaredGenerator({self.args[0]})"


class DuplicateGenerator(RhoCalcError):
    def __str__(self):
        return f"DuplicateGenerator({self.args[0]})"


class NameCollision(RhoCalcError):
    def __str__(self):
        return f"NameCollision({self.args[0]})"


class AlreadyBarred(RhoCalcError):
    def __str__(self):
        return f"AlreadyBarred({self.args[0]})"


class SharedGenerators(RhoCalcError):
    pass


class TrivialRelation(RhoCalcError):
    pass


class NotInEm(RhoCalcError, ValueError):
    pass


class NotInDomain(RhoCalcError, ValueError):
    """The spine scan did not recognize a word as a product over {a, b_i}."""


class CountMismatch(RhoCalcError):
    pass
