"""Exception hierarchy shared by every module."""


class BurnsideError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BurnsideError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)


# groupoids

class InvalidGroupoid(BurnsideError):
    pass


class MissingComposite(InvalidGroupoid):
    pass


class NonAssociative(InvalidGroupoid):
    pass


class NoIdentity(InvalidGroupoid):
    pass


class NoInverse(InvalidGroupoid):
    pass


class NotAGroup(InvalidGroupoid):
    pass


class NotAFunctor(BurnsideError):
    pass


class NotNatural(BurnsideError):
    pass


# G-sets and bi-sets

class NotFunctorial(BurnsideError):
    pass


class NotFree(BurnsideError):
    pass


class NotACover(BurnsideError):
    pass


class NotBifunctorial(BurnsideError):
    pass


class NotAdmissible(BurnsideError):
    def __init__(self, message, eta=None, witness=None):
        self.eta = eta
        self.witness = witness
        super().__init__(message)


class BaseMismatch(BurnsideError):
    pass


class NotAnIsomorphism(BurnsideError):
    pass


# spans and comparison

class NotAFiniteWeakCover(BurnsideError):
    pass


class NotComposable(BurnsideError):
    pass


class IllDefined(BurnsideError):
    """A map on quotient classes depended on the representative."""
