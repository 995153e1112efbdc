"""Exception hierarchy shared by all modules."""


class TrinvError(Exception):
    """Base class for every error raised by this package."""


class ZeroInverse(TrinvError, ZeroDivisionError):
    pass


class ModulusMismatch(TrinvError, ValueError):
    pass


class Singular(TrinvError, ValueError):
    pass


class SingularGenerator(Singular):
    pass


class EvenCharacteristic(TrinvError, ValueError):
    pass


class NotPrime(TrinvError, ValueError):
    pass


class CapExceeded(TrinvError, RuntimeError):
    pass


class NotUpperTriangular(TrinvError, ValueError):
    pass


class OrderMismatch(TrinvError, ValueError):
    pass


class NotInvariant(TrinvError, ValueError):
    pass


class NotHomogeneous(TrinvError, ValueError):
    pass


class ParseError(TrinvError, ValueError):
    pass
