"""Exception hierarchy shared by every module."""


class DunklError(Exception):
    """Base class; the CLI maps subclasses onto exit codes."""


class InputError(DunklError, ValueError):
    """Malformed or invalid user input (CLI exit 65)."""


class ZeroNormal(InputError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"normal {index} is zero")


class DuplicateHyperplane(InputError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"normals {i} and {j} define the same hyperplane")


class DimensionMismatch(InputError):
    pass


class BadParams(InputError):
    pass


class LengthMismatch(InputError):
    pass


class NonPositiveWeight(InputError):
    def __init__(self, index, value=None):
        self.index = index
        super().__init__(f"weight {index} is not positive ({value})")


class NotEssentialOrReducible(DunklError):
    """The arrangement violates the standing essential + irreducible assumption."""


class WrongDimension(DunklError):
    pass


class NotPositiveDefinite(DunklError, ArithmeticError):
    pass


class NotConverged(DunklError):
    pass


class NotFeasible(DunklError):
    pass


class LPNumericalFailure(DunklError, ArithmeticError):
    pass
