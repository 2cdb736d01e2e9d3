"""Exception hierarchy.

Every error raised by the library derives from :class:`WeylGroupoidError`.
The CLI maps :class:`DomainError` subclasses to exit status 1 and
:class:`VerificationError` subclasses to exit status 2.
"""


class WeylGroupoidError(Exception):
    pass


class DomainError(WeylGroupoidError):
    """The input is mathematically outside what the operation supports."""


class VerificationError(WeylGroupoidError):
    """An independent check disagreed with the computed data."""


class NotGCM(DomainError):
    def __init__(self, i, j, reason):
        self.i, self.j, self.reason = i, j, reason
        super().__init__(f"not a generalized Cartan matrix at ({i}, {j}): {reason}")


class IndexOutOfRange(DomainError, IndexError):
    pass


class RankMismatch(DomainError, ValueError):
    pass


class BoundExceeded(DomainError):
    def __init__(self, i, j, bound):
        self.i, self.j, self.bound = i, j, bound
        super().__init__(
            f"no vanishing adjoint power for ({i}, {j}) up to exponent {bound}"
        )


class UndefinedEntry(DomainError):
    pass


class NotIFinite(DomainError):
    def __init__(self, obj, i, j):
        self.obj, self.i, self.j = obj, i, j
        super().__init__(f"object {obj} is not {i}-finite (entry ({i}, {j}) unbounded)")


class TooManyObjects(DomainError):
    def __init__(self, max_objects):
        self.max_objects = max_objects
        super().__init__(f"more than {max_objects} objects generated")


class AxiomC1Violation(DomainError):
    def __init__(self, i, obj):
        self.i, self.obj = i, obj
        super().__init__(f"(C1) fails: r_{i} is not an involution at {obj}")


class AxiomC2Violation(DomainError):
    def __init__(self, i, j, obj):
        self.i, self.j, self.obj = i, j, obj
        super().__init__(f"(C2) fails: entry ({i}, {j}) differs between {obj} and its r_{i}-image")


class LengthBoundExceeded(DomainError):
    def __init__(self, max_length):
        self.max_length = max_length
        super().__init__(f"groupoid exploration did not saturate within length {max_length}")


class NotFinite(DomainError):
    pass


class NotRootSystem(DomainError):
    pass


class InvalidWord(DomainError, ValueError):
    pass


class NotReduced(DomainError):
    pass


class TargetMismatch(DomainError):
    pass


class NotComparable(DomainError):
    pass


class ModeUnsupported(DomainError):
    pass


class DegreeCapExceeded(DomainError):
    pass


class DimCapExceeded(DomainError):
    pass


class NotFiniteDimensional(DomainError):
    pass


class CheckFailed(VerificationError):
    def __init__(self, which, degree=None, detail=""):
        self.which, self.degree = which, degree
        msg = f"check failed: {which}"
        if degree is not None:
            msg += f" at degree {degree}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InputError(WeylGroupoidError):
    """Malformed input document."""
