class SkewInvError(Exception):
    """Base class for all errors raised by skewinv."""


class ContextMismatchError(SkewInvError, ValueError):
    pass


class DegreeError(SkewInvError, ValueError):
    """A degree outside the tracked range, or a non-homogeneous input."""


class UnsupportedSubstitutionError(SkewInvError, ValueError):
    """The requested variable images do not extend to an algebra map."""


class NotInvertibleError(SkewInvError, ValueError):
    pass


class EnumerationCapExceeded(SkewInvError, RuntimeError):
    """Group closure grew past the element cap (infinite or too large)."""


class ProblemFileError(SkewInvError, ValueError):
    pass
