"""Exception types. All derive from ValueError so callers can catch input
and domain failures uniformly."""


class UnnlabError(ValueError):
    pass


class UndefinedQuantityError(UnnlabError):
    pass


class SizeLimitError(UnnlabError):
    pass


class DegenerateDegreeError(UnnlabError):
    pass


class PreconditionError(UnnlabError):
    pass
