"""Exception hierarchy shared by every module in the package."""


class FacetIdealError(Exception):
    """Base class; the CLI maps any of these to exit code 2."""


class UnknownVertex(FacetIdealError):
    def __init__(self, label):
        super().__init__(f"unknown vertex {label!r}")
        self.label = label


class EmptyFacet(FacetIdealError):
    def __init__(self, index):
        super().__init__(f"facet #{index} is empty")
        self.index = index


class EmptyComplexError(FacetIdealError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} is undefined on the empty complex")


class NotAFacet(FacetIdealError):
    pass


class IndexOutOfRange(FacetIdealError):
    pass


class EmptySelection(FacetIdealError):
    pass


class UniverseTooLarge(FacetIdealError):
    def __init__(self, size, bound):
        super().__init__(f"universe has {size} vertices, bound is {bound}")
        self.size = size
        self.bound = bound


class NotATree(FacetIdealError):
    pass


class NotGrafted(FacetIdealError):
    pass


class ChainViolation(FacetIdealError):
    pass


class BadPartition(FacetIdealError):
    pass


class GraftVerificationFailed(FacetIdealError):
    def __init__(self, condition, complex_=None):
        super().__init__(f"grafted output failed verification: {condition}")
        self.condition = condition
        self.complex = complex_


class BoundsTooLarge(FacetIdealError):
    pass


class ParseError(FacetIdealError):
    pass
