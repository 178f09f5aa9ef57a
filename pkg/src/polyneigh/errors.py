"""Exception hierarchy shared by every module.

``GeometryError`` subclasses describe inputs that parse fine but violate a
geometric invariant; the CLI maps them to exit status 3.  Everything else that
derives from ``PolyneighError`` is a usage or range problem.
"""


class PolyneighError(ValueError):
    pass


class BadRange(PolyneighError):
    pass


class IndexOutOfRange(PolyneighError, IndexError):
    pass


class ParseError(PolyneighError):
    pass


class UnknownExample(PolyneighError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class GeometryError(PolyneighError):
    pass


class EmptyInput(GeometryError):
    pass


class MixedDimensions(GeometryError):
    pass


class DegenerateInput(GeometryError):
    pass


class OnHyperplane(GeometryError):
    pass


class NotFullDimensional(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    pass


class RedundantPoint(GeometryError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"point {index} is not a vertex of the hull")


class FvectorInconsistent(PolyneighError):
    pass


class NotMSequence(PolyneighError):
    pass
