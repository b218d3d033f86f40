"""Exception types shared across the package."""


class QZigzagError(Exception):
    """Base class for all package errors."""


class DivisionByNonUnit(QZigzagError, ZeroDivisionError):
    """Series division where the divisor's constant term is zero."""


class IndexOutOfRange(QZigzagError, ValueError):
    """An index parameter outside its admissible range (e.g. qbinom with m > n)."""


class CapExceeded(QZigzagError, ValueError):
    """An enumeration was requested beyond its configured cap."""


class NegativeExponent(QZigzagError, ValueError):
    """A statistic multiset contained a negative value where a polynomial was required."""


class NotInClass(QZigzagError, ValueError):
    """A permutation argument is not in the class a map is defined on."""


class UnknownExpr(QZigzagError, KeyError):
    """Unrecognized statistic-expression tag."""


class UnknownRow(QZigzagError, KeyError):
    """Unrecognized table-row identifier."""


class MalformedPartition(QZigzagError, ValueError):
    """Sequence is not a partition, or mu is not contained in lambda."""


class CellOutside(QZigzagError, ValueError):
    """Cell coordinates outside the diagram."""


class BadEndpoints(QZigzagError, ValueError):
    """Lattice-path endpoints that admit no path of the requested kind."""


class FlavorMismatch(QZigzagError, ValueError):
    """Weight flavor incompatible with the path (e.g. valley flavor on a Schroder path)."""


class DepthTooSmall(QZigzagError, ValueError):
    """Continued-fraction depth insufficient for the requested x-order."""


class NoDecomposition(QZigzagError, ValueError):
    """No Kreiman outer decomposition was found (bug or inadmissible shape)."""


class NotUnique(QZigzagError, ValueError):
    """More than one Kreiman outer decomposition was found."""


class HypothesisFailed(QZigzagError, ValueError):
    """A determinant theorem's hypothesis fails; carries the violated clause."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class UnknownIdentity(QZigzagError, KeyError):
    """Identity id not present in the registry."""


class RowIncomplete(QZigzagError, ValueError):
    """A table row lacks the data needed for a requested comparison."""
