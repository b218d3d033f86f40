"""qzigzag: exact-arithmetic verification of q-series, alternating-permutation,
lattice-path, and tableau identities.

The value type everywhere is the truncated exact power series QSeries; every
identity check is a proven congruence to a stated order, or an exact integer
equality.  `qzigzag.registry` holds the closed list of checkable identities;
the `qzigzag` console script drives it.
"""

from .qseries import QSeries, XQSeries, pochhammer, qbinom
from .perm import Permutation
from .tableaux import SkewShape, skew_staircase, staircase, thick_hook
from .paths import LatticePath, WeightScheme
from .report import IdentityReport

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "XQSeries",
    "pochhammer",
    "qbinom",
    "Permutation",
    "SkewShape",
    "skew_staircase",
    "staircase",
    "thick_hook",
    "LatticePath",
    "WeightScheme",
    "IdentityReport",
    "__version__",
]
