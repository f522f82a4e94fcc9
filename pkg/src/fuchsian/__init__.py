"""Transformation machinery for Fuchsian second-order differential equations.

Subpackages cover exact rational-function algebra, normal forms and
change of variables, plane-cubic J-invariant families, branched-cover
genus via numerical monodromy, elliptic and theta-function numerics,
and a battery of machine checks for the closed-form identities the
library reproduces.
"""

from .exact import (
    BiPoly,
    BiRat,
    RatFunc,
    UPoly,
    complex_roots,
    cross_difference,
    parse_bipoly,
    parse_expression,
    parse_ratfunc,
    parse_upoly,
    resultant,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BiRat",
    "RatFunc",
    "UPoly",
    "complex_roots",
    "cross_difference",
    "parse_bipoly",
    "parse_expression",
    "parse_ratfunc",
    "parse_upoly",
    "resultant",
    "__version__",
]
