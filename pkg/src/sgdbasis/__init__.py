"""Monomial bases of free Novikov and free special Gelfand-Dorfman algebras.

Both algebras are realized on the weight -1 parts of free differential
algebras (commutative and Poisson).  Products are computed there and pulled
back to the monomial bases by triangular reduction.
"""

from .errors import (
    NotLieElementError,
    NotLSError,
    SignError,
    StructureError,
    TermSyntaxError,
    WeightError,
)
from .linear import LinComb, lc_add, lc_rank, lc_scale

__all__ = [
    "LinComb",
    "lc_add",
    "lc_scale",
    "lc_rank",
    "WeightError",
    "NotLSError",
    "NotLieElementError",
    "StructureError",
    "SignError",
    "TermSyntaxError",
]
