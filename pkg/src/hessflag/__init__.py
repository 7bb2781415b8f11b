"""Exact classification of singular permutation flags and normality of
regular nilpotent Hessenberg varieties Hess(N,h) in type A.

Two independent routes decide singularity of a permutation flag:

* a combinatorial test (does the conjugated Hessenberg complement contain
  a lower diagonal full-string?), and
* an exact symbolic Jacobian rank computation on the local defining ideal.

The two are cross-checked against each other throughout the test suite.
"""

__version__ = "0.1.0"

from .perms import Permutation, HessenbergFunction
from .complement import CellSet, complement, full_string_heights
from .classify import is_singular_flag, singular_flags, is_normal

__all__ = [
    "Permutation",
    "HessenbergFunction",
    "CellSet",
    "complement",
    "full_string_heights",
    "is_singular_flag",
    "singular_flags",
    "is_normal",
]
