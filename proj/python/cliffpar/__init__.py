"""Exact-arithmetic toolkit for quaternionic double spaces and their line
parallelisms.

All mathematical values cross the boundary in the library's text syntaxes:
rationals as "p/q", elements of GF(2)(s,t) as polynomial fractions like
"(s^2*t + 1)/(s + t)", quaternions as "1 + 2*i - 3/4*j", subspaces as
semicolon-separated rows such as "1; i".
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
