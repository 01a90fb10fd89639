"""Exact construction and cross-verification of q-Lidstone polynomial
sequences together with the q-numbers that seed the classical examples."""

from .qcore import QContext, as_rational, format_rational
from .qpoly import Poly
from .qseries import TruncSeries, ZeroConstantTerm

__version__ = "0.1.0"

__all__ = ["QContext", "as_rational", "format_rational", "Poly", "TruncSeries", "ZeroConstantTerm", "__version__"]
