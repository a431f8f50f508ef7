"""Exact computations around monotone instanton moduli on 4-manifolds
with Lie structure group, plus SU(2) representation varieties and Khovanov
homology of the small knots used to probe them."""

from .errors import ToolkitError

__all__ = ["ToolkitError"]
__version__ = "0.1.0"
