"""Exact symbolic engine for extended Yangians of types A, B, C and D."""

__version__ = "0.1.0"

from .algebra import KERNEL, NCPoly, NormalForm, RTTAlgebra, anticommutator, commutator
from .arith import Q, RationalFunction
from .outcome import Outcome
from .tensor import AlgebraContext, ContextError

__all__ = [
    "AlgebraContext",
    "ContextError",
    "KERNEL",
    "NCPoly",
    "NormalForm",
    "Outcome",
    "Q",
    "RTTAlgebra",
    "RationalFunction",
    "anticommutator",
    "commutator",
    "__version__",
]
