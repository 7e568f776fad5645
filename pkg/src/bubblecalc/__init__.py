"""Half-space bubble calculus with quadrature audits and sign certificates."""

__version__ = "0.1.0"

from .bubble import BubbleParams, HalfSpacePoint
from .moments import EnergyConstants, MomentSpec
from .mountain import EnergyTriple, PerturbationTriple
from .qform import KappaVector, QForm, TestVector
from .quadrature import QuadratureError, QuadratureSpec

__all__ = [
    "__version__",
    "BubbleParams",
    "HalfSpacePoint",
    "EnergyConstants",
    "MomentSpec",
    "EnergyTriple",
    "PerturbationTriple",
    "KappaVector",
    "QForm",
    "TestVector",
    "QuadratureError",
    "QuadratureSpec",
]
