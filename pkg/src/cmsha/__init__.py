"""Residues of CM L-values for y^2 = x^3 - Dx over Q(i)."""

from .curves import CurveContext, make_curve_context, SUPPORTED_D
from .errors import CMError
from .gauss import GaussianInteger, euler_phi, hensel_root_minus_one

__all__ = [
    "CMError",
    "CurveContext",
    "GaussianInteger",
    "SUPPORTED_D",
    "euler_phi",
    "hensel_root_minus_one",
    "make_curve_context",
]

__version__ = "0.1.0"
