"""Exact tensor-field calculus for couple-stress elasticity.

Everything is computed with rational arithmetic on polynomial fields, so the
identities checked by this package hold exactly rather than to a tolerance.
"""

__version__ = "0.1.0"

from .cube import FACES, Cube, Face, face
from .fields import X1, X2, X3, as_field
from .models import ConformalMapParams, IsotropicMaterial, ModelKind
from .poly import Poly
from .polarity import Polarity, TaylorDecomposition, analyze, classify, expand
from .reports import Check, RunReport

__all__ = [
    "__version__",
    "Poly",
    "X1",
    "X2",
    "X3",
    "as_field",
    "Cube",
    "Face",
    "FACES",
    "face",
    "Polarity",
    "TaylorDecomposition",
    "expand",
    "classify",
    "analyze",
    "IsotropicMaterial",
    "ModelKind",
    "ConformalMapParams",
    "Check",
    "RunReport",
]
