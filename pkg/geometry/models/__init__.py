from .isometry import SignedPerm, permutation_sign
from .label import Label, StratumKind
from .lattice import Face, FaceLattice, Facet, FacetColor
from .vectors import AffineSpan, Vec, Vec4

__all__ = [
    "AffineSpan",
    "Face",
    "FaceLattice",
    "Facet",
    "FacetColor",
    "Label",
    "SignedPerm",
    "StratumKind",
    "Vec",
    "Vec4",
    "permutation_sign",
]
