from .boundary import BoundaryBlock, BoundaryComponent, BoundaryGluing
from .cusp import CuspKind, CuspSection, CuspShape, CuspSide, CuspSquare
from .pairing import CopyRule, FacetPairing, FacetPairingRule, Gluing, GluingKind
from .quotient import Cell, MirroredComplex, QuotientComplex
from .volume import Volume

__all__ = [
    "BoundaryBlock",
    "BoundaryComponent",
    "BoundaryGluing",
    "Cell",
    "CopyRule",
    "CuspKind",
    "CuspSection",
    "CuspShape",
    "CuspSide",
    "CuspSquare",
    "FacetPairing",
    "FacetPairingRule",
    "Gluing",
    "GluingKind",
    "MirroredComplex",
    "QuotientComplex",
    "Volume",
]
