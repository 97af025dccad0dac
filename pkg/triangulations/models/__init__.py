from .gluing import VERTICES, FaceGluing
from .invariants import CuspTorus, EdgeClass, EdgeSlot, MTInvariants, PresentationSummary
from .isomorphism import Isomorphism
from .triangulation import Triangulation

__all__ = [
    "VERTICES",
    "CuspTorus",
    "EdgeClass",
    "EdgeSlot",
    "FaceGluing",
    "Isomorphism",
    "MTInvariants",
    "PresentationSummary",
    "Triangulation",
]
