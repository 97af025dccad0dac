"""
Cusp cross-sections of S and of the quotient R.
"""
import logging
from typing import Dict, List, Optional, Tuple

from core.exceptions import ConstructionError, CuspGluingError, LabelError
from core.union_find import UnionFind
from geometry.models import FaceLattice, FacetColor, Label
from geometry.services.polytope import build_24cell, cusp_vertex, shared_2face
from geometry.services.symmetry import apply_to_label
from complexes.models import CuspKind, CuspSection, CuspShape, CuspSide, CuspSquare, QuotientComplex

logger = logging.getLogger(__name__)

# Signs at the two zero positions of a cusp, walking once around its square
SQUARE_ORDER = ((1, 1), (1, -1), (-1, -1), (-1, 1))


def cusp_square(cusp: Label, lattice: Optional[FaceLattice] = None) -> CuspSquare:
    """The square cross-section of ``cusp``: its red/blue facets in cyclic order."""
    if cusp.zero_count != 2:
        raise LabelError(f"{cusp} does not name a cusp")
    lattice = lattice or build_24cell()
    k, l = cusp.zeros

    sides = []
    for a, b in SQUARE_ORDER:
        label = cusp.with_sign(k, a).with_sign(l, b)
        sides.append(CuspSide(label=label, color=lattice.facet_by_label[label].color))
    corners = tuple(shared_2face(sides[i].label, sides[(i + 1) % 4].label) for i in range(4))

    vertex = cusp_vertex(cusp, lattice)
    incident = {f.label for f in lattice.incident_facets((vertex,)) if f.label is not None}
    if incident != {side.label for side in sides}:
        raise ConstructionError(f"sides of {cusp} do not match its incident facets")
    colors = [side.color for side in sides]
    if any(colors[i] == colors[(i + 1) % 4] for i in range(4)):
        raise ConstructionError(f"sides of {cusp} do not alternate in colour")

    return CuspSquare(cusp=cusp, sides=tuple(sides), corners=corners)


def cusp_section_S(cusp: Label, lattice: Optional[FaceLattice] = None) -> CuspSection:
    """
    Cross-section of a cusp of S: the vertex figure is a cube whose two green
    faces are opposite, and gluing the two copies along them closes the
    cube into a square times a circle of length 2.
    """
    lattice = lattice or build_24cell()
    square = cusp_square(cusp, lattice)
    vertex = cusp_vertex(cusp, lattice)
    green = [f for f in lattice.incident_facets((vertex,)) if f.color == FacetColor.GREEN]
    if len(green) != 2:
        raise ConstructionError(f"{cusp} lies on {len(green)} green facets")

    first, second = green
    shared = set(first.vertices) & set(second.vertices)
    if any(set(face) <= shared for face in lattice.faces[2]):
        raise ConstructionError(f"green faces of the cube at {cusp} are adjacent")
    return CuspSection(square=square, green_faces=(first.normal, second.normal), circle_length=2)


def _glue_squares(q: QuotientComplex, orbit: Tuple[Label, ...]) -> CuspShape:
    squares = {cusp: cusp_square(cusp, q.base) for cusp in orbit}

    matched: Dict[Tuple[Label, Label], Tuple[Label, Label]] = {}
    corners = UnionFind((cusp, corner) for cusp, square in squares.items() for corner in square.corners)
    for cusp, square in squares.items():
        for index in square.sides_of_color(FacetColor.BLUE):
            side = square.sides[index].label
            partner = q.pairing_for(side)
            if partner is None:
                raise CuspGluingError(f"cusp gluing inconsistent: blue side {side} of {cusp} is unmatched")
            other_side, m = partner
            other_cusp = apply_to_label(m, cusp)
            if other_cusp not in squares:
                raise CuspGluingError(f"cusp gluing inconsistent: {cusp} glued outside its orbit")
            if squares[other_cusp].sides[squares[other_cusp].side_index(other_side)].color != FacetColor.BLUE:
                raise CuspGluingError(f"cusp gluing inconsistent: {side} glued to a red side")
            matched[(cusp, side)] = (other_cusp, other_side)
            for corner in square.corners_of_side(index):
                corners.union((cusp, corner), (other_cusp, apply_to_label(m, corner)))

    for key, value in matched.items():
        if matched.get(value) != key:
            raise CuspGluingError(f"cusp gluing inconsistent: blue side {key[1]} of {key[0]} matched twice")

    # A cylinder has Euler characteristic 0 and two boundary circles of red sides
    faces = len(squares)
    edges = 2 * faces + len(matched) // 2
    euler = len(corners) - edges + faces
    circles = UnionFind(corners.find(c) for c in corners.parent)
    for cusp, square in squares.items():
        for index in square.sides_of_color(FacetColor.RED):
            a, b = square.corners_of_side(index)
            circles.union(corners.find((cusp, a)), corners.find((cusp, b)))
    if euler != 0 or len(circles) != 2:
        raise CuspGluingError(
            f"cusp gluing inconsistent: squares of {orbit[0]} give euler {euler} "
            f"with {len(circles)} boundary circles"
        )

    return CuspShape(kind=CuspKind.CYLINDER_X_CIRCLE, length=faces, cusps=orbit)


def cusp_shapes_R(q: QuotientComplex) -> List[CuspShape]:
    """Flat cylinder-times-circle cross-sections of the cusps, shortest first."""
    shapes = [_glue_squares(q, orbit) for orbit in q.cusp_orbits]
    logger.debug(f"{q.name}: cusp lengths {[s.length for s in shapes]}")
    return sorted(shapes, key=lambda s: (s.length, s.cusps))
