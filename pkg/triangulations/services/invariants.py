"""
Invariants of the manifold built from Minsky blocks along a triangulation.
"""
import logging
from itertools import permutations
from typing import Tuple

from core.exceptions import ConstructionError, OrientabilityError, TriangulationError
from geometry.models import FacetColor
from geometry.services.polytope import build_octahedron, octahedron_tetrahedron_correspondence
from geometry.services.symmetry import hyperoctahedral_group
from geometry.services.volumes import octahedron_volume
from triangulations.models import CuspTorus, EdgeClass, MTInvariants, PresentationSummary, Triangulation

from .edges import edge_classes
from .orientation import check_orientable

logger = logging.getLogger(__name__)

# Face pairs {0,1} and {2,3} meet along the edges with these endpoints
SMALL_CUSP_ENDPOINTS = ((2, 3), (0, 1))


def mt_invariants(triangulation: Triangulation) -> MTInvariants:
    """
    Cusps, cusp tori and volume of the block manifold: one cusp per edge
    class, a valence k class gives a k x 2 torus, and each tetrahedron
    contributes one block of two ideal octahedra.
    """
    if check_orientable(triangulation) is None:
        raise OrientabilityError(f"{triangulation} is not orientable")
    classes = edge_classes(triangulation)
    tori = tuple(CuspTorus(edge_class=i, length=c.valence) for i, c in enumerate(classes))
    octahedra = 2 * triangulation.n
    return MTInvariants(
        cusps=len(classes),
        tori=tori,
        octahedra=octahedra,
        volume=octahedra * octahedron_volume(),
    )


def presentation_summary(triangulation: Triangulation) -> PresentationSummary:
    unframed = len(edge_classes(triangulation, check_links=False))
    return PresentationSummary(
        genus=triangulation.n + 1,
        framed=triangulation.n + 1,
        unframed=unframed,
    )


def small_cusp_edges(triangulation: Triangulation) -> Tuple[EdgeClass, ...]:
    """
    Edge classes through the edges where faces {0,1} or faces {2,3} meet;
    these are the valence two classes of the large boundary triangulation.
    """
    if triangulation.block_labels is None:
        raise TriangulationError(f"{triangulation} carries no face numbering")

    classes = edge_classes(triangulation)
    selected = tuple(
        c for c in classes if any(c.contains_endpoints(e) for e in SMALL_CUSP_ENDPOINTS)
    )
    if any(c.valence != 2 for c in selected):
        raise TriangulationError(
            f"small cusp edges have valences {[c.valence for c in selected]}"
        )
    if set(selected) != {c for c in classes if c.valence == 2}:
        raise TriangulationError("small cusp edges are not exactly the valence two classes")
    return selected


def block_symmetry_order() -> int:
    """
    Order of the group of colour-preserving symmetries of the octahedron,
    checked to be in bijection with the symmetries of the tetrahedron through
    the truncation correspondence.
    """
    octahedron = build_octahedron()
    tables = octahedron_tetrahedron_correspondence()
    red_index = {normal: i for i, normal in enumerate(tables.red_faces)}
    blue_index = {normal: i for i, normal in enumerate(tables.blue_faces)}

    induced = set()
    for m in hyperoctahedral_group(3):
        images = [m(normal) for normal in tables.red_faces]
        if any(octahedron.facet_by_normal[n].color != FacetColor.RED for n in images):
            continue
        sigma = tuple(red_index[n] for n in images)

        for (i, j), vertex in tables.edge_vertices.items():
            image = octahedron.vertex_index[m(octahedron.vertices[vertex])]
            if image != tables.edge_vertices[tuple(sorted((sigma[i], sigma[j])))]:
                raise ConstructionError(f"{m} breaks the edge correspondence at {i}{j}")
        for face, normal in enumerate(tables.blue_faces):
            if blue_index.get(m(normal)) != sigma[face]:
                raise ConstructionError(f"{m} breaks the face correspondence at {face}")
        induced.add(sigma)

    tetrahedron_symmetries = set(permutations(range(4)))
    if induced != tetrahedron_symmetries:
        raise ConstructionError(
            f"{len(induced)} colour-preserving symmetries do not match the tetrahedron's"
        )
    logger.debug(f"Block symmetry group has order {len(induced)}")
    return len(induced)


def colour_preserving_symmetries() -> int:
    octahedron = build_octahedron()
    red = [f.normal for f in octahedron.facets_of_color(FacetColor.RED)]
    return sum(
        1
        for m in hyperoctahedral_group(3)
        if all(octahedron.facet_by_normal[m(n)].color == FacetColor.RED for n in red)
    )
