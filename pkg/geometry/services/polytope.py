"""
Exact face lattices of the 24-cell and of the octahedron.

Facets are taken from their supporting hyperplanes, the remaining faces are
obtained by closing the facet vertex sets under intersection, and each face
is graded by the affine rank of its vertices.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from core.exceptions import ConstructionError, LabelError
from geometry.models import Face, FaceLattice, Facet, FacetColor, Label, Vec
from geometry.models.vectors import dot, is_24cell_vertex, sign_vectors, signed_permutations

from .linear_algebra import affine_span

logger = logging.getLogger(__name__)

CELL24_F_VECTOR = (24, 96, 96, 24)
OCTAHEDRON_F_VECTOR = (6, 12, 8)


def parity_color(normal: Vec) -> FacetColor:
    minus = sum(1 for a in normal if a < 0)
    return FacetColor.RED if minus % 2 == 0 else FacetColor.BLUE


def _facet(vertices: Sequence[Vec], normal: Vec, offset: int, color: FacetColor) -> Facet:
    members = tuple(i for i, v in enumerate(vertices) if dot(normal, v) == offset)
    return Facet(normal=normal, offset=offset, vertices=members, color=color)


def close_under_intersection(facets: Sequence[Face]) -> set:
    """All non-empty intersections of facet vertex sets."""
    facet_sets = [frozenset(f) for f in facets]
    faces = set(facet_sets)
    frontier = list(facet_sets)
    while frontier:
        discovered = []
        for face in frontier:
            for facet in facet_sets:
                meet = face & facet
                if meet and meet not in faces:
                    faces.add(meet)
                    discovered.append(meet)
        frontier = discovered
    return faces


def grade_faces(vertices: Sequence[Vec], facets: Sequence[Facet]) -> Dict[int, Tuple[Face, ...]]:
    graded: Dict[int, list] = {}
    for face in close_under_intersection([f.vertices for f in facets]):
        members = tuple(sorted(face))
        rank = affine_span([vertices[i] for i in members]).rank
        graded.setdefault(rank, []).append(members)
    return {k: tuple(sorted(graded[k])) for k in sorted(graded)}


def _check_counts(name: str, lattice: FaceLattice, expected: Tuple[int, ...]):
    for dimension, count in enumerate(expected):
        actual = lattice.count(dimension)
        if actual != count:
            raise ConstructionError(
                f"{name}: expected {count} faces of dimension {dimension}, found {actual}"
            )


@lru_cache(maxsize=None)
def build_24cell() -> FaceLattice:
    """
    The 24-cell with vertices the permutations of (+-1, +-1, 0, 0).

    Facet normals are the dual vertices scaled by 2: coordinate facets
    ``x_i = +-1`` have normal ``+-2 e_i`` and are green, the facets
    ``+-x1 +-x2 +-x3 +-x4 = 2`` have a sign vector as normal and are red or
    blue by the parity of their minus signs.
    """
    vertices = tuple(signed_permutations((1, 1, 0, 0)))
    for vertex in vertices:
        if not is_24cell_vertex(vertex):
            raise ConstructionError(f"24-cell: {vertex} is not of the form (+-1, +-1, 0, 0)")

    facets = []
    for normal in signed_permutations((2, 0, 0, 0)):
        facets.append(_facet(vertices, normal, 2, FacetColor.GREEN))
    for normal in sign_vectors(4):
        facets.append(_facet(vertices, normal, 2, parity_color(normal)))
    facets.sort(key=lambda f: f.normal)

    for facet in facets:
        if len(facet.vertices) != 6:
            raise ConstructionError(
                f"24-cell: facet {facet.normal} has {len(facet.vertices)} vertices, expected 6"
            )

    faces = grade_faces(vertices, facets)
    faces[0] = tuple((i,) for i in range(len(vertices)))
    lattice = FaceLattice(vertices=vertices, faces=dict(sorted(faces.items())), facets=tuple(facets))

    _check_counts("24-cell", lattice, CELL24_F_VECTOR)
    for color in FacetColor:
        count = len(lattice.facets_of_color(color))
        if count != 8:
            raise ConstructionError(f"24-cell: expected 8 {color.value} facets, found {count}")

    logger.debug(f"Built 24-cell with f-vector {lattice.f_vector}")
    return lattice


@lru_cache(maxsize=None)
def build_octahedron() -> FaceLattice:
    """The octahedron with its triangles checkerboard coloured red and blue."""
    vertices = tuple(signed_permutations((1, 0, 0)))
    facets = sorted(
        (_facet(vertices, normal, 1, parity_color(normal)) for normal in sign_vectors(3)),
        key=lambda f: f.normal,
    )

    faces = grade_faces(vertices, facets)
    faces[0] = tuple((i,) for i in range(len(vertices)))
    lattice = FaceLattice(vertices=vertices, faces=dict(sorted(faces.items())), facets=tuple(facets))

    _check_counts("octahedron", lattice, OCTAHEDRON_F_VECTOR)
    logger.debug(f"Built octahedron with f-vector {lattice.f_vector}")
    return lattice


def _require_signs(label: Label):
    if label.zero_count:
        raise LabelError(f"{label} is not a facet label")


def shared_2face(first: Label, second: Label) -> Optional[Label]:
    """
    The 2-stratum shared by two red/blue facets, obtained by replacing the
    single differing sign with a 0; ``None`` when they differ elsewhere.
    """
    _require_signs(first)
    _require_signs(second)
    differing = [i for i, (a, b) in enumerate(zip(first.entries, second.entries)) if a != b]
    if len(differing) != 1:
        return None
    return first.with_zero_at(differing[0])


def two_stratum_vertices(label: Label, lattice: Optional[FaceLattice] = None) -> Face:
    """Vertex set of the triangle named by a one-zero label."""
    if label.zero_count != 1:
        raise LabelError(f"{label} does not name a 2-stratum")
    lattice = lattice or build_24cell()
    position = label.zeros[0]
    first = lattice.facet_by_label[label.with_sign(position, 1)]
    second = lattice.facet_by_label[label.with_sign(position, -1)]
    return tuple(sorted(set(first.vertices) & set(second.vertices)))


def cusp_vertex(label: Label, lattice: Optional[FaceLattice] = None) -> int:
    """Index of the 24-cell vertex named by a two-zero label."""
    if label.zero_count != 2:
        raise LabelError(f"{label} does not name a cusp")
    lattice = lattice or build_24cell()
    return lattice.vertex_index[label.entries]


def vertex_label(lattice: FaceLattice, index: int) -> Label:
    return Label.of(lattice.vertices[index])


def face_label(lattice: FaceLattice, face: Face) -> Optional[Label]:
    """
    Label of a red/blue facet, of a triangle shared by a red and a blue facet,
    or of a vertex; ``None`` for faces that meet a green facet.
    """
    if len(face) == 1:
        return vertex_label(lattice, face[0])
    incident = lattice.incident_facets(face)
    if any(f.color == FacetColor.GREEN for f in incident):
        return None
    if len(incident) == 1:
        return incident[0].label
    if len(incident) == 2:
        return shared_2face(incident[0].label, incident[1].label)
    return None


@dataclass(frozen=True)
class TetrahedronCorrespondence:
    """
    Truncating a tetrahedron yields an octahedron: tetrahedron vertices become
    red triangles, edges become octahedron vertices, faces become blue
    triangles.
    """

    red_faces: Tuple[Vec, ...]
    edge_vertices: Dict[Tuple[int, int], int]
    blue_faces: Tuple[Vec, ...]

    @property
    def cardinalities(self) -> Tuple[int, int, int]:
        return len(self.red_faces), len(self.edge_vertices), len(self.blue_faces)


def octahedron_tetrahedron_correspondence() -> TetrahedronCorrespondence:
    octahedron = build_octahedron()
    red = [f for f in octahedron.facets if f.color == FacetColor.RED]
    red_faces = tuple(f.normal for f in red)

    edge_vertices = {}
    for i, j in combinations(range(4), 2):
        meet = set(red[i].vertices) & set(red[j].vertices)
        if len(meet) != 1:
            raise ConstructionError(f"red faces {i} and {j} meet in {len(meet)} vertices")
        edge_vertices[(i, j)] = meet.pop()

    # The face opposite tetrahedron vertex l sits across from red face l
    blue_faces = tuple(tuple(-a for a in normal) for normal in red_faces)
    for normal in blue_faces:
        facet = octahedron.facet_by_normal.get(normal)
        if facet is None or facet.color != FacetColor.BLUE:
            raise ConstructionError(f"{normal} is not a blue face of the octahedron")

    tables = TetrahedronCorrespondence(red_faces, edge_vertices, blue_faces)
    for (i, j), vertex in edge_vertices.items():
        for face in range(4):
            on_face = vertex in octahedron.facet_by_normal[blue_faces[face]].vertices
            if on_face != (face not in (i, j)):
                raise ConstructionError(
                    f"edge {i}{j} and face {face} break the incidence correspondence"
                )
    return tables
