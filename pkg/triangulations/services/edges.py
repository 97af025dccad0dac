import logging
from itertools import combinations
from typing import List, Sequence

from core.exceptions import NonManifoldEdgeError
from core.union_find import UnionFind
from triangulations.models import VERTICES, EdgeClass, EdgeSlot, Triangulation

logger = logging.getLogger(__name__)

EDGES = tuple(combinations(VERTICES, 2))


def edge_slots(triangulation: Triangulation) -> List[EdgeSlot]:
    return [(tet, edge) for tet in range(triangulation.n) for edge in EDGES]


def _link_walk(triangulation: Triangulation, slot: EdgeSlot) -> List[EdgeSlot]:
    """
    Walk around the edge of ``slot`` crossing one face at a time. Each state
    is (tet, a, b, exit) with the edge's endpoints ordered as they were
    carried along and ``exit`` the vertex opposite the face crossed next.
    """
    tet, (a, b) = slot
    exit_vertex = max(v for v in VERTICES if v not in (a, b))
    start = (tet, a, b, exit_vertex)
    state = start
    visited = []
    limit = 24 * triangulation.n
    while True:
        tet, a, b, exit_vertex = state
        visited.append((tet, tuple(sorted((a, b)))))
        gluing = triangulation.partner(tet, exit_vertex)
        na, nb, entered = gluing.perm[a], gluing.perm[b], gluing.other_face
        remaining = next(v for v in VERTICES if v not in (na, nb, entered))
        state = (gluing.other_tet, na, nb, remaining)
        if state == start:
            return visited
        if len(visited) > limit:
            raise NonManifoldEdgeError(f"edge link of {slot} does not close")


def edge_classes(triangulation: Triangulation, check_links: bool = True) -> List[EdgeClass]:
    """
    Edge classes ordered by their least slot. With ``check_links`` every
    class must have a link that is a single cycle through each of its slots
    exactly once; otherwise ``NonManifoldEdgeError`` is raised.
    """
    uf = UnionFind(edge_slots(triangulation))
    for gluing in triangulation.gluings:
        face_vertices = [v for v in VERTICES if v != gluing.face]
        for a, b in combinations(face_vertices, 2):
            image = tuple(sorted((gluing.perm[a], gluing.perm[b])))
            uf.union((gluing.tet, (a, b)), (gluing.other_tet, image))

    classes = [EdgeClass(slots=members) for members in uf.classes()]
    if check_links:
        for edge_class in classes:
            walk = _link_walk(triangulation, edge_class.slots[0])
            if len(walk) != edge_class.valence or set(walk) != set(edge_class.slots):
                raise NonManifoldEdgeError(
                    f"edge class of {edge_class.slots[0]} has valence {edge_class.valence} "
                    f"but its link visits {len(walk)} slots"
                )

    logger.debug(f"{triangulation}: valences {valences(classes)}")
    return classes


def valences(classes: Sequence[EdgeClass]) -> List[int]:
    return sorted(c.valence for c in classes)
