"""
Simplicial isomorphism search between triangulations.
"""
import logging
from itertools import permutations
from typing import List, Optional

from triangulations.models import FaceGluing, Isomorphism, Triangulation

logger = logging.getLogger(__name__)

VERTEX_PERMUTATIONS = tuple(permutations(range(4)))


def relabel(triangulation: Triangulation, isomorphism: Isomorphism) -> Triangulation:
    """The image of ``triangulation`` under ``isomorphism``."""
    tet_map, perms = isomorphism.tet_map, isomorphism.perms
    gluings = []
    for g in triangulation.gluings:
        source, target = perms[g.tet], perms[g.other_tet]
        perm = [0] * 4
        for v in range(4):
            perm[source[v]] = target[g.perm[v]]
        gluings.append(
            FaceGluing(tet_map[g.tet], source[g.face], tet_map[g.other_tet], target[g.other_face], tuple(perm))
        )

    block_labels = None
    if triangulation.block_labels is not None:
        labels = [None] * triangulation.n
        for tet, image in enumerate(tet_map):
            labels[image] = triangulation.block_labels[tet]
        block_labels = tuple(labels)

    return Triangulation(
        n=triangulation.n,
        gluings=tuple(gluings),
        block_labels=block_labels,
        name=triangulation.name,
    )


def is_isomorphism(first: Triangulation, second: Triangulation, witness: Isomorphism) -> bool:
    if first.n != second.n or len(witness.tet_map) != first.n:
        return False
    return relabel(first, witness) == second


class _Search:
    def __init__(self, first: Triangulation, second: Triangulation):
        self.first = first
        self.second = second
        self.tet_map: List[Optional[int]] = [None] * first.n
        self.perms: List[Optional[tuple]] = [None] * first.n
        self.used = set()

    def _undo(self, trail):
        for tet in trail:
            self.used.discard(self.tet_map[tet])
            self.tet_map[tet] = None
            self.perms[tet] = None

    def _assign(self, tet, image, perm):
        """Map ``tet`` and everything the gluings force; ``None`` on conflict."""
        trail = []
        pending = [(tet, image, perm)]
        while pending:
            u, target, p = pending.pop()
            if self.tet_map[u] is not None:
                if (self.tet_map[u], self.perms[u]) != (target, p):
                    self._undo(trail)
                    return None
                continue
            if target in self.used:
                self._undo(trail)
                return None
            self.tet_map[u], self.perms[u] = target, p
            self.used.add(target)
            trail.append(u)

            for face in range(4):
                g1 = self.first.partner(u, face)
                g2 = self.second.partner(target, p[face])
                required = [0] * 4
                for v in range(4):
                    required[g1.perm[v]] = g2.perm[p[v]]
                pending.append((g1.other_tet, g2.other_tet, tuple(required)))
        return trail

    def run(self) -> bool:
        tet = next((i for i, image in enumerate(self.tet_map) if image is None), None)
        if tet is None:
            return True
        for image in range(self.second.n):
            if image in self.used:
                continue
            for perm in VERTEX_PERMUTATIONS:
                trail = self._assign(tet, image, perm)
                if trail is None:
                    continue
                if self.run():
                    return True
                self._undo(trail)
        return False


def isomorphic(first: Triangulation, second: Triangulation) -> Optional[Isomorphism]:
    """
    A simplicial isomorphism from ``first`` to ``second`` or ``None``.

    Backtracks over the image and vertex relabelling of the first unmapped
    tetrahedron; every other tetrahedron reachable through gluings is then
    forced.
    """
    if first.n != second.n:
        return None
    search = _Search(first, second)
    if not search.run():
        return None
    witness = Isomorphism(tuple(search.tet_map), tuple(search.perms))
    logger.debug(f"{first} ~ {second} via {witness}")
    return witness
