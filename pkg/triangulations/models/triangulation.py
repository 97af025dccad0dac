from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Tuple

from core.exceptions import TriangulationError
from geometry.models import Label

from .gluing import VERTICES, FaceGluing


@dataclass(frozen=True)
class Triangulation:
    """
    ``n`` tetrahedra with a complete set of face pairings.

    Tetrahedra are indexed from 0 here and from 1 in the text format. Gluings
    are stored canonically: each starts from the smaller (tet, face) and the
    tuple is sorted. ``block_labels`` records which boundary block each
    tetrahedron came from; face ``k`` of such a tetrahedron carries the
    2-stratum with a zero in position ``k``.
    """

    n: int
    gluings: Tuple[FaceGluing, ...]
    block_labels: Optional[Tuple[Label, ...]] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise TriangulationError("a triangulation needs at least one tetrahedron")
        gluings = tuple(sorted(g.canonical() for g in self.gluings))
        object.__setattr__(self, "gluings", gluings)

        if len(gluings) != 2 * self.n:
            raise TriangulationError(
                f"{self.n} tetrahedra need {2 * self.n} gluings, got {len(gluings)}"
            )
        seen = set()
        for gluing in gluings:
            for tet, face in (gluing.source, gluing.target):
                if tet >= self.n:
                    raise TriangulationError(f"tetrahedron {tet + 1} out of range")
                if (tet, face) in seen:
                    raise TriangulationError(f"face {tet + 1}.{face} appears in two gluings")
                seen.add((tet, face))

        if self.block_labels is not None and len(self.block_labels) != self.n:
            raise TriangulationError("one block label is needed per tetrahedron")

    @cached_property
    def partners(self) -> Dict[Tuple[int, int], FaceGluing]:
        """Every face mapped to its gluing, oriented away from that face."""
        result = {}
        for gluing in self.gluings:
            result[gluing.source] = gluing
            result[gluing.target] = gluing.inverse()
        return result

    def partner(self, tet: int, face: int) -> FaceGluing:
        return self.partners[(tet, face)]

    @property
    def faces(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((tet, face) for tet in range(self.n) for face in VERTICES)

    def __str__(self):
        return self.name or f"triangulation with {self.n} tetrahedra"
