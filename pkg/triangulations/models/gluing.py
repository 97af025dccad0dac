from dataclasses import dataclass
from typing import Tuple

from core.exceptions import TriangulationError
from geometry.models import permutation_sign

VERTICES = (0, 1, 2, 3)


@dataclass(frozen=True, order=True)
class FaceGluing:
    """
    Face ``face`` of tetrahedron ``tet`` glued to face ``other_face`` of
    ``other_tet``. ``perm`` is the full vertex correspondence; it sends the
    vertex opposite ``face`` to the vertex opposite ``other_face``.
    """

    tet: int
    face: int
    other_tet: int
    other_face: int
    perm: Tuple[int, int, int, int]

    def __post_init__(self):
        if tuple(sorted(self.perm)) != VERTICES:
            raise TriangulationError(f"{self.perm} is not a permutation of the tetrahedron vertices")
        if self.face not in VERTICES or self.other_face not in VERTICES:
            raise TriangulationError(f"face index out of range in {self}")
        if self.tet < 0 or self.other_tet < 0:
            raise TriangulationError(f"negative tetrahedron index in {self}")
        if self.perm[self.face] != self.other_face:
            raise TriangulationError(
                f"gluing {self.source} -> {self.target} does not send face to face"
            )
        if self.source == self.target:
            raise TriangulationError(f"face {self.source} is glued to itself")

    @property
    def source(self) -> Tuple[int, int]:
        return (self.tet, self.face)

    @property
    def target(self) -> Tuple[int, int]:
        return (self.other_tet, self.other_face)

    @property
    def sign(self) -> int:
        return permutation_sign(self.perm)

    def face_images(self) -> Tuple[int, int, int]:
        """Images of the source face's vertices in ascending source order."""
        return tuple(self.perm[v] for v in VERTICES if v != self.face)

    def inverse(self) -> "FaceGluing":
        inverse_perm = [0] * 4
        for v, image in enumerate(self.perm):
            inverse_perm[image] = v
        return FaceGluing(self.other_tet, self.other_face, self.tet, self.face, tuple(inverse_perm))

    def canonical(self) -> "FaceGluing":
        """The direction of this gluing starting from the smaller (tet, face)."""
        return self if self.source < self.target else self.inverse()
