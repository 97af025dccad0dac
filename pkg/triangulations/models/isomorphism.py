from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Isomorphism:
    """Tetrahedron ``i`` goes to ``tet_map[i]`` with vertices relabelled by ``perms[i]``."""

    tet_map: Tuple[int, ...]
    perms: Tuple[Tuple[int, int, int, int], ...]

    @classmethod
    def identity(cls, n: int) -> "Isomorphism":
        return cls(tuple(range(n)), ((0, 1, 2, 3),) * n)

    def inverse(self) -> "Isomorphism":
        n = len(self.tet_map)
        tet_map = [0] * n
        perms = [None] * n
        for tet, image in enumerate(self.tet_map):
            tet_map[image] = tet
            inverse = [0] * 4
            for v, w in enumerate(self.perms[tet]):
                inverse[w] = v
            perms[image] = tuple(inverse)
        return Isomorphism(tuple(tet_map), tuple(perms))
