"""
Seeded random triangulations and relabellings.
"""
import random
from typing import Optional

from triangulations.models import VERTICES, FaceGluing, Isomorphism, Triangulation


def random_triangulation(n: int, rng: Optional[random.Random] = None) -> Triangulation:
    """A random complete face pairing of ``n`` tetrahedra with random vertex maps."""
    rng = rng or random.Random()
    faces = [(tet, face) for tet in range(n) for face in VERTICES]
    rng.shuffle(faces)

    gluings = []
    for (tet, face), (other_tet, other_face) in zip(faces[0::2], faces[1::2]):
        targets = [v for v in VERTICES if v != other_face]
        rng.shuffle(targets)
        perm = [0] * 4
        perm[face] = other_face
        for v, image in zip((v for v in VERTICES if v != face), targets):
            perm[v] = image
        gluings.append(FaceGluing(tet, face, other_tet, other_face, tuple(perm)))

    return Triangulation(n=n, gluings=tuple(gluings), name=f"random-{n}")


def random_relabeling(n: int, rng: Optional[random.Random] = None) -> Isomorphism:
    rng = rng or random.Random()
    tet_map = list(range(n))
    rng.shuffle(tet_map)
    perms = []
    for _ in range(n):
        perm = list(VERTICES)
        rng.shuffle(perm)
        perms.append(tuple(perm))
    return Isomorphism(tuple(tet_map), tuple(perms))
