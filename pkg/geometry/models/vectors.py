from dataclasses import dataclass
from itertools import permutations, product
from typing import Tuple

Vec = Tuple[int, ...]
Vec4 = Tuple[int, int, int, int]


def dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def signed_permutations(base: Vec) -> list:
    """All distinct vectors obtained by permuting ``base`` and flipping signs."""
    points = set()
    for perm in permutations(base):
        nonzero = [i for i, a in enumerate(perm) if a != 0]
        for signs in product((1, -1), repeat=len(nonzero)):
            point = list(perm)
            for i, s in zip(nonzero, signs):
                point[i] = s * point[i]
            points.add(tuple(point))
    return sorted(points)


def sign_vectors(dimension: int) -> list:
    return sorted(product((1, -1), repeat=dimension))


def is_24cell_vertex(v: Vec) -> bool:
    """There always have to be two zero entries and two entries in {+1, -1}."""
    return (
        len(v) == 4
        and sum(1 for a in v if a == 0) == 2
        and all(a in (-1, 0, 1) for a in v)
    )


@dataclass(frozen=True)
class AffineSpan:
    """Affine hull of a point set, graded by its exact rank."""

    basepoint: Vec
    rank: int

    def __post_init__(self):
        if not 0 <= self.rank <= len(self.basepoint):
            raise ValueError(f"rank {self.rank} out of range for {self.basepoint}")
