import logging
from collections import deque
from itertools import product
from typing import Optional, Sequence, Tuple

from triangulations.models import FaceGluing, Triangulation

logger = logging.getLogger(__name__)


def reverses_orientation(gluing: FaceGluing, orientation: Sequence[int]) -> bool:
    """
    A gluing reverses orientation when o * o' * sign(perm) == -1, so the
    identity gluing of two oppositely oriented tetrahedra passes.
    """
    return orientation[gluing.tet] * orientation[gluing.other_tet] * gluing.sign == -1


def check_orientable(triangulation: Triangulation) -> Optional[Tuple[int, ...]]:
    """
    An orientation (+1/-1 per tetrahedron) making every gluing orientation
    reversing, or ``None`` if there is none. The first tetrahedron of each
    connected piece is oriented +1.
    """
    orientation = [0] * triangulation.n
    for start in range(triangulation.n):
        if orientation[start]:
            continue
        orientation[start] = 1
        queue = deque([start])
        while queue:
            tet = queue.popleft()
            for face in range(4):
                gluing = triangulation.partner(tet, face)
                required = -orientation[tet] * gluing.sign
                current = orientation[gluing.other_tet]
                if current == 0:
                    orientation[gluing.other_tet] = required
                    queue.append(gluing.other_tet)
                elif current != required:
                    logger.debug(f"{triangulation}: gluing {gluing} preserves orientation")
                    return None
    return tuple(orientation)


def brute_force_orientable(triangulation: Triangulation) -> bool:
    """Exhaustive search over all 2^n orientation assignments."""
    return any(
        all(reverses_orientation(g, orientation) for g in triangulation.gluings)
        for orientation in product((1, -1), repeat=triangulation.n)
    )
