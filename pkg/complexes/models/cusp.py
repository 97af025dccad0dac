from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from geometry.models import FacetColor, Label, Vec


@dataclass(frozen=True)
class CuspSide:
    label: Label
    color: FacetColor


@dataclass(frozen=True)
class CuspSquare:
    """
    Cross-section square of a cusp: four red/blue sides in cyclic order and
    ``corners[i]`` the 2-stratum between ``sides[i]`` and ``sides[i + 1]``.
    """

    cusp: Label
    sides: Tuple[CuspSide, CuspSide, CuspSide, CuspSide]
    corners: Tuple[Label, Label, Label, Label]

    def sides_of_color(self, color: FacetColor) -> Tuple[int, ...]:
        return tuple(i for i, side in enumerate(self.sides) if side.color == color)

    def side_index(self, label: Label) -> int:
        return next(i for i, side in enumerate(self.sides) if side.label == label)

    def corners_of_side(self, index: int) -> Tuple[Label, Label]:
        return self.corners[(index - 1) % 4], self.corners[index]


@dataclass(frozen=True)
class CuspSection:
    """Square times circle; the circle runs through both copies across the green faces."""

    square: CuspSquare
    green_faces: Tuple[Vec, Vec]
    circle_length: int = 2


class CuspKind(str, Enum):
    CYLINDER_X_CIRCLE = "cylinder x circle"
    TORUS = "torus"


@dataclass(frozen=True)
class CuspShape:
    kind: CuspKind
    length: int
    cusps: Tuple[Label, ...]
    width: int = 1
    circle_length: int = 2
