from dataclasses import dataclass
from typing import Tuple

from geometry.models import Label, SignedPerm


@dataclass(frozen=True)
class BoundaryBlock:
    """A red 3-stratum (a Minsky block) with its 2-strata and cusps."""

    label: Label
    two_strata: Tuple[Label, ...]
    cusps: Tuple[Label, ...]


@dataclass(frozen=True)
class BoundaryGluing:
    block: Label
    face: Label
    other_block: Label
    other_face: Label
    isometry: SignedPerm


@dataclass(frozen=True)
class BoundaryComponent:
    blocks: Tuple[BoundaryBlock, ...]
    gluings: Tuple[BoundaryGluing, ...]

    @property
    def labels(self) -> Tuple[Label, ...]:
        return tuple(block.label for block in self.blocks)

    @property
    def octahedra(self) -> int:
        return 2 * len(self.blocks)

    @property
    def is_small(self) -> bool:
        return len(self.blocks) == 1
