from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from geometry.models import Label, SignedPerm, Vec


class CopyRule(str, Enum):
    PER_COPY = "per-copy"
    CROSS_COPY = "cross-copy"


class GluingKind(str, Enum):
    GREEN = "green"
    PAIRING = "pairing"
    DOUBLE = "double"


@dataclass(frozen=True)
class FacetPairing:
    source: Label
    target: Label
    isometry: SignedPerm

    def partner(self, label: Label) -> Optional[Tuple[Label, SignedPerm]]:
        if label == self.source:
            return self.target, self.isometry
        if label == self.target:
            return self.source, self.isometry.inverse()
        return None


@dataclass(frozen=True)
class FacetPairingRule:
    """
    Facet pairings applied in every copy (``PER_COPY``) or from copy ``c`` to
    copy ``c + copy_offset`` (``CROSS_COPY``).
    """

    name: str
    pairs: Tuple[FacetPairing, ...]
    copy_rule: CopyRule = CopyRule.PER_COPY
    copy_offset: int = 0

    @property
    def labels(self) -> Tuple[Label, ...]:
        touched = [p.source for p in self.pairs] + [p.target for p in self.pairs]
        return tuple(sorted(touched))

    def partner(self, label: Label) -> Optional[Tuple[Label, SignedPerm]]:
        for pair in self.pairs:
            found = pair.partner(label)
            if found is not None:
                return found
        return None


@dataclass(frozen=True)
class Gluing:
    """One facet of one copy glued onto a facet of a copy by ``isometry``."""

    source_copy: int
    source: Vec
    target_copy: int
    target: Vec
    isometry: SignedPerm
    kind: GluingKind

    @property
    def tag(self) -> str:
        if self.kind == GluingKind.PAIRING:
            return self.isometry.name
        return self.kind.value
