from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from core.exceptions import LabelError

SYMBOLS = {1: "+", -1: "-", 0: "0"}
PARSE_SYMBOLS = {"+": 1, "-": -1, "−": -1, "0": 0}


class StratumKind(str, Enum):
    STRATUM_3 = "3-stratum"
    STRATUM_2 = "2-stratum"
    CUSP = "cusp"


KIND_BY_ZEROS = {
    0: StratumKind.STRATUM_3,
    1: StratumKind.STRATUM_2,
    2: StratumKind.CUSP,
}


@dataclass(frozen=True, order=True)
class Label:
    """
    A 4-tuple over {+, -, 0}. Sign tuples name red/blue facets (3-strata),
    one zero names the red/blue 2-face where two facets differ, two zeros name a
    vertex (cusp). Tuples with more zeros are valid labels but name no stratum.
    """

    entries: Tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.entries) != 4 or any(e not in SYMBOLS for e in self.entries):
            raise LabelError(f"label entries must be four of +1, -1, 0; got {self.entries}")

    @classmethod
    def parse(cls, text: str) -> "Label":
        symbols = [s for s in text.strip().strip("()").replace(" ", "").split(",") if s]
        try:
            return cls(tuple(PARSE_SYMBOLS[s] for s in symbols))
        except KeyError as exc:
            raise LabelError(f"unknown symbol {exc} in label {text!r}") from exc

    @classmethod
    def of(cls, vector) -> "Label":
        """Label of the signs of an integer vector."""
        return cls(tuple((a > 0) - (a < 0) for a in vector))

    @property
    def zero_count(self) -> int:
        return sum(1 for e in self.entries if e == 0)

    @property
    def zeros(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e == 0)

    @property
    def kind(self) -> StratumKind:
        if self.zero_count not in KIND_BY_ZEROS:
            raise LabelError(f"label {self} has more than two zero entries")
        return KIND_BY_ZEROS[self.zero_count]

    def with_zero_at(self, position: int) -> "Label":
        entries = list(self.entries)
        entries[position] = 0
        return Label(tuple(entries))

    def with_sign(self, position: int, sign: int) -> "Label":
        entries = list(self.entries)
        entries[position] = sign
        return Label(tuple(entries))

    def flipped_at(self, position: int) -> "Label":
        entries = list(self.entries)
        entries[position] = -entries[position]
        return Label(tuple(entries))

    def restricts(self, other: "Label") -> bool:
        """True when every non-zero entry of ``self`` agrees with ``other``."""
        return all(a == 0 or a == b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Label":
        return Label(tuple(-e for e in self.entries))

    def __str__(self):
        return "(" + ",".join(SYMBOLS[e] for e in self.entries) + ")"
