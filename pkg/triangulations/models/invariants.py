from dataclasses import dataclass
from typing import Tuple

EdgeSlot = Tuple[int, Tuple[int, int]]


@dataclass(frozen=True)
class EdgeClass:
    """Edge slots (tet, sorted vertex pair) identified by the face gluings."""

    slots: Tuple[EdgeSlot, ...]

    @property
    def valence(self) -> int:
        return len(self.slots)

    def contains_endpoints(self, endpoints: Tuple[int, int]) -> bool:
        return any(pair == endpoints for _, pair in self.slots)


@dataclass(frozen=True)
class CuspTorus:
    """Flat cusp torus of one edge class, as (length, width) up to homothety."""

    edge_class: int
    length: int
    width: int = 2

    @property
    def dimensions(self) -> Tuple[int, int]:
        return (self.length, self.width)


@dataclass(frozen=True)
class MTInvariants:
    cusps: int
    tori: Tuple[CuspTorus, ...]
    octahedra: int
    volume: float

    @property
    def torus_dimensions(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(t.dimensions for t in self.tori))


@dataclass(frozen=True)
class PresentationSummary:
    """
    Handlebody genus and partially framed link component counts: framed
    components all carry framing 0, unframed ones correspond to cusps.
    """

    genus: int
    framed: int
    unframed: int

    @property
    def framings(self) -> Tuple[int, ...]:
        return (0,) * self.framed
