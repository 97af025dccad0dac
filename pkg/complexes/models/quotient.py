from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from core.union_find import UnionFind
from geometry.models import Face, FaceLattice, FacetColor, Label, SignedPerm

from .pairing import CopyRule, FacetPairingRule, Gluing

Cell = Tuple[int, Face]


def _meet(first: Label, second: Label) -> Label:
    position = next(i for i, (a, b) in enumerate(zip(first.entries, second.entries)) if a != b)
    return first.with_zero_at(position)


@dataclass(frozen=True, eq=False)
class QuotientComplex:
    """
    Copies of the 24-cell glued along facets.

    ``cells`` is the union-find over (copy, face) for faces of dimension 0 to
    3; its classes are the cells of the quotient, vertex classes being the
    ideal vertices (cusps). The 4-cells are never identified.
    """

    name: str
    base: FaceLattice
    orientations: Tuple[int, ...]
    green_pairs: Tuple[Tuple[int, int], ...]
    rules: Tuple[FacetPairingRule, ...]
    gluings: Tuple[Gluing, ...]
    cells: UnionFind = field(repr=False)

    @property
    def copies(self) -> Tuple[int, ...]:
        return tuple(range(1, len(self.orientations) + 1))

    def orientation(self, copy: int) -> int:
        return self.orientations[copy - 1]

    @cached_property
    def classes_by_dimension(self) -> Dict[int, List[Tuple[Cell, ...]]]:
        grouped: Dict[int, List[Tuple[Cell, ...]]] = {}
        for members in self.cells.classes():
            dimension = self.base.dimension_of[members[0][1]]
            grouped.setdefault(dimension, []).append(members)
        return grouped

    @property
    def cell_counts(self) -> Tuple[int, ...]:
        """Quotient cell counts in dimensions 1 to 4."""
        counts = [len(self.classes_by_dimension.get(k, ())) for k in (1, 2, 3)]
        return tuple(counts) + (len(self.copies),)

    @cached_property
    def boundary_facets(self) -> Tuple[Cell, ...]:
        """3-cells glued to nothing."""
        return tuple(
            members[0] for members in self.classes_by_dimension.get(3, ()) if len(members) == 1
        )

    @cached_property
    def boundary_labels(self) -> Tuple[Label, ...]:
        """Red/blue labels of the boundary 3-strata."""
        labels = set()
        for _, face in self.boundary_facets:
            for facet in self.base.incident_facets(face):
                if facet.vertices == face and facet.label is not None:
                    labels.add(facet.label)
        return tuple(sorted(labels))

    def pairing_for(self, label: Label) -> Optional[Tuple[Label, SignedPerm]]:
        """Partner and isometry of a facet under the per-copy pairing rules."""
        for rule in self.rules:
            if rule.copy_rule != CopyRule.PER_COPY:
                continue
            found = rule.partner(label)
            if found is not None:
                return found
        return None

    @cached_property
    def cusp_orbits(self) -> Tuple[Tuple[Label, ...], ...]:
        """Vertex classes as label orbits, ordered by size then labels."""
        orbits = set()
        for members in self.classes_by_dimension.get(0, ()):
            orbits.add(tuple(sorted({Label.of(self.base.vertices[face[0]]) for _, face in members})))
        return tuple(sorted(orbits, key=lambda orbit: (len(orbit), orbit)))

    @cached_property
    def two_stratum_orbits(self) -> Tuple[Tuple[Label, ...], ...]:
        """Orbits of the red/blue 2-strata labels under the gluings."""
        red_blue = {}
        for face in self.base.faces[2]:
            incident = self.base.incident_facets(face)
            if all(f.color != FacetColor.GREEN for f in incident):
                red_blue[face] = _meet(*(f.label for f in incident))

        uf = UnionFind(red_blue.values())
        for members in self.classes_by_dimension.get(2, ()):
            labels = [red_blue[face] for _, face in members if face in red_blue]
            for label in labels[1:]:
                uf.union(labels[0], label)
        return tuple(uf.classes())

    @cached_property
    def boundary_two_strata(self) -> Tuple[Label, ...]:
        """2-strata where two boundary 3-strata meet."""
        boundary = set(self.boundary_labels)
        return tuple(
            label
            for orbit in self.two_stratum_orbits
            for label in orbit
            if label.with_sign(label.zeros[0], 1) in boundary
            and label.with_sign(label.zeros[0], -1) in boundary
        )


class MirroredComplex(QuotientComplex):
    """Two oppositely oriented 24-cells glued along their green facets by the identity."""
