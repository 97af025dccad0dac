from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Optional, Tuple

from .label import Label
from .vectors import Vec

Face = Tuple[int, ...]


class FacetColor(str, Enum):
    RED = "red"
    GREEN = "green"
    BLUE = "blue"


@dataclass(frozen=True)
class Facet:
    """Top-dimensional face on the hyperplane ``normal . x == offset``."""

    normal: Vec
    offset: int
    vertices: Face
    color: FacetColor

    @property
    def label(self) -> Optional[Label]:
        """Sign label of a red or blue facet; green facets carry none."""
        if self.color == FacetColor.GREEN or len(self.normal) != 4:
            return None
        return Label.of(self.normal)


@dataclass(frozen=True)
class FaceLattice:
    """
    Faces of a convex polytope graded by dimension. Every face is the sorted
    tuple of its vertex indices; ``faces[k]`` lists the k-faces in sorted order.
    """

    vertices: Tuple[Vec, ...]
    faces: Dict[int, Tuple[Face, ...]]
    facets: Tuple[Facet, ...] = field(default=())

    @property
    def top_dimension(self) -> int:
        return max(self.faces)

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces[k]) for k in sorted(self.faces))

    def count(self, dimension: int) -> int:
        return len(self.faces.get(dimension, ()))

    @cached_property
    def vertex_index(self) -> Dict[Vec, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def facet_by_normal(self) -> Dict[Vec, Facet]:
        return {facet.normal: facet for facet in self.facets}

    @cached_property
    def facet_by_label(self) -> Dict[Label, Facet]:
        return {facet.label: facet for facet in self.facets if facet.label is not None}

    @cached_property
    def dimension_of(self) -> Dict[Face, int]:
        return {face: k for k, faces in self.faces.items() for face in faces}

    def coordinates(self, face: Face) -> Tuple[Vec, ...]:
        return tuple(self.vertices[i] for i in face)

    def incident_facets(self, face: Face) -> Tuple[Facet, ...]:
        members = set(face)
        return tuple(f for f in self.facets if members <= set(f.vertices))

    def faces_within(self, face: Face) -> Tuple[Face, ...]:
        """Every face contained in ``face`` (including itself), by dimension."""
        members = set(face)
        return tuple(
            sub
            for k in sorted(self.faces)
            for sub in self.faces[k]
            if set(sub) <= members
        )

    def map_face(self, isometry, face: Face) -> Face:
        return tuple(sorted(self.vertex_index[isometry(self.vertices[i])] for i in face))

    def facets_of_color(self, color: FacetColor) -> Tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.color == color)
