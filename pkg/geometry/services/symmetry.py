"""
Signed-permutation isometries acting on coordinates, labels and facets.
"""
import logging
from typing import Dict, Iterable, List

from sympy.combinatorics import PermutationGroup

from core.exceptions import ConstructionError
from geometry.models import FaceLattice, FacetColor, Label, SignedPerm, Vec

logger = logging.getLogger(__name__)


# Pairing and closing maps of the construction
F = SignedPerm((0, 1, 3, 2), (1, 1, 1, 1), name="F")
G = SignedPerm((1, 0, 2, 3), (1, 1, 1, 1), name="G")
K = SignedPerm((1, 0, 2, 3), (-1, -1, 1, 1), name="K")
IDENTITY = SignedPerm.identity()


def apply_isometry(m: SignedPerm, v: Vec) -> Vec:
    return m(v)


def apply_to_label(m: SignedPerm, label: Label) -> Label:
    # Zeros stay zeros under sign flips, so the entries transform like a vector
    return Label(m(label.entries))


def hyperoctahedral_generators(degree: int = 4) -> List[SignedPerm]:
    """Reflections in the coordinate hyperplanes and all coordinate transpositions."""
    reflections = [SignedPerm.reflection(axis, degree) for axis in range(degree)]
    transpositions = [
        SignedPerm.transposition(i, j, degree)
        for i in range(degree)
        for j in range(i + 1, degree)
    ]
    return reflections + transpositions


def generate_group(generators: Iterable[SignedPerm]) -> List[SignedPerm]:
    """All elements of the group generated by ``generators``, enumerated on the signed axes."""
    generators = list(generators)
    if not generators:
        return [SignedPerm.identity()]

    degree = generators[0].degree
    group = PermutationGroup([g.as_axis_permutation() for g in generators])
    elements = [SignedPerm.from_axis_permutation(p, degree) for p in group.generate()]
    if len(elements) != group.order():
        raise ConstructionError(
            f"enumerated {len(elements)} elements of a group of order {group.order()}"
        )

    logger.debug(f"Generated group of order {group.order()} from {len(generators)} generators")
    return elements


def hyperoctahedral_group(degree: int = 4) -> List[SignedPerm]:
    return generate_group(hyperoctahedral_generators(degree))


def map_facet_normal(m: SignedPerm, normal: Vec) -> Vec:
    # Signed permutations are orthogonal, so facet normals transform like points
    return m(normal)


def induced_color_permutation(m: SignedPerm, lattice: FaceLattice) -> Dict[FacetColor, FacetColor]:
    """
    The colour map induced by ``m`` on the facets of ``lattice``.

    Raises ``ConstructionError`` when ``m`` does not map facets to facets or
    splits a colour class across several colours.
    """
    induced: Dict[FacetColor, set] = {}
    for facet in lattice.facets:
        image = lattice.facet_by_normal.get(map_facet_normal(m, facet.normal))
        if image is None:
            raise ConstructionError(f"{m} does not map facet {facet.normal} to a facet")
        induced.setdefault(facet.color, set()).add(image.color)

    mapping = {}
    for color, images in induced.items():
        if len(images) != 1:
            raise ConstructionError(f"{m} splits the {color.value} facets")
        mapping[color] = images.pop()

    if len(set(mapping.values())) != len(mapping):
        raise ConstructionError(f"{m} merges colour classes")
    return mapping
