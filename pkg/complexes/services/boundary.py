"""
Boundary components of a quotient and their tetrahedral triangulations.

A boundary block is a red 3-stratum. Each of its four 2-strata lies in one
blue facet; the pairing of that facet carries the triangle onto a 2-stratum
of another (or the same) block, and these induced gluings connect blocks
into components.
"""
import logging
from typing import List, Optional

from core.exceptions import ConstructionError, TriangulationError
from core.union_find import UnionFind
from geometry.models import FaceLattice, Label
from geometry.services.polytope import build_24cell, face_label
from geometry.services.symmetry import apply_to_label
from complexes.models import BoundaryBlock, BoundaryComponent, BoundaryGluing, QuotientComplex
from triangulations.models import FaceGluing, Triangulation

logger = logging.getLogger(__name__)


def boundary_block(label: Label, lattice: Optional[FaceLattice] = None) -> BoundaryBlock:
    """
    The block of a red/blue facet, read off the lattice: its triangles that
    avoid the green facets and its six vertices.
    """
    lattice = lattice or build_24cell()
    facet = lattice.facet_by_label[label]
    members = set(facet.vertices)

    two_strata = []
    for triangle in lattice.faces[2]:
        if set(triangle) <= members:
            stratum = face_label(lattice, triangle)
            if stratum is not None:
                two_strata.append(stratum)
    cusps = sorted(face_label(lattice, (v,)) for v in facet.vertices)

    incident = sorted(
        Label(tuple(e if i not in pair else 0 for i, e in enumerate(label.entries)))
        for pair in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    )
    if cusps != incident:
        raise ConstructionError(f"cusps of block {label} do not follow the incidence rule")

    return BoundaryBlock(label=label, two_strata=tuple(sorted(two_strata)), cusps=tuple(cusps))


def _induced_gluings(q: QuotientComplex, block: Label) -> List[BoundaryGluing]:
    gluings = []
    for position in range(4):
        face = block.with_zero_at(position)
        partner = q.pairing_for(block.flipped_at(position))
        if partner is None:
            continue
        _, m = partner
        gluings.append(
            BoundaryGluing(
                block=block,
                face=face,
                other_block=apply_to_label(m, block),
                other_face=apply_to_label(m, face),
                isometry=m,
            )
        )
    return gluings


def boundary_components(q: QuotientComplex) -> List[BoundaryComponent]:
    """
    Components of the boundary of ``q``, ordered by size and then by their
    least block label. Each gluing is kept once, from its smaller side.
    """
    labels = q.boundary_labels
    blocks = {label: boundary_block(label, q.base) for label in labels}
    uf = UnionFind(labels)

    gluings = []
    for label in labels:
        for gluing in _induced_gluings(q, label):
            if gluing.other_block not in blocks:
                raise ConstructionError(
                    f"{gluing.isometry.name} carries boundary block {label} off the boundary"
                )
            uf.union(gluing.block, gluing.other_block)
            if (gluing.block, gluing.face) < (gluing.other_block, gluing.other_face):
                gluings.append(gluing)

    components = []
    for members in uf.classes():
        component_gluings = sorted(
            (g for g in gluings if g.block in members), key=lambda g: (g.block, g.face)
        )
        components.append(
            BoundaryComponent(
                blocks=tuple(blocks[label] for label in members),
                gluings=tuple(component_gluings),
            )
        )
    components.sort(key=lambda c: (len(c.blocks), c.labels))
    logger.debug(f"{q.name}: boundary component sizes {[len(c.blocks) for c in components]}")
    return components


def component_cusp_valences(component: BoundaryComponent) -> List[int]:
    """
    Sizes of the cusp classes of a component: block cusps identified through
    the triangles containing them.
    """
    blocks = {block.label: block for block in component.blocks}
    uf = UnionFind((block.label, cusp) for block in component.blocks for cusp in block.cusps)
    for gluing in component.gluings:
        for cusp in blocks[gluing.block].cusps:
            if cusp.restricts(gluing.face):
                uf.union((gluing.block, cusp), (gluing.other_block, apply_to_label(gluing.isometry, cusp)))
    return sorted(len(members) for members in uf.classes())


def _vertex_map(gluing: BoundaryGluing, face: int, other_face: int):
    """
    Vertex correspondence read off the cusps: the edge where faces ``face``
    and ``j`` meet is the block cusp with zeros at both, and its image cusp
    must have a zero at ``other_face``.
    """
    perm = [None] * 4
    perm[face] = other_face
    stratum = gluing.block.with_zero_at(face)
    for j in range(4):
        if j == face:
            continue
        image = apply_to_label(gluing.isometry, stratum.with_zero_at(j))
        zeros = image.zeros
        if other_face not in zeros or not image.restricts(gluing.other_block):
            raise TriangulationError(
                f"edge {face}{j} of block {gluing.block} has no unambiguous image"
            )
        perm[j] = next(z for z in zeros if z != other_face)

    if sorted(perm) != [0, 1, 2, 3] or tuple(perm) != gluing.isometry.position_map():
        raise TriangulationError(f"ambiguous edge correspondence on block {gluing.block}")
    return tuple(perm)


def extract_triangulation(component: BoundaryComponent, name: str = "") -> Triangulation:
    """
    One tetrahedron per block, in label order; face ``k`` is the 2-stratum
    with a zero in position ``k`` and lies opposite vertex ``k``.
    """
    index = {label: i for i, label in enumerate(component.labels)}
    gluings = []
    for gluing in component.gluings:
        face = gluing.face.zeros[0]
        other_face = gluing.other_face.zeros[0]
        gluings.append(
            FaceGluing(
                index[gluing.block],
                face,
                index[gluing.other_block],
                other_face,
                _vertex_map(gluing, face, other_face),
            )
        )
    return Triangulation(
        n=len(component.blocks),
        gluings=tuple(gluings),
        block_labels=component.labels,
        name=name or ("small" if component.is_small else "large"),
    )

