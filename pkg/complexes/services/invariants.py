"""
Cell counts, Euler characteristic, volume and canonical data of quotients.
"""
from typing import Dict, Optional, Sequence, Tuple, Union

from geometry.services.volumes import cell24_volume, octahedron_volume
from geometry.models import Label
from complexes.models import BoundaryComponent, QuotientComplex, Volume


def boundary_cell_counts(q: QuotientComplex, labels: Optional[Sequence[Label]] = None) -> Tuple[int, ...]:
    """
    Cell counts in dimensions 1 to 3 of the subcomplex carried by the
    boundary 3-strata of ``q`` (all of them, or those in ``labels``).
    """
    wanted = set(labels) if labels is not None else set(q.boundary_labels)
    facets = {f.vertices: f for f in q.base.facets}
    roots = {1: set(), 2: set(), 3: set()}
    for copy, face in q.boundary_facets:
        if facets[face].label not in wanted:
            continue
        for sub in q.base.faces_within(face):
            dimension = q.base.dimension_of[sub]
            if dimension in roots:
                roots[dimension].add(q.cells.find((copy, sub)))
    return tuple(len(roots[k]) for k in (1, 2, 3))


def euler_characteristic(q: QuotientComplex, boundary: bool = False) -> int:
    """
    Alternating sum of the quotient cell counts from dimension 1 up, ideal
    vertices excluded. With ``boundary`` only the boundary subcomplex counts.
    """
    counts = boundary_cell_counts(q) if boundary else q.cell_counts
    return sum((-1) ** k * c for k, c in enumerate(counts, start=1))


def volume(source: Union[QuotientComplex, BoundaryComponent]) -> Volume:
    """24-cells times v_m for a 4-dimensional quotient, octahedra times v_O for a boundary piece."""
    if isinstance(source, BoundaryComponent):
        return Volume(cells=source.octahedra, unit="v_O", value=source.octahedra * octahedron_volume())
    cells = len(source.copies)
    return Volume(cells=cells, unit="v_m", value=cells * cell24_volume())


def fingerprint_data(q: QuotientComplex) -> Dict:
    """Canonical, order-independent summary of a quotient."""
    return {
        "name": q.name,
        "orientations": list(q.orientations),
        "cell_counts": list(q.cell_counts),
        "boundary": [str(l) for l in q.boundary_labels],
        "cusp_orbits": [[str(l) for l in orbit] for orbit in q.cusp_orbits],
        "two_stratum_orbits": [[str(l) for l in orbit] for orbit in q.two_stratum_orbits],
        "gluings": sorted(
            f"{g.source_copy}:{g.source}->{g.target_copy}:{g.target}:{g.tag}" for g in q.gluings
        ),
    }
