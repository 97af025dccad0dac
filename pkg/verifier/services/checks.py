"""
Acceptance checks in report order, from the 24-cell up to the double of X.

Every check computes a JSON-ready ``actual`` value from the pipeline context
and names the value it expects.
"""
import random
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, List, Optional

import numpy as np

from core.exceptions import NonManifoldEdgeError
from geometry.models import FacetColor
from geometry.services.symmetry import hyperoctahedral_group, induced_color_permutation
from geometry.services.polytope import octahedron_tetrahedron_correspondence
from complexes.services.boundary import boundary_block, component_cusp_valences, extract_triangulation
from complexes.services.construction import check_closing_isometry, closing_rule, pairing_orientation
from complexes.services.cusps import cusp_section_S, cusp_shapes_R
from complexes.services.invariants import boundary_cell_counts, euler_characteristic, volume
from triangulations.models import Triangulation
from triangulations.services import codec
from triangulations.services.catalog import doubled_tetrahedron, folded_tetrahedron, large_boundary_figure
from triangulations.services.census import random_relabeling, random_triangulation
from triangulations.services.edges import edge_classes, valences
from triangulations.services.invariants import (
    block_symmetry_order,
    mt_invariants,
    presentation_summary,
    small_cusp_edges,
)
from triangulations.services.isomorphism import is_isomorphism, isomorphic, relabel
from triangulations.services.orientation import brute_force_orientable, check_orientable


@dataclass(frozen=True)
class Check:
    check_id: str
    claim: str
    expected: Any
    compute: Callable
    comparator: str = "exact"
    note: Optional[Callable] = None

    @property
    def stage(self) -> str:
        return self.check_id.split(".")[0]


CHECKS: List[Check] = []

# Stages whose checks only need the 24-cell and S; everything after R may run in parallel
UPSTREAM_STAGES = ("polytope", "S")


def check(check_id: str, claim: str, expected: Any, comparator: str = "exact", note: Optional[Callable] = None):
    def decorator(func):
        if any(c.check_id == check_id for c in CHECKS):
            raise ValueError(f"check {check_id} registered twice")
        CHECKS.append(Check(check_id, claim, expected, func, comparator, note))
        return func

    return decorator


def get_check(check_id: str) -> Check:
    return next(c for c in CHECKS if c.check_id == check_id)


def _strings(labels) -> List[str]:
    return [str(label) for label in labels]


def _glue_lines(triangulation: Triangulation) -> int:
    return len(codec.dumps(triangulation).splitlines()) - 1


# 24-cell


@check("polytope.f-vector", "The 24-cell has 24 vertices, 96 edges, 96 2-faces and 24 facets", [24, 96, 96, 24])
def polytope_f_vector(ctx):
    return list(ctx.lattice.f_vector)


@check("polytope.facet-colours", "The facets split into 8 red, 8 green and 8 blue octahedra", {"blue": 8, "green": 8, "red": 8})
def polytope_facet_colours(ctx):
    counts = Counter(facet.color.value for facet in ctx.lattice.facets)
    return dict(sorted(counts.items()))


@check(
    "polytope.two-face-colours",
    "Every 2-face lies on two facets of different colours, 32 for each pair of colours",
    {"blue+green": 32, "blue+red": 32, "green+red": 32},
)
def polytope_two_face_colours(ctx):
    pairs = Counter()
    for face in ctx.lattice.faces[2]:
        colours = sorted(f.color.value for f in ctx.lattice.incident_facets(face))
        pairs["+".join(colours)] += 1
    return dict(sorted(pairs.items()))


@check(
    "polytope.symmetries",
    "Signed coordinate permutations form a group of order 384 acting on the 24-cell; "
    "each maps colour classes to colour classes, fixing green and swapping red with blue "
    "exactly when it changes an odd number of signs",
    {"order": 384, "green_fixed": True, "preserving": 192, "swapping": 192, "swaps_are_odd": True},
)
def polytope_symmetries(ctx):
    group = hyperoctahedral_group(4)
    green_fixed = True
    swaps_are_odd = True
    swapping = 0
    for m in group:
        mapping = induced_color_permutation(m, ctx.lattice)
        green_fixed = green_fixed and mapping[FacetColor.GREEN] == FacetColor.GREEN
        swaps = mapping[FacetColor.RED] == FacetColor.BLUE
        swaps_are_odd = swaps_are_odd and swaps == (m.sign_changes % 2 == 1)
        swapping += swaps
    return {
        "order": len(group),
        "green_fixed": green_fixed,
        "preserving": len(group) - swapping,
        "swapping": swapping,
        "swaps_are_odd": swaps_are_odd,
    }


@check(
    "polytope.tetrahedron-correspondence",
    "Truncating a tetrahedron gives an octahedron: 4 red faces, 6 vertices and 4 blue faces, "
    "with the 24 colour-preserving symmetries matching those of the tetrahedron",
    {"cardinalities": [4, 6, 4], "symmetries": 24},
)
def polytope_tetrahedron_correspondence(ctx):
    return {
        "cardinalities": list(octahedron_tetrahedron_correspondence().cardinalities),
        "symmetries": block_symmetry_order(),
    }


# Mirrored 24-cell S


@check(
    "S.strata",
    "S has 16 boundary 3-strata, 32 boundary 2-strata and 24 cusps",
    {"three_strata": 16, "two_strata": 32, "cusps": 24},
)
def s_strata(ctx):
    s = ctx.mirrored
    return {
        "three_strata": len(s.boundary_labels),
        "two_strata": len(s.boundary_two_strata),
        "cusps": len(s.cusp_orbits),
    }


@check(
    "S.minsky-blocks",
    "Each boundary 3-stratum of S is a Minsky block with 4 boundary 2-strata and 6 cusps",
    [[4, 6]],
)
def s_minsky_blocks(ctx):
    shapes = set()
    for label in ctx.mirrored.boundary_labels:
        block = boundary_block(label, ctx.lattice)
        shapes.add((len(block.two_strata), len(block.cusps)))
    return [list(shape) for shape in sorted(shapes)]


@check(
    "S.cusp-sections",
    "Every cusp of S has a square times circle section; the circle has length 2 through the green faces",
    {"cusps": 24, "circle_lengths": [2], "red_sides": [2]},
)
def s_cusp_sections(ctx):
    sections = [cusp_section_S(cusp, ctx.lattice) for (cusp,) in ctx.mirrored.cusp_orbits]
    return {
        "cusps": len(sections),
        "circle_lengths": sorted({s.circle_length for s in sections}),
        "red_sides": sorted({len(s.square.sides_of_color(FacetColor.RED)) for s in sections}),
    }


@check("S.cell-counts", "S has 96 edges, 128 2-cells, 40 3-cells and 2 top cells", [96, 128, 40, 2])
def s_cell_counts(ctx):
    return list(ctx.mirrored.cell_counts)


@check("S.euler", "S has Euler characteristic -6", -6)
def s_euler(ctx):
    return euler_characteristic(ctx.mirrored)


# R


@check(
    "R.cusp-orbits",
    "Pairing the blue strata by F and G leaves four small, two medium and four large cusps",
    [1, 1, 1, 1, 2, 2, 4, 4, 4, 4],
)
def r_cusp_orbits(ctx):
    return sorted(len(orbit) for orbit in ctx.r.cusp_orbits)


@check(
    "R.fixed-cusps",
    "The small cusps of R are the fixed cusps (±(+,+,0,0), ±(0,0,+,+))",
    ["(-,-,0,0)", "(0,0,-,-)", "(0,0,+,+)", "(+,+,0,0)"],
)
def r_fixed_cusps(ctx):
    return _strings(sorted(orbit[0] for orbit in ctx.r.cusp_orbits if len(orbit) == 1))


@check(
    "R.cusp-shapes",
    "Cusp sections of R are cylinders times circles of lengths 1, 2 and 4",
    {"kinds": ["cylinder x circle"], "lengths": [1, 1, 1, 1, 2, 2, 4, 4, 4, 4]},
)
def r_cusp_shapes(ctx):
    shapes = cusp_shapes_R(ctx.r)
    return {
        "kinds": sorted({s.kind.value for s in shapes}),
        "lengths": [s.length for s in shapes],
    }


@check(
    "R.two-strata-killed",
    "After pairing, every boundary 2-stratum orbit of R has exactly two members",
    {"orbits": 16, "sizes": [2], "free": 0},
)
def r_two_strata_killed(ctx):
    orbits = ctx.r.two_stratum_orbits
    return {
        "orbits": len(orbits),
        "sizes": sorted({len(orbit) for orbit in orbits}),
        "free": len(ctx.r.boundary_two_strata),
    }


@check(
    "R.pairing-orientation",
    "F, G and the green identity all reverse orientation across the two copies",
    {"F": True, "G": True, "green": True},
)
def r_pairing_orientation(ctx):
    return pairing_orientation(ctx.r)


@check("R.cell-counts", "R has 48 edges, 80 2-cells, 32 3-cells and 2 top cells", [48, 80, 32, 2])
def r_cell_counts(ctx):
    return list(ctx.r.cell_counts)


# Boundary of R


@check(
    "boundary.components",
    "R has four small boundary components ±(+,+,+,+), ±(+,+,-,-) and one large one of four blocks",
    {
        "sizes": [1, 1, 1, 1, 4],
        "small": ["(-,-,-,-)", "(-,-,+,+)", "(+,+,-,-)", "(+,+,+,+)"],
        "octahedra": 16,
    },
)
def boundary_components_check(ctx):
    components = ctx.r_components
    return {
        "sizes": sorted(len(c.blocks) for c in components),
        "small": _strings(sorted(c.labels[0] for c in components if c.is_small)),
        "octahedra": sum(c.octahedra for c in components),
    }


@check(
    "boundary.cusp-valences",
    "Cusps of the boundary components glue into classes of sizes [1,1,4] (small) and [2,2,2,2,4,4,4,4] (large)",
    [[1, 1, 4]] * 4 + [[2, 2, 2, 2, 4, 4, 4, 4]],
)
def boundary_cusp_valences(ctx):
    return [component_cusp_valences(c) for c in ctx.r_components]


@check(
    "boundary.edges-match-cusps",
    "Edge valences of every extracted triangulation equal the cusp class sizes of its component",
    True,
)
def boundary_edges_match_cusps(ctx):
    return all(
        component_cusp_valences(c) == valences(edge_classes(extract_triangulation(c)))
        for c in ctx.r_components
    )


# Large boundary component M


@check("M.triangulation", "M is triangulated by 4 tetrahedra and 8 face pairings", {"tets": 4, "glue_lines": 8})
def m_triangulation(ctx):
    return {"tets": ctx.large.n, "glue_lines": _glue_lines(ctx.large)}


@check("M.orientable", "The triangulation of M is orientable", True)
def m_orientable(ctx):
    return check_orientable(ctx.large) is not None


@check("M.edge-valences", "M has 8 edge classes of valences 2,2,2,2,4,4,4,4", [2, 2, 2, 2, 4, 4, 4, 4])
def m_edge_valences(ctx):
    return valences(edge_classes(ctx.large))


@check("M.cusps", "M has 8 cusps, one per link component", 8)
def m_cusps(ctx):
    return mt_invariants(ctx.large).cusps


@check(
    "M.cusp-tori",
    "Cusp tori of M are four squares of side 2 and four 2x4 rectangles",
    [[2, 2]] * 4 + [[4, 2]] * 4,
)
def m_cusp_tori(ctx):
    return [list(d) for d in mt_invariants(ctx.large).torus_dimensions]


@check(
    "M.small-cusp-edges",
    "The valence two edges of M are the edges where faces {0,1} or faces {2,3} meet",
    4,
)
def m_small_cusp_edges(ctx):
    return len(small_cusp_edges(ctx.large))


@check(
    "M.figure-isomorphism",
    "The extracted triangulation of M is isomorphic to the four-tetrahedron figure paired by F on top and G below",
    True,
)
def m_figure_isomorphism(ctx):
    figure = large_boundary_figure()
    witness = isomorphic(ctx.large, figure)
    return witness is not None and is_isomorphism(ctx.large, figure, witness)


@check(
    "M.presentation",
    "M is the double of a genus 5 handlebody minus 8 curves: 5 framed and 8 unframed link components",
    {"genus": 5, "framed": 5, "unframed": 8},
)
def m_presentation(ctx):
    summary = presentation_summary(ctx.large)
    return {"genus": summary.genus, "framed": summary.framed, "unframed": summary.unframed}


@check(
    "M.volume",
    "M has volume 8 v_O, about 29.311",
    29.311,
    comparator="VOLUME_TOLERANCE",
    note=lambda ctx: volume(ctx.large_component).display("M"),
)
def m_volume(ctx):
    return volume(ctx.large_component).value


@check(
    "M.volume-constant",
    "M has volume 8 v_O with v_O = 3.663862",
    8 * 3.663862,
    comparator="NUMERIC_TOLERANCE",
)
def m_volume_constant(ctx):
    return volume(ctx.large_component).value


# Small boundary components


@check(
    "small.triangulation",
    "A small boundary component is one tetrahedron with two folds and three cusps",
    {"tets": 1, "glue_lines": 2, "valences": [1, 1, 4], "cusps": 3},
)
def small_triangulation(ctx):
    return {
        "tets": ctx.small.n,
        "glue_lines": _glue_lines(ctx.small),
        "valences": valences(edge_classes(ctx.small)),
        "cusps": mt_invariants(ctx.small).cusps,
    }


@check("small.fold", "The small triangulation folds face 0 onto 1 and face 2 onto 3", True)
def small_fold(ctx):
    return ctx.small == folded_tetrahedron()


@check(
    "example.doubled-tetrahedron",
    "Two oppositely oriented tetrahedra glued by the identity are orientable with six edges of valence 2",
    {"orientation": [1, -1], "valences": [2, 2, 2, 2, 2, 2]},
)
def example_doubled_tetrahedron(ctx):
    t = doubled_tetrahedron()
    return {"orientation": list(check_orientable(t) or ()), "valences": valences(edge_classes(t))}


# X


@check(
    "X.boundary-components",
    "Gluing the small components of R by K leaves one boundary component, the four-block M",
    {"components": 1, "blocks": 4},
)
def x_boundary_components(ctx):
    components = ctx.x_components
    return {"components": len(components), "blocks": sum(len(c.blocks) for c in components)}


@check(
    "X.closing-map",
    "K(x,y,z,w) = (-y,-x,z,w) carries (+,+,+,+) onto (-,-,+,+) and (-,-,-,-) onto (+,+,-,-)",
    {"(+,+,+,+)": "(-,-,+,+)", "(-,-,-,-)": "(+,+,-,-)"},
)
def x_closing_map(ctx):
    mapping = check_closing_isometry(ctx.r, closing_rule())
    return {str(source): str(target) for source, target in sorted(mapping.items(), key=lambda kv: str(kv[0]))}


@check(
    "X.pairing-orientation",
    "F, G, K and the green identity all reverse orientation",
    {"F": True, "G": True, "K": True, "green": True},
)
def x_pairing_orientation(ctx):
    return pairing_orientation(ctx.x)


@check("X.cell-counts", "X has 36 edges, 64 2-cells, 28 3-cells and 2 top cells", [36, 64, 28, 2])
def x_cell_counts(ctx):
    return list(ctx.x.cell_counts)


@check(
    "X.volume",
    "X is tessellated by two ideal 24-cells, volume 2 v_m = 8π²/3",
    8 * np.pi ** 2 / 3,
    comparator="NUMERIC_TOLERANCE",
    note=lambda ctx: volume(ctx.x).display("X"),
)
def x_volume(ctx):
    return volume(ctx.x).value


# Euler characteristics


@check("euler.X", "X has Euler characteristic 2", 2)
def euler_x(ctx):
    return euler_characteristic(ctx.x)


@check("euler.M", "The boundary complex M of X has 24 edges, 32 triangles, 8 blocks and Euler characteristic 0",
       {"cells": [24, 32, 8], "euler": 0})
def euler_m(ctx):
    return {"cells": list(boundary_cell_counts(ctx.x)), "euler": euler_characteristic(ctx.x, boundary=True)}


@check("euler.double", "The double of X along M is closed with Euler characteristic 4",
       {"cells": [48, 96, 48, 4], "boundary": 0, "euler": 4})
def euler_double(ctx):
    doubled = ctx.doubled
    return {
        "cells": list(doubled.cell_counts),
        "boundary": len(doubled.boundary_labels),
        "euler": euler_characteristic(doubled),
    }


# Properties


def triangulation_failures(triangulation: Triangulation, rng: random.Random) -> List[str]:
    """
    Invariants every triangulation must satisfy: valences sum to 6n, the
    orientation search agrees with brute force, edge links are cycles or the
    edge is reported as non-manifold, and a random relabelling is recognised.
    """
    name = triangulation.name or f"{triangulation.n} tetrahedra"
    failures = []
    classes = edge_classes(triangulation, check_links=False)
    if sum(valences(classes)) != 6 * triangulation.n:
        failures.append(f"{name}: valences sum to {sum(valences(classes))}")

    orientable = check_orientable(triangulation) is not None
    if orientable != brute_force_orientable(triangulation):
        failures.append(f"{name}: orientation search disagrees with brute force")

    try:
        edge_classes(triangulation)
        manifold = True
    except NonManifoldEdgeError:
        manifold = False
    if orientable and manifold and mt_invariants(triangulation).cusps != len(classes):
        failures.append(f"{name}: cusps differ from edge classes")

    relabelling = random_relabeling(triangulation.n, rng)
    image = relabel(triangulation, relabelling)
    witness = isomorphic(triangulation, image)
    if witness is None or not is_isomorphism(triangulation, image, witness):
        failures.append(f"{name}: relabelled copy not recognised")
    return failures


@check("properties.pipeline", "Triangulation invariants hold on every triangulation the pipeline builds", [])
def properties_pipeline(ctx):
    rng = random.Random(ctx.options.property_seed)
    failures = []
    for triangulation in (ctx.large, ctx.small, doubled_tetrahedron()):
        failures.extend(triangulation_failures(triangulation, rng))
    return failures


@check(
    "properties.random",
    "Triangulation invariants hold on seeded random triangulations of at most 4 tetrahedra",
    [],
    note=lambda ctx: f"{ctx.options.property_samples} samples, seed {ctx.options.property_seed}",
)
def properties_random(ctx):
    rng = random.Random(ctx.options.property_seed)
    failures = []
    for index in range(ctx.options.property_samples):
        triangulation = random_triangulation(rng.randint(1, 4), rng)
        failures.extend(
            f"sample {index}: {failure}" for failure in triangulation_failures(triangulation, rng)
        )
    return failures
