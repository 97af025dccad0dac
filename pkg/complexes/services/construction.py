"""
The mirrored 24-cell S and its quotients R, X and the double of X.
"""
import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Type

from core.exceptions import ConstructionError, PairingError
from core.union_find import UnionFind
from geometry.models import FaceLattice, FacetColor, Label
from geometry.services.polytope import build_24cell
from geometry.services.symmetry import F, G, IDENTITY, K, apply_to_label
from complexes.models import (
    CopyRule,
    FacetPairing,
    FacetPairingRule,
    Gluing,
    GluingKind,
    MirroredComplex,
    QuotientComplex,
)

from .boundary import boundary_block, boundary_components

logger = logging.getLogger(__name__)

BLUE_PAIRS = (
    ("(+,+,-,+)", "(+,+,+,-)", F),
    ("(-,-,+,-)", "(-,-,-,+)", F),
    ("(+,-,+,+)", "(-,+,+,+)", G),
    ("(-,+,-,-)", "(+,-,-,-)", G),
)

CLOSING_PAIRS = (
    ("(+,+,+,+)", "(-,-,+,+)", K),
    ("(-,-,-,-)", "(+,+,-,-)", K),
)


def _rule(name: str, pairs) -> FacetPairingRule:
    return FacetPairingRule(
        name=name,
        pairs=tuple(FacetPairing(Label.parse(s), Label.parse(t), m) for s, t, m in pairs),
    )


def blue_pairing_rule() -> FacetPairingRule:
    """F and G pairing the eight blue 3-strata inside each copy."""
    return _rule("blue", BLUE_PAIRS)


def closing_rule() -> FacetPairingRule:
    """K pairing the four small red 3-strata inside each copy."""
    return _rule("closing", CLOSING_PAIRS)


def _check_green_agreement(pair: FacetPairing, lattice: FaceLattice):
    # The two per-copy maps must agree on triangles shared through a green facet
    green = [set(f.vertices) for f in lattice.facets_of_color(FacetColor.GREEN)]
    source = lattice.facet_by_label[pair.source].vertices
    for triangle in lattice.faces[2]:
        if not set(triangle) <= set(source):
            continue
        if any(set(triangle) <= g for g in green):
            image = set(lattice.map_face(pair.isometry, triangle))
            if not any(image <= g for g in green):
                raise PairingError(
                    f"{pair.isometry.name or pair.isometry} moves a green triangle of "
                    f"{pair.source} off the green facets"
                )


def validate_rule(rule: FacetPairingRule, lattice: FaceLattice):
    """The rule must pair facets by isometries, each facet at most once and never to itself."""
    if rule.copy_rule == CopyRule.CROSS_COPY and rule.copy_offset == 0:
        raise PairingError(f"cross-copy rule {rule.name} needs a non-zero copy offset")

    seen = set()
    for pair in rule.pairs:
        for label in (pair.source, pair.target):
            if label not in lattice.facet_by_label:
                raise PairingError(f"{label} is not a red or blue facet")
        if apply_to_label(pair.isometry, pair.source) != pair.target:
            raise PairingError(f"{pair.isometry} does not map {pair.source} to {pair.target}")
        if rule.copy_rule == CopyRule.PER_COPY and pair.source == pair.target:
            raise PairingError(f"rule {rule.name} pairs {pair.source} with itself")
        for label in {pair.source, pair.target}:
            if label in seen:
                raise PairingError(f"rule {rule.name} pairs {label} twice")
            seen.add(label)
        if rule.copy_rule == CopyRule.PER_COPY:
            _check_green_agreement(pair, lattice)


def green_gluings(lattice: FaceLattice, green_pairs: Iterable[Tuple[int, int]]) -> List[Gluing]:
    return [
        Gluing(a, facet.normal, b, facet.normal, IDENTITY, GluingKind.GREEN)
        for a, b in green_pairs
        for facet in lattice.facets_of_color(FacetColor.GREEN)
    ]


def expand_rule(rule: FacetPairingRule, lattice: FaceLattice, copies: Sequence[int]) -> List[Gluing]:
    gluings = []
    for pair in rule.pairs:
        source = lattice.facet_by_label[pair.source].normal
        target = lattice.facet_by_label[pair.target].normal
        if rule.copy_rule == CopyRule.PER_COPY:
            for copy in copies:
                gluings.append(Gluing(copy, source, copy, target, pair.isometry, GluingKind.PAIRING))
        else:
            for copy in copies:
                if copy + rule.copy_offset in copies:
                    gluings.append(
                        Gluing(copy, source, copy + rule.copy_offset, target, pair.isometry, GluingKind.DOUBLE)
                    )
    return gluings


def identify_cells(lattice: FaceLattice, copies: Sequence[int], gluings: Iterable[Gluing]) -> UnionFind:
    """Union-find over (copy, face) generated by the facet gluings."""
    uf = UnionFind((copy, face) for copy in copies for k in sorted(lattice.faces) for face in lattice.faces[k])
    for gluing in gluings:
        source = lattice.facet_by_normal[gluing.source].vertices
        target = lattice.facet_by_normal[gluing.target].vertices
        if lattice.map_face(gluing.isometry, source) != target:
            raise PairingError(f"{gluing.isometry} does not carry facet {gluing.source} onto {gluing.target}")
        for face in lattice.faces_within(source):
            uf.union((gluing.source_copy, face), (gluing.target_copy, lattice.map_face(gluing.isometry, face)))
    return uf


def assemble(
    name: str,
    lattice: FaceLattice,
    orientations: Tuple[int, ...],
    green_pairs: Tuple[Tuple[int, int], ...],
    rules: Tuple[FacetPairingRule, ...],
    complex_class: Type[QuotientComplex] = QuotientComplex,
) -> QuotientComplex:
    for rule in rules:
        validate_rule(rule, lattice)

    copies = tuple(range(1, len(orientations) + 1))
    gluings = green_gluings(lattice, green_pairs)
    for rule in rules:
        gluings.extend(expand_rule(rule, lattice, copies))

    complex_ = complex_class(
        name=name,
        base=lattice,
        orientations=orientations,
        green_pairs=green_pairs,
        rules=rules,
        gluings=tuple(gluings),
        cells=identify_cells(lattice, copies, gluings),
    )
    logger.debug(f"{name}: cell counts {complex_.cell_counts}, {len(complex_.cusp_orbits)} cusps")
    return complex_


def _expect(name: str, what: str, actual: int, expected: int):
    if actual != expected:
        raise ConstructionError(f"{name}: expected {expected} {what}, found {actual}")


def build_mirrored() -> MirroredComplex:
    mirrored = assemble("S", build_24cell(), (1, -1), ((1, 2),), (), complex_class=MirroredComplex)
    _expect("S", "boundary 3-strata", len(mirrored.boundary_labels), 16)
    _expect("S", "boundary 2-strata", len(mirrored.boundary_two_strata), 32)
    _expect("S", "cusps", len(mirrored.cusp_orbits), 24)
    for label in mirrored.boundary_labels:
        block = boundary_block(label, mirrored.base)
        _expect(f"S block {label}", "2-strata", len(block.two_strata), 4)
        _expect(f"S block {label}", "cusps", len(block.cusps), 6)
    return mirrored


def build_R(mirrored: MirroredComplex, rule: FacetPairingRule = None) -> QuotientComplex:
    """Pair the blue 3-strata of S; ``rule`` must cover every blue stratum exactly once."""
    rule = rule or blue_pairing_rule()
    blue = sorted(f.label for f in mirrored.base.facets_of_color(FacetColor.BLUE))
    if list(rule.labels) != blue:
        missing = sorted(set(blue) - set(rule.labels))
        raise PairingError(
            f"rule {rule.name} must pair each blue stratum once; "
            f"unpaired {', '.join(str(l) for l in missing) or 'none'}"
        )
    return assemble("R", mirrored.base, mirrored.orientations, mirrored.green_pairs, mirrored.rules + (rule,))


def _gluing_set(component) -> set:
    result = set()
    for g in component.gluings:
        result.add((g.block, g.face, g.other_block, g.other_face, g.isometry))
        result.add((g.other_block, g.other_face, g.block, g.face, g.isometry.inverse()))
    return result


def check_closing_isometry(r: QuotientComplex, rule: FacetPairingRule) -> Dict[Label, Label]:
    """
    Each closing map must carry a small boundary component of ``r`` onto the
    one it is paired with, gluings included. Returns the block map.
    """
    small = {c.labels[0]: c for c in boundary_components(r) if c.is_small}
    mapping = {}
    for pair in rule.pairs:
        if pair.source not in small or pair.target not in small:
            raise ConstructionError(f"{pair.source} and {pair.target} are not both small components")
        m = pair.isometry
        target = _gluing_set(small[pair.target])
        for g in small[pair.source].gluings:
            image = (
                apply_to_label(m, g.block),
                apply_to_label(m, g.face),
                apply_to_label(m, g.other_block),
                apply_to_label(m, g.other_face),
                m @ g.isometry @ m.inverse(),
            )
            if image not in target:
                raise ConstructionError(f"{m.name} does not match {pair.source} with {pair.target}")
        mapping[pair.source] = pair.target
    return mapping


def build_X(r: QuotientComplex) -> QuotientComplex:
    rule = closing_rule()
    check_closing_isometry(r, rule)
    x = assemble("X", r.base, r.orientations, r.green_pairs, r.rules + (rule,))
    _expect("X", "boundary components", len(boundary_components(x)), 1)
    return x


def double(x: QuotientComplex) -> QuotientComplex:
    """Two copies of ``x``, the second reversed, glued by the identity along the boundary."""
    n = len(x.orientations)
    orientations = x.orientations + tuple(-o for o in x.orientations)
    green_pairs = x.green_pairs + tuple((a + n, b + n) for a, b in x.green_pairs)
    mirror = FacetPairingRule(
        name="double",
        pairs=tuple(FacetPairing(label, label, IDENTITY) for label in x.boundary_labels),
        copy_rule=CopyRule.CROSS_COPY,
        copy_offset=n,
    )
    return assemble(f"double of {x.name}", x.base, orientations, green_pairs, x.rules + (mirror,))


def pairing_orientation(complex_: QuotientComplex) -> Dict[str, bool]:
    """
    Whether every gluing of each kind reverses orientation, i.e. the isometry
    determinant times the two copy orientations is -1.
    """
    result: Dict[str, bool] = {}
    for gluing in complex_.gluings:
        reverses = (
            gluing.isometry.determinant
            * complex_.orientation(gluing.source_copy)
            * complex_.orientation(gluing.target_copy)
            == -1
        )
        result[gluing.tag] = result.get(gluing.tag, True) and reverses
    return dict(sorted(result.items()))
