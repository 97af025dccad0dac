"""
Lazily built pipeline stages shared by the checks.
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional

from django.conf import settings

from core.exceptions import check_exception_handler
from geometry.models import Label
from geometry.services.polytope import build_24cell
from complexes.models import BoundaryComponent, FacetPairingRule
from complexes.services.boundary import boundary_components, extract_triangulation
from complexes.services.construction import blue_pairing_rule, build_mirrored, build_R, build_X, double
from complexes.services.invariants import fingerprint_data
from triangulations.models import Triangulation
from triangulations.services.catalog import doubled_tetrahedron

logger = logging.getLogger(__name__)

STAGES = ("lattice", "mirrored", "r", "r_components", "large", "small", "x", "x_components", "doubled")


@dataclass(frozen=True)
class PipelineOptions:
    format: str = "text"
    n_jobs: int = 1
    inject_fault: bool = False
    property_samples: int = 40
    property_seed: int = 20130101

    @classmethod
    def from_settings(cls, **overrides) -> "PipelineOptions":
        conf = settings.VERIFIER
        values = {
            "format": conf["REPORT_FORMAT"],
            "n_jobs": conf["N_JOBS"],
            "property_samples": conf["PROPERTY_SAMPLES"],
            "property_seed": conf["PROPERTY_SEED"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class PipelineContext:
    """
    24-cell, S, R, its boundary triangulations, X and the double of X, each
    built on first use. A stage that raises is rebuilt (and raises again) on
    every access, so each dependent check fails on its own.
    """

    def __init__(self, options: Optional[PipelineOptions] = None):
        self.options = options or PipelineOptions.from_settings()

    @property
    def tolerances(self) -> Dict[str, float]:
        conf = settings.VERIFIER
        return {key: conf[key] for key in ("VOLUME_TOLERANCE", "NUMERIC_TOLERANCE")}

    @cached_property
    def lattice(self):
        return build_24cell()

    @cached_property
    def mirrored(self):
        return build_mirrored()

    @cached_property
    def blue_rule(self) -> FacetPairingRule:
        rule = blue_pairing_rule()
        if self.options.inject_fault:
            logger.warning("Dropping the last blue pairing on request")
            return FacetPairingRule(name="blue (corrupted)", pairs=rule.pairs[:-1])
        return rule

    @cached_property
    def r(self):
        return build_R(self.mirrored, self.blue_rule)

    @cached_property
    def r_components(self) -> List[BoundaryComponent]:
        return boundary_components(self.r)

    @cached_property
    def large_component(self) -> BoundaryComponent:
        return next(c for c in self.r_components if not c.is_small)

    @cached_property
    def small_component(self) -> BoundaryComponent:
        top = Label.parse("(+,+,+,+)")
        return next(c for c in self.r_components if c.labels == (top,))

    @cached_property
    def large(self) -> Triangulation:
        return extract_triangulation(self.large_component)

    @cached_property
    def small(self) -> Triangulation:
        return extract_triangulation(self.small_component)

    @cached_property
    def x(self):
        return build_X(self.r)

    @cached_property
    def x_components(self) -> List[BoundaryComponent]:
        return boundary_components(self.x)

    @cached_property
    def doubled(self):
        return double(self.x)

    def triangulation(self, selector: str) -> Triangulation:
        if selector == "large":
            return self.large
        if selector == "small":
            return self.small
        if selector == "example-doubled":
            return doubled_tetrahedron()
        raise KeyError(selector)

    def warm(self):
        """Build every stage up front so worker threads only read cached values."""
        for stage in STAGES:
            try:
                getattr(self, stage)
            except Exception as exc:
                logger.info(f"Stage {stage} unavailable: {exc}")

    @cached_property
    def fingerprint(self) -> str:
        data = []
        for stage in ("mirrored", "r", "x", "doubled"):
            try:
                data.append(fingerprint_data(getattr(self, stage)))
            except Exception as exc:
                data.append({"stage": stage, **check_exception_handler(exc, None)})
        canonical = json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
