from abc import ABC, abstractmethod
from typing import Any, Dict, Optional


class BaseComparator(ABC):
    """Abstract base class for check comparators"""

    name = "base"

    @abstractmethod
    def matches(self, expected: Any, actual: Any) -> bool:
        pass

    def describe(self) -> str:
        return self.name


class ExactComparator(BaseComparator):
    """Structural equality of JSON-ready values"""

    name = "exact"

    def matches(self, expected: Any, actual: Any) -> bool:
        return expected == actual


class ToleranceComparator(BaseComparator):
    """
    Absolute tolerance on numbers. Non-numeric values (an error payload for
    instance) never match.
    """

    name = "tolerance"

    def __init__(self, tolerance: float):
        self.tolerance = tolerance

    def matches(self, expected: Any, actual: Any) -> bool:
        if isinstance(actual, bool) or not isinstance(actual, (int, float)):
            return False
        return abs(actual - expected) <= self.tolerance

    def describe(self) -> str:
        return f"within {self.tolerance:g}"


def get_comparator(kind: str = "exact", tolerances: Optional[Dict[str, float]] = None) -> BaseComparator:
    """
    Factory function to instantiate comparators. ``kind`` is ``exact`` or the
    name of a tolerance setting such as ``VOLUME_TOLERANCE``.
    """
    if kind == "exact":
        return ExactComparator()
    tolerances = tolerances or {}
    if kind not in tolerances:
        raise KeyError(f"unknown comparator {kind}")
    return ToleranceComparator(tolerances[kind])
