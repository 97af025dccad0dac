import logging
from typing import Iterable, Sequence

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from core.exceptions import EmptyPointSetError
from geometry.models import AffineSpan, Vec
from geometry.models.vectors import sub

logger = logging.getLogger(__name__)


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Exact rank of an integer matrix, computed over ZZ."""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    return DomainMatrix.from_Matrix(Matrix(matrix)).convert_to(ZZ).rank()


def affine_rank(points: Sequence[Vec]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise EmptyPointSetError()
    base = points[0]
    return integer_rank(sub(p, base) for p in points[1:])


def affine_span(points: Sequence[Vec]) -> AffineSpan:
    return AffineSpan(basepoint=tuple(points[0]) if points else (), rank=affine_rank(points))
