"""
Run every check in fixed order and collect a deterministic report.
"""
import logging
from pathlib import Path
from typing import Optional, Union

from joblib import Parallel, delayed

from core.exceptions import ExportError, check_exception_handler
from triangulations.services import codec
from verifier.models import CheckResult, CheckStatus, Report

from .checks import CHECKS, UPSTREAM_STAGES, Check
from .comparators import get_comparator
from .context import PipelineContext, PipelineOptions

logger = logging.getLogger(__name__)

EXPORT_SELECTORS = ("large", "small", "example-doubled")


def evaluate(check: Check, ctx: PipelineContext) -> CheckResult:
    """Evaluate one check; any exception becomes a failed result carrying the error payload."""
    comparator = get_comparator(check.comparator, ctx.tolerances)
    try:
        actual = check.compute(ctx)
    except Exception as exc:
        actual = check_exception_handler(exc, {"check_id": check.check_id})
        logger.warning(f"Check {check.check_id} raised {actual['error']}: {actual['detail']}")
        return CheckResult(check.check_id, check.claim, check.expected, actual, CheckStatus.FAIL)

    status = CheckStatus.PASS if comparator.matches(check.expected, actual) else CheckStatus.FAIL
    note = ""
    if check.note is not None:
        try:
            note = check.note(ctx)
        except Exception:
            note = ""
    if status == CheckStatus.FAIL:
        logger.warning(f"Check {check.check_id} failed: expected {check.expected}, got {actual}")
    return CheckResult(check.check_id, check.claim, check.expected, actual, status, note)


def run_pipeline(options: Optional[PipelineOptions] = None, ctx: Optional[PipelineContext] = None) -> Report:
    """
    Build the pipeline stages and evaluate every registered check. With
    ``n_jobs`` above one the checks past S run on a joblib thread pool;
    results keep registry order either way.
    """
    ctx = ctx or PipelineContext(options)
    logger.info(f"Running {len(CHECKS)} checks")

    upstream = [c for c in CHECKS if c.stage in UPSTREAM_STAGES]
    downstream = [c for c in CHECKS if c.stage not in UPSTREAM_STAGES]
    results = [evaluate(c, ctx) for c in upstream]
    if ctx.options.n_jobs > 1:
        ctx.warm()
        results += Parallel(n_jobs=ctx.options.n_jobs, prefer="threads")(
            delayed(evaluate)(c, ctx) for c in downstream
        )
    else:
        results += [evaluate(c, ctx) for c in downstream]

    report = Report(checks=tuple(results), fingerprint=ctx.fingerprint)
    logger.info(
        f"{report.summary['passed']} of {report.summary['total']} checks passed, "
        f"fingerprint {report.fingerprint[:12]}"
    )
    return report


def export_triangulation(
    selector: str, path: Union[str, Path], ctx: Optional[PipelineContext] = None
) -> Path:
    """Write the ``large``, ``small`` or ``example-doubled`` triangulation in the text format."""
    if selector not in EXPORT_SELECTORS:
        raise ExportError(
            f"unknown triangulation {selector!r}; choose one of {', '.join(EXPORT_SELECTORS)}",
            code="unknown_selector",
        )
    ctx = ctx or PipelineContext()
    triangulation = ctx.triangulation(selector)
    return codec.write(triangulation, path)
