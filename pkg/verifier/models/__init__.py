from .report import CheckResult, CheckStatus, Report

__all__ = ["CheckResult", "CheckStatus", "Report"]
