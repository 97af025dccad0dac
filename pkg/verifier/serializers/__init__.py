from .report_serializers import (
    CheckListSerializer,
    CheckResultSerializer,
    ReportSerializer,
)

__all__ = [
    "CheckListSerializer",
    "CheckResultSerializer",
    "ReportSerializer",
]
