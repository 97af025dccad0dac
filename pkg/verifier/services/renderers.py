"""
Text and JSON renderings of a report. Both are built from the same
serializer data, so they carry identical check data.
"""
from typing import Any, Sequence

from rest_framework.renderers import JSONRenderer

from verifier.models import Report
from verifier.serializers import CheckListSerializer, ReportSerializer

from .checks import Check

FORMATS = ("text", "json")


def _compact(value: Any) -> str:
    return JSONRenderer().render(value).decode("utf-8")


def render_json(report: Report) -> str:
    data = ReportSerializer(report).data
    return JSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8") + "\n"


def render_text(report: Report) -> str:
    data = ReportSerializer(report).data
    lines = []
    for item in data["checks"]:
        lines.append(f"[{item['status'].upper()}] {item['check_id']}: {item['claim']}")
        lines.append(f"    expected: {_compact(item['expected'])}")
        lines.append(f"    actual:   {_compact(item['actual'])}")
        if item["note"]:
            lines.append(f"    {item['note']}")
    summary = data["summary"]
    lines.append("")
    lines.append(f"{summary['passed']} of {summary['total']} checks passed, {summary['failed']} failed")
    lines.append(f"fingerprint sha256:{data['fingerprint']}")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown report format {fmt}")


def render_check_list(checks: Sequence[Check], fmt: str = "text") -> str:
    data = CheckListSerializer(checks, many=True).data
    if fmt == "json":
        return JSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8") + "\n"
    width = max(len(item["check_id"]) for item in data)
    return "".join(f"{item['check_id']:<{width}}  {item['claim']}\n" for item in data)
