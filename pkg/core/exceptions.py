"""
Exception hierarchy shared by every verifier app.

Each error carries a ``default_detail`` and ``default_code`` in the same way
REST framework exceptions do, so a failed check can report a stable code next
to the human readable message.
"""


class VerificationError(Exception):
    default_detail = "Verification failed."
    default_code = "verification_error"

    def __init__(self, detail=None, code=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)


class EmptyPointSetError(VerificationError):
    default_detail = "empty point set"
    default_code = "empty_point_set"


class LabelError(VerificationError):
    default_detail = "Malformed stratum label."
    default_code = "malformed_label"


class ConstructionError(VerificationError):
    default_detail = "Construction produced inconsistent counts."
    default_code = "construction_error"


class PairingError(VerificationError):
    default_detail = "Facet pairing rule is not a fixed-point-free involution."
    default_code = "pairing_error"


class CuspGluingError(VerificationError):
    default_detail = "cusp gluing inconsistent"
    default_code = "cusp_gluing_inconsistent"


class OrientabilityError(VerificationError):
    default_detail = "Triangulation is not orientable."
    default_code = "non_orientable"


class NonManifoldEdgeError(VerificationError):
    default_detail = "non-manifold edge"
    default_code = "non_manifold_edge"


class TriangulationError(VerificationError):
    default_detail = "Malformed triangulation."
    default_code = "malformed_triangulation"


class TriangulationFormatError(TriangulationError):
    default_detail = "Malformed triangulation text."
    default_code = "malformed_triangulation_text"


class ExportError(VerificationError):
    default_detail = "Export failed."
    default_code = "export_error"


def check_exception_handler(exc, context):
    """
    Turn an exception raised while evaluating a check into the ``actual``
    payload of a failed check.
    """
    if isinstance(exc, VerificationError):
        payload = {"error": exc.code, "detail": str(exc.detail)}
    else:
        payload = {"error": type(exc).__name__, "detail": str(exc)}

    check_id = context.get("check_id") if context else None
    if check_id:
        payload["check_id"] = check_id

    return payload
