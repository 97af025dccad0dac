from rest_framework import serializers


class CheckResultSerializer(serializers.Serializer):
    """
    Serializer for a single check result
    """

    check_id = serializers.CharField(read_only=True)
    status = serializers.CharField(source="status.value", read_only=True)
    claim = serializers.CharField(read_only=True)
    expected = serializers.JSONField(read_only=True)
    actual = serializers.JSONField(read_only=True)
    note = serializers.CharField(read_only=True)


class ReportSerializer(serializers.Serializer):
    """
    Serializer for the full report; field order is the output order
    """

    summary = serializers.DictField(child=serializers.IntegerField(), read_only=True)
    fingerprint = serializers.CharField(read_only=True)
    checks = CheckResultSerializer(many=True, read_only=True)


class CheckListSerializer(serializers.Serializer):
    """
    Serializer for registered checks as printed by ``verify --list-checks``
    """

    check_id = serializers.CharField(read_only=True)
    stage = serializers.CharField(read_only=True)
    comparator = serializers.CharField(read_only=True)
    claim = serializers.CharField(read_only=True)
