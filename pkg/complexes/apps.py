from django.apps import AppConfig


class ComplexesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "complexes"
    verbose_name = "Quotients of the mirrored 24-cell"
