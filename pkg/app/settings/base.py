from pathlib import Path
from decouple import config

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent.parent


# Application definition
THIRD_PARTY_APPS = [
    "rest_framework",
]

LOCAL_APPS = [
    "app",
    "core",
    "geometry",
    "complexes",
    "triangulations",
    "verifier",
]

INSTALLED_APPS = THIRD_PARTY_APPS + LOCAL_APPS

SECRET_KEY = config("SECRET_KEY", default="bounding-verifier-local-key")

# The verifier keeps no state between runs
DATABASES = {}

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# REST Framework Configuration (serializers and renderers only)
REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}

# Logging Configuration
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": "INFO",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        }
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": False,
        },
        **{
            app: {
                "handlers": ["console"],
                "level": "INFO",
                "propagate": False,
            }
            for app in LOCAL_APPS
        },
    },
}

# Verifier Configuration
VERIFIER = {
    "REPORT_FORMAT": config("VERIFIER_REPORT_FORMAT", default="text"),
    "N_JOBS": config("VERIFIER_N_JOBS", default=1, cast=int),
    "PROPERTY_SAMPLES": config("VERIFIER_PROPERTY_SAMPLES", default=40, cast=int),
    "PROPERTY_SEED": config("VERIFIER_PROPERTY_SEED", default=20130101, cast=int),
    "VOLUME_TOLERANCE": config("VERIFIER_VOLUME_TOLERANCE", default=1e-2, cast=float),
    "NUMERIC_TOLERANCE": config("VERIFIER_NUMERIC_TOLERANCE", default=1e-4, cast=float),
}
