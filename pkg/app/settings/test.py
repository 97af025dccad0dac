from .base import *

DEBUG = False

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
        "TEST": {
            "NAME": ":memory:",
        },
    }
}

# Logging - Minimal logging during tests
LOGGING = {
    "version": 1,
    "disable_existing_loggers": True,
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "ERROR",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "ERROR",
            "propagate": False,
        },
        **{
            app: {
                "handlers": ["console"],
                "level": "ERROR",
                "propagate": False,
            }
            for app in LOCAL_APPS
        },
    },
}

SECRET_KEY = "test-secret-key-not-for-production"

# Always sequential and small in tests
VERIFIER = {
    **VERIFIER,
    "REPORT_FORMAT": "text",
    "N_JOBS": 1,
    "PROPERTY_SAMPLES": 12,
}

# Use console output for easier debugging during tests
# Set to True to see log records during tests
TEST_OUTPUT_VERBOSE = False

if TEST_OUTPUT_VERBOSE:
    LOGGING["loggers"]["django"]["level"] = "DEBUG"
    for app in LOCAL_APPS:
        LOGGING["loggers"][app]["level"] = "DEBUG"
