from .base import *

DEBUG = True

# More verbose logging in development
for app in LOCAL_APPS:
    LOGGING["loggers"][app]["level"] = "DEBUG"
LOGGING["handlers"]["console"]["level"] = "DEBUG"

# Development secret key (change outside local use)
SECRET_KEY = config(
    "SECRET_KEY",
    default="django-insecure-bounding-verifier-development-key",
)
