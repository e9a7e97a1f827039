"""
Django settings for the ngon project.

The project has no web surface: Django provides settings, logging,
management commands, file storage for the result cache, the SVG
template and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('SECRET_KEY', 'ngon-local-only-key')

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'apps.exactnum.apps.ExactnumConfig',
    'apps.relations.apps.RelationsConfig',
    'apps.catalog.apps.CatalogConfig',
    'apps.geometry.apps.GeometryConfig',
    'apps.formulas.apps.FormulasConfig',
    'apps.cli.apps.CliConfig',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'autoescape': False,
        },
    },
]

# No models: every result lives in the JSON cache below.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

STORAGES = {
    "default": {
        "BACKEND": "django.core.files.storage.FileSystemStorage",
    },
}

# Scan and cache configuration
NGON_CACHE_DIR = os.environ.get('NGON_CACHE_DIR', str(BASE_DIR / 'cache'))

# Bump whenever scan output changes; cached records carry it in their key.
NGON_CODE_VERSION = '1.0.0'

NGON_SCAN_TOLERANCE = float(os.environ.get('NGON_SCAN_TOLERANCE', '1e-9'))

# 0 means one worker per CPU
NGON_DEFAULT_JOBS = int(os.environ.get('NGON_JOBS', '1'))

NGON_CATALOG_SELF_CHECK = os.environ.get('NGON_CATALOG_SELF_CHECK', 'True') == 'True'

NGON_SLOW_TESTS = os.environ.get('NGON_SLOW_TESTS', 'False') == 'True'

# Logging Configuration
# Everything goes to stderr so report output on stdout stays byte-stable.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{levelname}] {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': os.environ.get('DJANGO_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'apps': {
            'handlers': ['console'],
            'level': os.environ.get('NGON_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}
