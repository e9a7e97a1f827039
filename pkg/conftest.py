"""Configure Django for pytest the way `manage.py test` does."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ngon.settings')
django.setup()

from django.test.utils import setup_test_environment  # noqa: E402

setup_test_environment()
