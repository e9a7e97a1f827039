from django.apps import AppConfig
from django.conf import settings


class CatalogConfig(AppConfig):
    name = 'apps.catalog'

    def ready(self):
        if settings.NGON_CATALOG_SELF_CHECK:
            from .tables import self_check

            self_check(multi_samples=0)
