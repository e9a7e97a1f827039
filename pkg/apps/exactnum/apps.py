from django.apps import AppConfig


class ExactnumConfig(AppConfig):
    name = 'apps.exactnum'
