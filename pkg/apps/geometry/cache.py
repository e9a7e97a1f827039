"""
JSON result cache on a FileSystemStorage.

One file per (n, mode); the code version is part of the name, so bumping
NGON_CODE_VERSION invalidates every earlier result.
"""

import json
import logging

from django.conf import settings
from django.core.files.base import ContentFile
from django.core.files.storage import FileSystemStorage
from django.core.serializers.json import DjangoJSONEncoder

from .counts import CountsRecord

logger = logging.getLogger(__name__)


class CountsCache:
    def __init__(self, location=None, version=None):
        self.storage = FileSystemStorage(location=location or settings.NGON_CACHE_DIR)
        self.version = version or settings.NGON_CODE_VERSION

    def name(self, n, mode):
        return f"counts-n{n}-{mode}-v{self.version}.json"

    def load_json(self, n, mode):
        name = self.name(n, mode)
        if not self.storage.exists(name):
            return None
        try:
            with self.storage.open(name) as handle:
                return json.loads(handle.read())
        except ValueError:
            logger.warning(f"Ignoring unreadable cache file {name}")
            return None

    def store_json(self, n, mode, data):
        name = self.name(n, mode)
        if self.storage.exists(name):
            self.storage.delete(name)
        content = json.dumps(data, cls=DjangoJSONEncoder, sort_keys=True, indent=2)
        self.storage.save(name, ContentFile(content.encode()))
        logger.debug(f"Cached {name}")

    def load(self, n, mode):
        data = self.load_json(n, mode)
        return CountsRecord.from_json(data) if data is not None else None

    def store(self, record):
        self.store_json(record.n, record.mode, record.as_json())
