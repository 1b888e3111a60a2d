"""On-disk cache of computed b-functions."""

import json
import logging
from pathlib import Path
from typing import Dict, Union

from .factored import FactoredBPoly

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


class CacheFormatError(ValueError):
    """Raised when a cache file is unreadable or carries an unknown version tag."""


class BFunctionCache:
    """Handles loading and saving of b_{xi_n} keyed by n."""

    def __init__(self, file_path: Union[str, Path], version: int = CACHE_VERSION):
        """
        Initialize the cache.

        Args:
            file_path: Path to the JSON cache file; it need not exist yet
            version: Format version written and accepted
        """
        self.file_path = Path(file_path)
        self.version = version

    def load(self) -> Dict[int, FactoredBPoly]:
        """
        Read every cached entry.

        Returns:
            Mapping n -> b_{xi_n}; empty when the file does not exist

        Raises:
            CacheFormatError: If the file is malformed or has another version
        """
        if not self.file_path.exists():
            logger.debug("No cache at %s", self.file_path)
            return {}
        try:
            data = json.loads(self.file_path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as exc:
            raise CacheFormatError(f"Unreadable cache file {self.file_path}: {exc}") from exc

        if not isinstance(data, dict) or data.get('version') != self.version:
            found = data.get('version') if isinstance(data, dict) else None
            raise CacheFormatError(f"Unsupported cache version {found!r} in {self.file_path}; "
                                   f"expected {self.version}")
        entries = data.get('entries', {})
        if not isinstance(entries, dict):
            raise CacheFormatError(f"Cache entries must be an object in {self.file_path}")

        result = {}
        for key, value in entries.items():
            try:
                n = int(key)
                result[n] = FactoredBPoly.from_json(value)
            except ValueError as exc:
                raise CacheFormatError(f"Bad cache entry {key!r} in {self.file_path}: {exc}") from exc
        logger.info("Loaded %d cached b-functions from %s", len(result), self.file_path)
        return result

    def save(self, entries: Dict[int, FactoredBPoly]) -> None:
        """Write all entries, replacing the file atomically."""
        payload = {
            'version': self.version,
            'entries': {str(n): b.to_json() for n, b in sorted(entries.items())},
        }
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.file_path.with_suffix(self.file_path.suffix + '.tmp')
        tmp.write_text(json.dumps(payload, indent=2), encoding='utf-8')
        tmp.replace(self.file_path)
        logger.debug("Saved %d b-functions to %s", len(entries), self.file_path)
