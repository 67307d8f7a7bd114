"""On-disk store for decomposition matrices.

Layout: ``<root>/<e>/<kappa>/<alpha-key>.json``. Files carry a version stamp
and records with another version are ignored.
"""

import logging
import os
import tempfile
from pathlib import Path

from pydantic import ValidationError

from .core.cartan import DominantWeight, RootElement
from .core.decomp import DecompositionMatrix
from .models import CACHE_VERSION, CacheRecord, MatrixPayload

logger = logging.getLogger(__name__)


class MatrixCache:
    """Cache of decomposition matrices keyed by (e, kappa, alpha)."""

    def __init__(self, root: Path | None):
        self.root = root

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def path_for(self, alpha: RootElement, weight: DominantWeight) -> Path:
        if self.root is None:
            raise ValueError("Matrix cache is disabled")
        return self.root / str(weight.e) / weight.key() / f"{alpha.key()}.json"

    def load(
        self,
        alpha: RootElement,
        weight: DominantWeight,
    ) -> DecompositionMatrix | None:
        if self.root is None:
            return None
        path = self.path_for(alpha, weight)
        if not path.exists():
            logger.debug(f"Cache miss: {path}")
            return None
        try:
            record = CacheRecord.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {e}")
            return None
        if record.version != CACHE_VERSION:
            logger.warning(
                f"Ignoring cache file {path} with version {record.version}, "
                f"expected {CACHE_VERSION}"
            )
            return None
        logger.info(f"Cache hit: {path}")
        return record.matrix.to_matrix(method="cache")

    def store(self, matrix: DecompositionMatrix) -> Path | None:
        """Write atomically: a temporary file in the target directory, then rename."""
        if self.root is None:
            return None
        path = self.path_for(matrix.alpha, matrix.weight)
        path.parent.mkdir(parents=True, exist_ok=True)
        record = CacheRecord(version=CACHE_VERSION, matrix=MatrixPayload.from_matrix(matrix))
        handle, temporary = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(handle, "w", encoding="utf-8") as stream:
                stream.write(record.model_dump_json(indent=2))
            os.replace(temporary, path)
        except OSError as e:
            logger.error(f"Writing cache file {path} failed: {e}")
            Path(temporary).unlink(missing_ok=True)
            raise
        logger.info(f"Cached matrix for block {matrix.alpha} at {path}")
        return path
