"""
KL Store
Content-addressed JSON files that keep canonical basis records between runs
"""

import hashlib
import json
import logging
import os
import tempfile
from typing import Optional

from affine_weyl.element_grammar import format_element
from affine_weyl.errors import KLComputationError
from affine_weyl.group_element import GroupElement
from hecke_algebra.kl_basis import KLRecord
from hecke_algebra.serialization import kl_record_from_dict, kl_record_to_dict

logger = logging.getLogger(__name__)

STORE_FORMAT_VERSION = 1


class KLStore:
    """
    One file per record, named by the SHA-256 of (format version, datum, element).

    Writes go to a temporary file in the same directory followed by a rename,
    so several processes may share a directory.
    """

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def key(self, w: GroupElement) -> str:
        text = f"{STORE_FORMAT_VERSION}|{w.datum.selector}|{format_element(w)}"
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def path(self, w: GroupElement) -> str:
        return os.path.join(self.directory, f"{self.key(w)}.json")

    def load(self, w: GroupElement) -> Optional[KLRecord]:
        file_path = self.path(w)
        if not os.path.isfile(file_path):
            return None
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                record = kl_record_from_dict(json.load(f))
        except (OSError, ValueError, KeyError) as e:
            logger.warning(f"Ignoring unreadable KL store entry {file_path}: {e}")
            return None
        if record.w != w:
            logger.warning(f"KL store entry {file_path} holds {record.w}, expected {w}")
            return None
        try:
            record.check()
        except KLComputationError as e:
            logger.warning(f"Ignoring invalid KL store entry {file_path}: {e}")
            return None
        return record

    def save(self, record: KLRecord) -> None:
        file_path = self.path(record.w)
        if os.path.isfile(file_path):
            return
        fd, temp_path = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(kl_record_to_dict(record), f, sort_keys=True)
            os.replace(temp_path, file_path)
        except OSError as e:
            logger.warning(f"Could not write KL store entry {file_path}: {e}")
            if os.path.exists(temp_path):
                os.remove(temp_path)
