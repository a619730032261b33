#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
JSON Report Repository Implementation
"""

import glob
import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

from appdirs import user_data_dir
from packaging.version import InvalidVersion, Version

from ...core.entities.report import SCHEMA_VERSION, VerificationReport
from ...core.errors import ReportSchemaError
from ...core.interfaces.report_repository import ReportRepositoryInterface

logger = logging.getLogger(__name__)

APP_NAME = "pyybmaps"


def check_schema_version(found: Any) -> None:
    """Reports written with a different major schema version are rejected"""
    try:
        found_version = Version(str(found))
    except InvalidVersion as e:
        raise ReportSchemaError(f"Unreadable schema version {found!r}") from e
    if found_version.major != Version(SCHEMA_VERSION).major:
        raise ReportSchemaError(
            f"Report schema {found_version} is incompatible with {SCHEMA_VERSION}")


class JsonReportRepository(ReportRepositoryInterface):
    def __init__(self, directory: Optional[str] = None):
        if directory:
            self.directory = directory
        else:
            self.directory = os.path.join(user_data_dir(APP_NAME), "reports")

    def _default_path(self, name: str) -> str:
        stamp = datetime.now().strftime("%Y%m%d-%H%M%S")
        safe = name.replace("/", "_")
        return os.path.join(self.directory, f"{safe}-{stamp}.json")

    def save_payload(self, payload: Dict[str, Any], path: Optional[str] = None) -> str:
        if path is None:
            path = self._default_path(str(payload.get("suite", "bundle")))
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, 'w', encoding="utf-8") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info("Report written to %s", path)
        return path

    def save_report(self, report: VerificationReport, path: Optional[str] = None) -> str:
        return self.save_payload(report.to_dict(), path)

    def load_report(self, path: str) -> VerificationReport:
        with open(path, 'r', encoding="utf-8") as f:
            data = json.load(f)
        if not isinstance(data, dict) or "suite" not in data:
            raise ReportSchemaError(f"{path} does not hold a single suite report")
        check_schema_version(data.get("schema_version"))
        report = VerificationReport.from_dict(data)
        if not report.validate():
            raise ReportSchemaError(f"{path} has inconsistent trial counts")
        return report

    def list_reports(self) -> List[str]:
        return sorted(glob.glob(os.path.join(self.directory, "*.json")))
