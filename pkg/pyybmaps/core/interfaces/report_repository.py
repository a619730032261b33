#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Report Repository Interface for PyYBMaps
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..entities.report import VerificationReport


class ReportRepositoryInterface(ABC):
    """Abstract interface for verification report storage"""

    @abstractmethod
    def save_payload(self, payload: Dict[str, Any], path: Optional[str] = None) -> str:
        """Write a report payload (one suite or a bundle), return the path written"""
        pass

    @abstractmethod
    def save_report(self, report: VerificationReport, path: Optional[str] = None) -> str:
        """Write a single suite report, return the path written"""
        pass

    @abstractmethod
    def load_report(self, path: str) -> VerificationReport:
        """Read a single suite report back"""
        pass

    @abstractmethod
    def list_reports(self) -> List[str]:
        """Reports stored in the default directory"""
        pass
