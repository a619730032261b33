#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Settings Entity for PyYBMaps

Represents verification defaults; command-line flags override them.
"""

from typing import Dict, Any, Optional
from dataclasses import dataclass


@dataclass
class SettingsEntity:
    """Entity representing application settings"""

    field_backend: str = "gaussian-rational"
    seed: int = 42
    trials: Optional[int] = None
    tolerance: float = 1e-9
    workers: int = 1
    entry_bound: int = 3
    max_rejections: int = 1000
    report_directory: str = ""
    log_level: str = "WARNING"
    record_timing: bool = False

    def validate(self) -> bool:
        """Validate settings values"""
        valid_backends = ["gaussian-rational", "complex64"]
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

        if self.field_backend not in valid_backends:
            return False

        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            return False

        if self.trials is not None and (not isinstance(self.trials, int) or self.trials < 1):
            return False

        if not isinstance(self.tolerance, (int, float)) or self.tolerance < 0:
            return False

        if not isinstance(self.workers, int) or self.workers < 1:
            return False

        if not isinstance(self.entry_bound, int) or self.entry_bound < 1:
            return False

        if not isinstance(self.max_rejections, int) or self.max_rejections < 1:
            return False

        if str(self.log_level).upper() not in valid_levels:
            return False

        if not isinstance(self.record_timing, bool):
            return False

        return True

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to dictionary for serialization"""
        return {
            "field_backend": self.field_backend,
            "seed": self.seed,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "workers": self.workers,
            "entry_bound": self.entry_bound,
            "max_rejections": self.max_rejections,
            "report_directory": self.report_directory,
            "log_level": self.log_level,
            "record_timing": self.record_timing
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SettingsEntity':
        """Create settings from dictionary"""
        settings = cls()
        for key, value in data.items():
            if hasattr(settings, key):
                setattr(settings, key, value)
        return settings
