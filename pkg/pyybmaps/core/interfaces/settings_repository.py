#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Settings Repository Interface for PyYBMaps

Abstract interface for loading and storing verification defaults.
"""

from abc import ABC, abstractmethod
from typing import Optional

from ..entities.settings import SettingsEntity


class SettingsRepositoryInterface(ABC):
    """Abstract interface for settings repository operations"""

    @abstractmethod
    def load_settings(self) -> Optional[SettingsEntity]:
        """Load stored settings, falling back to defaults"""
        pass

    @abstractmethod
    def save_settings(self, settings: SettingsEntity) -> bool:
        """Persist settings; False on I/O failure"""
        pass

    @abstractmethod
    def get_default_settings(self) -> SettingsEntity:
        """Settings used when nothing is stored"""
        pass

    @abstractmethod
    def location(self) -> str:
        """Where the settings live, for diagnostics"""
        pass
