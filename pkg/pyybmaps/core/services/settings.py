#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Settings Management Services for PyYBMaps

Handles loading stored defaults and layering command-line overrides on top.
"""

import logging
from dataclasses import replace
from typing import Any, Dict, Optional

from ..interfaces.settings_repository import SettingsRepositoryInterface
from ..entities.settings import SettingsEntity

logger = logging.getLogger(__name__)


class SettingsManagementService:
    """Service for settings management operations"""

    def __init__(self, settings_repository: SettingsRepositoryInterface):
        self.settings_repository = settings_repository

    def load_settings(self) -> SettingsEntity:
        """Load stored settings, defaults when nothing usable is stored"""
        settings = self.settings_repository.load_settings()
        if settings is None:
            return self.get_default_settings()
        return settings

    def save_settings(self, settings: SettingsEntity) -> bool:
        return self.settings_repository.save_settings(settings)

    def get_default_settings(self) -> SettingsEntity:
        return self.settings_repository.get_default_settings()

    def update_setting(self, settings: SettingsEntity, key: str, value) -> bool:
        """Update a specific setting"""
        if hasattr(settings, key):
            setattr(settings, key, value)
            return True
        return False

    def merge_overrides(self, settings: SettingsEntity,
                        overrides: Optional[Dict[str, Any]]) -> SettingsEntity:
        """Command-line values win over stored ones; None means not given"""
        given = {}
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if hasattr(settings, key):
                given[key] = value
            else:
                logger.debug("Ignoring unknown override %s", key)
        merged = replace(settings, **given)
        if not merged.validate():
            raise ValueError(f"Invalid settings after overrides: {given}")
        return merged

    def validate_settings(self, settings: SettingsEntity) -> bool:
        return settings.validate()
