#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
JSON Settings Repository Implementation
"""

import json
import logging
import os
from typing import Optional

from appdirs import user_config_dir

from ...core.interfaces.settings_repository import SettingsRepositoryInterface
from ...core.entities.settings import SettingsEntity

logger = logging.getLogger(__name__)

APP_NAME = "pyybmaps"


class JsonSettingsRepository(SettingsRepositoryInterface):
    def __init__(self, file_path: Optional[str] = None):
        if file_path is None:
            config_dir = user_config_dir(APP_NAME)
            self.file_path = os.path.join(config_dir, "settings.json")
        else:
            self.file_path = file_path

    def load_settings(self) -> Optional[SettingsEntity]:
        if not os.path.exists(self.file_path):
            return self.get_default_settings()

        try:
            with open(self.file_path, 'r', encoding="utf-8") as f:
                data = json.load(f)
            settings = SettingsEntity.from_dict(data)
        except (OSError, ValueError, TypeError, AttributeError) as e:
            logger.error("Error loading settings from %s: %s", self.file_path, e)
            return self.get_default_settings()

        if not settings.validate():
            logger.warning("Invalid settings in %s, using defaults", self.file_path)
            return self.get_default_settings()
        return settings

    def save_settings(self, settings: SettingsEntity) -> bool:
        try:
            os.makedirs(os.path.dirname(self.file_path) or ".", exist_ok=True)
            with open(self.file_path, 'w', encoding="utf-8") as f:
                json.dump(settings.to_dict(), f, indent=4)
            return True
        except OSError as e:
            logger.error("Error saving settings to %s: %s", self.file_path, e)
            return False

    def get_default_settings(self) -> SettingsEntity:
        return SettingsEntity()

    def location(self) -> str:
        return self.file_path
