#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

import pytest

from pyybmaps.core.entities.settings import SettingsEntity
from pyybmaps.core.services.settings import SettingsManagementService
from pyybmaps.infrastructure.persistence.json_settings_repository import JsonSettingsRepository


@pytest.fixture
def service(tmp_path):
    return SettingsManagementService(JsonSettingsRepository(str(tmp_path / "settings.json")))


def test_overrides_win_and_none_means_not_given(service):
    stored = SettingsEntity(seed=5, workers=2)
    merged = service.merge_overrides(stored, {"seed": 11, "workers": None, "trials": 3})
    assert merged.seed == 11
    assert merged.workers == 2
    assert merged.trials == 3
    assert stored.seed == 5


def test_unknown_overrides_are_ignored(service):
    merged = service.merge_overrides(SettingsEntity(), {"colour": "blue"})
    assert merged == SettingsEntity()
    assert service.merge_overrides(SettingsEntity(), None) == SettingsEntity()


def test_invalid_overrides_raise(service):
    with pytest.raises(ValueError):
        service.merge_overrides(SettingsEntity(), {"workers": 0})


def test_save_then_load(service):
    settings = service.get_default_settings()
    assert service.update_setting(settings, "tolerance", 1e-6)
    assert not service.update_setting(settings, "colour", "blue")
    assert service.save_settings(settings)
    assert service.load_settings().tolerance == 1e-6
    assert service.validate_settings(settings)
