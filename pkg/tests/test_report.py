#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from pyybmaps.core.entities.report import SCHEMA_VERSION, TrialFailure, VerificationReport
from pyybmaps.core.entities.settings import SettingsEntity


def _report(**overrides):
    data = dict(suite="refactor/identity", backend="gaussian-rational", seed=42,
                attempted=10, accepted=8, rejected=2)
    data.update(overrides)
    return VerificationReport(**data)


def test_report_counts_must_add_up():
    assert _report().validate()
    assert not _report(rejected=3).validate()
    failures = [TrialFailure(trial=i, inputs=None, lhs=None, rhs=None) for i in range(9)]
    assert not _report(failures=failures).validate()


def test_report_payload_layout():
    report = _report(failures=[
        TrialFailure(trial=5, inputs={"x": "1+0i"}, lhs="2+0i", rhs="3+0i", message="mismatch"),
        TrialFailure(trial=2, inputs={"x": "0+0i"}, lhs="1+0i", rhs="0+0i"),
    ])
    data = report.to_dict()
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["trials"] == {"attempted": 10, "accepted": 8, "rejected": 2}
    assert [f["trial"] for f in data["failures"]] == [2, 5]
    assert "message" not in data["failures"][0]
    assert data["failures"][1]["message"] == "mismatch"
    assert not report.passed
    assert report.first_counterexample.trial == 2


def test_report_from_dict_restores_the_payload():
    report = _report(failures=[TrialFailure(trial=3, inputs=[1], lhs=None, rhs=None, message="boom")])
    again = VerificationReport.from_dict(report.to_dict())
    assert again.to_dict() == report.to_dict()
    assert _report().passed
    assert _report().first_counterexample is None


def test_settings_defaults_validate():
    settings = SettingsEntity()
    assert settings.validate()
    assert settings.field_backend == "gaussian-rational"
    assert settings.trials is None
    assert SettingsEntity.from_dict(settings.to_dict()) == settings


def test_settings_validation_rejects_bad_values():
    assert not SettingsEntity(field_backend="float16").validate()
    assert not SettingsEntity(seed=-1).validate()
    assert not SettingsEntity(seed=True).validate()
    assert not SettingsEntity(trials=0).validate()
    assert not SettingsEntity(tolerance=-1e-3).validate()
    assert not SettingsEntity(workers=0).validate()
    assert not SettingsEntity(log_level="LOUD").validate()
    assert not SettingsEntity(record_timing="yes").validate()
    assert SettingsEntity(log_level="debug").validate()


def test_settings_from_dict_ignores_unknown_keys():
    settings = SettingsEntity.from_dict({"seed": 7, "theme": "dark"})
    assert settings.seed == 7
    assert not hasattr(settings, "theme")
