#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

import pytest

from pyybmaps.application.di_container import DIContainer
from pyybmaps.application.map_registry import BASE_MATRICES
from pyybmaps.application.suite_runner import SuiteRunner, payload_passed
from pyybmaps.application.suites import Suite, SuiteCatalogue, TrialOutcome, build_default_catalogue
from pyybmaps.core.entities.settings import SettingsEntity
from pyybmaps.core.errors import DomainError, UnknownSuite


def _fail_odd(ctx):
    return TrialOutcome(ctx.index % 2 == 0, inputs={"index": ctx.index}, message="odd trial")


def _raise(ctx):
    raise RuntimeError("boom")


def _reject_even(ctx):
    if ctx.index % 2 == 0:
        raise DomainError("outside")
    return TrialOutcome(True)


@pytest.fixture
def catalogue():
    catalogue = SuiteCatalogue()
    catalogue.register(Suite("ok", 3, lambda ctx: TrialOutcome(True)))
    catalogue.register(Suite("fail", 3, _fail_odd))
    catalogue.register(Suite("raise", 3, _raise))
    catalogue.register(Suite("reject", 3, _reject_even))
    return catalogue


@pytest.fixture
def runner(catalogue):
    return SuiteRunner(DIContainer.get_instance(), catalogue)


@pytest.fixture
def settings():
    return SettingsEntity(trials=4)


def test_passing_suite(runner, settings):
    report = runner.run_suite("ok", settings)
    assert (report.attempted, report.accepted, report.rejected) == (4, 4, 0)
    assert report.passed
    assert report.wall_ms == 0.0
    assert report.backend == "gaussian-rational"


def test_default_trial_count(runner):
    assert runner.run_suite("ok", SettingsEntity()).attempted == 3


def test_failures_carry_their_inputs(runner, settings):
    report = runner.run_suite("fail", settings)
    assert [f.trial for f in report.failures] == [1, 3]
    assert report.failures[0].inputs == {"index": 1}
    assert report.failures[0].message == "odd trial"
    assert not payload_passed(report.to_dict())


def test_exceptions_are_failures(runner, settings):
    report = runner.run_suite("raise", settings)
    assert report.accepted == 4
    assert {f.message for f in report.failures} == {"RuntimeError: boom"}


def test_domain_errors_are_rejections(runner, settings):
    report = runner.run_suite("reject", settings)
    assert (report.accepted, report.rejected) == (2, 2)
    assert report.passed


def test_unknown_suite(runner, settings):
    with pytest.raises(UnknownSuite):
        runner.run_suite("nope", settings)


def test_run_all(runner, settings):
    payload = runner.run("all", settings)
    assert [s["suite"] for s in payload["suites"]] == ["ok", "fail", "raise", "reject"]
    assert payload["wall_ms"] == 0.0
    assert not payload_passed(payload)
    assert payload_passed(runner.run_all(settings, names=["ok", "reject"]))


def test_catalogue():
    catalogue = SuiteCatalogue()
    catalogue.register(Suite("ok", 1, lambda ctx: TrialOutcome(True)))
    with pytest.raises(ValueError):
        catalogue.register(Suite("ok", 2, lambda ctx: TrialOutcome(True)))
    assert "ok" in catalogue
    assert len(catalogue) == 1


def test_default_catalogue_names_are_unique():
    catalogue = build_default_catalogue()
    names = catalogue.names()
    assert len(names) == len(set(names)) == len(catalogue)
    assert "limits/kdv" in catalogue
    assert catalogue.get("jacobian/finite-difference").backend == "complex64"


def test_report_does_not_depend_on_workers():
    runner = SuiteRunner(DIContainer.get_instance())
    serial = runner.run_suite("refactor/identity", SettingsEntity(trials=6, workers=1))
    pooled = runner.run_suite("refactor/identity", SettingsEntity(trials=6, workers=4))
    assert serial.to_dict() == pooled.to_dict()


def test_forced_backend():
    runner = SuiteRunner(DIContainer.get_instance())
    report = runner.run_suite("field/dual-derivative", SettingsEntity(trials=2))
    assert report.backend == "complex64"


SLOW_PREFIXES = ("poisson/", "jacobian/", "limits/")


def _catalogue_params():
    for name in build_default_catalogue().names():
        marks = [pytest.mark.slow] if name.startswith(SLOW_PREFIXES) else []
        yield pytest.param(name, marks=marks, id=name)


@pytest.mark.parametrize("name", list(_catalogue_params()))
def test_every_default_suite_passes(name):
    runner = SuiteRunner(DIContainer.get_instance())
    report = runner.run_suite(name, SettingsEntity(trials=3))
    assert report.passed, report.to_dict()
    assert report.attempted == 3


@pytest.mark.parametrize("key", list(BASE_MATRICES))
def test_general_poisson_suite_per_base_matrix(key):
    suite = build_default_catalogue().get(f"poisson/general-{key}")
    assert suite.default_trials == 50
