#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Shared pytest fixtures for PyYBMaps
"""

import random

import pytest

from pyybmaps.application.di_container import DIContainer, ServiceBundle
from pyybmaps.core.entities.fields import ComplexFloatField, GaussianRationalField
from pyybmaps.core.entities.mat2 import Mat2


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running verification suites, deselect with -m \"not slow\"")


@pytest.fixture
def exact():
    return GaussianRationalField()


@pytest.fixture
def floating():
    return ComplexFloatField()


@pytest.fixture
def services(exact):
    return ServiceBundle.build(exact)


@pytest.fixture
def float_services(floating):
    return ServiceBundle.build(floating)


@pytest.fixture
def mat(exact):
    """Exact Mat2 from nested rows"""
    def build(rows):
        return Mat2.from_rows(rows, exact)
    return build


@pytest.fixture
def rng():
    return random.Random(20250101)


@pytest.fixture(autouse=True)
def fresh_container():
    DIContainer.reset_instance()
    yield
    DIContainer.reset_instance()
