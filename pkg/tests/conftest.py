"""Shared fixtures: one unverified catalog per test session."""
import pytest

from src.catalog.builtin import Catalog
from src.scalar.field import FieldContext


@pytest.fixture(scope="session")
def catalog():
    return Catalog(verify=False)


@pytest.fixture(scope="session")
def qq():
    return FieldContext.transcendental()


@pytest.fixture(scope="session")
def glq2(catalog):
    return catalog.load("glq2")


@pytest.fixture(scope="session")
def aq2(catalog):
    return catalog.load("aq2")


@pytest.fixture(scope="session")
def bglq2(catalog):
    return catalog.load("bglq2")


@pytest.fixture(scope="session")
def z2prime(catalog):
    return catalog.load("z2prime")


@pytest.fixture(scope="session")
def superline(catalog):
    return catalog.load("superline")


@pytest.fixture(scope="session")
def braided_line(catalog):
    return catalog.load("braided_line")
