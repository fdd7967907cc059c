"""Shared fixtures: fresh fixture-corpus stores per test."""

import pytest

from phytobase.fixtures import load_full_store, load_opinions_store, load_plants_store


@pytest.fixture
def plants_store():
    return load_plants_store()


@pytest.fixture
def opinions_store():
    return load_opinions_store()


@pytest.fixture
def full_store():
    return load_full_store()
