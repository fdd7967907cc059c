"""Bundled fixture corpora.

Two extracts ship with the package: an eight-plant survey extract with
full profiles (names, uses, parts, media) and an eighteen-row
respondent-opinion extract. The merged corpus keeps every opinion row;
the duplicated Rauwolfia vomitoria row lives under a suffixed id.
"""

from __future__ import annotations

import json
from importlib import resources

from .serialize import import_records
from .store import RecordStore

TABLE_PLANTS = "plants_extract.json"
TABLE_OPINIONS = "opinion_survey.json"


def fixture_text(name: str) -> str:
    """Raw text of a bundled fixture file."""
    return resources.files("phytobase").joinpath(f"data/fixtures/{name}").read_text("utf-8")


def _import_strict(store: RecordStore, text: str) -> None:
    report = import_records(store, text, format="json")
    if report.rejected:
        locator, validation = report.rejected[0]
        raise RuntimeError(f"fixture corpus rejected at {locator}: {validation.errors}")


def load_plants_store() -> RecordStore:
    """The eight-plant extract as a fresh in-memory store."""
    store = RecordStore()
    _import_strict(store, fixture_text(TABLE_PLANTS))
    return store


def load_opinions_store() -> RecordStore:
    """The eighteen opinion assessments, one record per printed row."""
    store = RecordStore()
    _import_strict(store, fixture_text(TABLE_OPINIONS))
    return store


def load_full_store() -> RecordStore:
    """Both extracts merged into one corpus.

    Zingiber officinale appears in both fixtures; the plant extract's
    record (which already carries the same opinion distribution) wins,
    leaving 25 records with all 18 assessments present.
    """
    store = load_plants_store()
    rows = json.loads(fixture_text(TABLE_OPINIONS))
    remainder = [obj for obj in rows if obj.get("id") not in store]
    _import_strict(store, json.dumps(remainder))
    return store
