"""Deterministic narration scripts for text-to-speech adapters.

A narration script is a pure function of (record content, language):
fixed segment order, localized labels from the bundled catalogs, field
content passed through verbatim except that ailment codes expand to
their full names. No speech is synthesized here; adapters (external
processes, browser speech) consume the plain-text rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .languages import DEFAULT_REGISTRY, SEGMENT_KEYS, LanguageRegistry
from .model import PlantRecord


@dataclass(frozen=True)
class NarrationSegment:
    """One spoken line: a localized label plus the field content."""

    label: str
    body: str

    def __post_init__(self) -> None:
        if not self.body.strip():
            raise ValueError("segment body must be nonempty (skip empty fields)")


@dataclass(frozen=True)
class NarrationScript:
    """Ordered narration segments for one record in one language."""

    language: str
    segments: tuple[NarrationSegment, ...]
    record_id: str
    record_revision: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))


def _segment_bodies(record: PlantRecord) -> dict[str, str]:
    """Raw body text per segment key; empty strings mean "skip"."""
    uses = ", ".join(
        dict.fromkeys(use.ailment.full_name for use in record.uses)
    )
    parts = ", ".join(p.display_name for p in record.all_parts())

    preparations: dict[str, None] = {}
    for use in record.uses:
        if use.preparation:
            preparations.setdefault(use.preparation)
        if use.dosage:
            preparations.setdefault(use.dosage)

    interactions = "; ".join(
        f"{d.agent}: {d.effect}" + (f" ({d.severity_note})" if d.severity_note else "")
        for d in record.drug_interactions
    )

    return {
        "name": record.scientific_name.raw,
        "family": record.family,
        "description": record.description,
        "uses": uses,
        "parts": parts,
        "preparations": ", ".join(preparations),
        "contraindications": "; ".join(record.contraindications),
        "toxicity": record.toxicity or "",
        "interactions": interactions,
    }


def build_narration(
    record: PlantRecord,
    language: str,
    revision: int = 0,
    registry: LanguageRegistry | None = None,
) -> NarrationScript:
    """Build the narration script for a record in a registered language.

    Segment order is fixed (name, family, description, uses, parts,
    preparations, contraindications, toxicity, interactions); empty
    fields are skipped rather than narrated.
    """
    catalog = (registry or DEFAULT_REGISTRY).labels(language)
    bodies = _segment_bodies(record)
    segments = tuple(
        NarrationSegment(label=catalog[key], body=bodies[key])
        for key in SEGMENT_KEYS
        if bodies[key].strip()
    )
    return NarrationScript(
        language=language,
        segments=segments,
        record_id=record.id,
        record_revision=revision,
    )


def render_narration_plaintext(script: NarrationScript) -> str:
    """Plain-text rendering: one ``Label: body.`` line per segment.

    A closing period is added only when the body does not already end in
    sentence punctuation, so authorities like "L." never double up.
    """
    lines = []
    for segment in script.segments:
        body = segment.body
        terminal = "" if body.endswith((".", "!", "?")) else "."
        lines.append(f"{segment.label}: {body}{terminal}\n")
    return "".join(lines)
