"""Language tags and localized narration-label catalogs.

Five languages ship built in (en, yo, ha, ig, fr). Registering a new
language requires a complete label catalog: one label per narration
segment, checked eagerly so a half-translated catalog fails at
registration time rather than mid-narration.
"""

from __future__ import annotations

import re
from importlib import resources

from .errors import DuplicateLanguageError, LabelCatalogError, UnknownLanguageError

#: The nine narration segments, in their fixed narration order.
SEGMENT_KEYS: tuple[str, ...] = (
    "name",
    "family",
    "description",
    "uses",
    "parts",
    "preparations",
    "contraindications",
    "toxicity",
    "interactions",
)

_TAG_RE = re.compile(r"^[a-z]{2}$")


def is_valid_tag(code: str) -> bool:
    """Lowercase two-letter shape check (does not imply registration)."""
    return bool(_TAG_RE.match(code))


class LanguageRegistry:
    """Registry of language tags with their segment-label catalogs."""

    def __init__(self) -> None:
        self._catalogs: dict[str, dict[str, str]] = {}

    def register(self, code: str, labels: dict[str, str]) -> None:
        if not is_valid_tag(code):
            raise LabelCatalogError(f"language tag {code!r} must be two lowercase letters")
        if code in self._catalogs:
            raise DuplicateLanguageError(f"language {code!r} is already registered")
        missing = [k for k in SEGMENT_KEYS if not labels.get(k, "").strip()]
        if missing:
            raise LabelCatalogError(
                f"catalog for {code!r} is missing labels: {', '.join(missing)}"
            )
        unknown = sorted(set(labels) - set(SEGMENT_KEYS))
        if unknown:
            raise LabelCatalogError(
                f"catalog for {code!r} has unknown keys: {', '.join(unknown)}"
            )
        self._catalogs[code] = {k: labels[k].strip() for k in SEGMENT_KEYS}

    def is_registered(self, code: str) -> bool:
        return code in self._catalogs

    def labels(self, code: str) -> dict[str, str]:
        try:
            return self._catalogs[code]
        except KeyError:
            raise UnknownLanguageError(f"language {code!r} is not registered") from None

    def tags(self) -> list[str]:
        return sorted(self._catalogs)


def parse_catalog(text: str, source: str = "<catalog>") -> dict[str, str]:
    """Parse a ``key = value`` label catalog document."""
    labels: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise LabelCatalogError(f"{source}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        labels[key.strip()] = value.strip()
    return labels


def _load_builtin_registry() -> LanguageRegistry:
    registry = LanguageRegistry()
    labels_dir = resources.files("phytobase").joinpath("data/labels")
    for entry in sorted(labels_dir.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".labels"):
            continue
        code = entry.name.removesuffix(".labels")
        registry.register(code, parse_catalog(entry.read_text("utf-8"), entry.name))
    if not registry.is_registered("en"):
        raise LabelCatalogError("built-in label catalogs are missing 'en'")
    return registry


#: Shared default registry used when callers do not supply their own.
DEFAULT_REGISTRY = _load_builtin_registry()
