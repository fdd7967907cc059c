"""Controlled vocabularies: ailment codes, plant parts, market status.

The built-in ailment code table carries the twenty codes used throughout
the bundled corpus. A corpus may register additional codes at import time;
built-ins are never removable and the code/full-name mapping stays a
bijection within one corpus.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import CodeConflictError, UnknownCodeError

# ---- ailment codes ----

#: Built-in code -> full name. Full names are kept exactly as curated,
#: including the source data's spelling of "Infecions".
BUILTIN_AILMENT_CODES: dict[str, str] = {
    "ANA": "Anaemia",
    "AST": "Asthma",
    "CAN": "Cancer",
    "DMT": "Dermatitis",
    "DYS": "Dysmenorrhoea",
    "EPL": "Epilepsy",
    "EYE": "Eye pain",
    "GNO": "Gonorrhoea",
    "HEP": "Hepatitis",
    "IMP": "Impotence",
    "INF": "Infertility",
    "PIL": "Piles",
    "LEP": "Leprosy",
    "MI": "Male Infertility",
    "OBE": "Obesity",
    "OED": "Oedema",
    "RIC": "Rickets",
    "STR": "Stroke",
    "URT": "Urinary Tract Infecions",
    "WI": "Women Infertility",
}

_CODE_RE = re.compile(r"^[A-Z]{2,4}$")


@dataclass(frozen=True)
class AilmentCode:
    """A disease/ailment code and its expansion."""

    code: str
    full_name: str


class CodeTable:
    """Per-corpus ailment code registry.

    Starts with the built-in codes; accepts extra registrations as long as
    both the code and the full name stay unique (case-insensitively).
    """

    def __init__(self) -> None:
        self._by_code: dict[str, AilmentCode] = {
            code: AilmentCode(code, name) for code, name in BUILTIN_AILMENT_CODES.items()
        }
        self._by_name: dict[str, str] = {
            name.casefold(): code for code, name in BUILTIN_AILMENT_CODES.items()
        }

    def __contains__(self, code: str) -> bool:
        return code.upper() in self._by_code

    def __len__(self) -> int:
        return len(self._by_code)

    def codes(self) -> list[AilmentCode]:
        """All codes, sorted alphabetically."""
        return [self._by_code[c] for c in sorted(self._by_code)]

    def resolve(self, code: str) -> AilmentCode:
        """Look up a code case-insensitively; raises UnknownCodeError."""
        entry = self._by_code.get(code.strip().upper())
        if entry is None:
            raise UnknownCodeError(f"unknown ailment code {code.strip().upper()!r}")
        return entry

    def lookup_name(self, full_name: str) -> AilmentCode | None:
        """Find a code by its full name, or None."""
        code = self._by_name.get(full_name.strip().casefold())
        return self._by_code[code] if code else None

    def register(self, code: str, full_name: str) -> AilmentCode:
        """Add a code; idempotent when code and name both match an entry."""
        code = code.strip().upper()
        full_name = full_name.strip()
        if not _CODE_RE.match(code):
            raise CodeConflictError(f"code {code!r} must be 2-4 ASCII letters")
        if not full_name:
            raise CodeConflictError(f"code {code!r} needs a nonempty full name")
        existing = self._by_code.get(code)
        if existing is not None:
            if existing.full_name.casefold() == full_name.casefold():
                return existing
            raise CodeConflictError(
                f"code {code!r} already means {existing.full_name!r}"
            )
        claimed = self._by_name.get(full_name.casefold())
        if claimed is not None:
            raise CodeConflictError(
                f"full name {full_name!r} is already assigned to code {claimed!r}"
            )
        entry = AilmentCode(code, full_name)
        self._by_code[code] = entry
        self._by_name[full_name.casefold()] = code
        return entry

    def extras(self) -> list[AilmentCode]:
        """Registered codes that are not built-ins (for persistence)."""
        return [
            entry
            for code, entry in sorted(self._by_code.items())
            if code not in BUILTIN_AILMENT_CODES
        ]


_DEFAULT_TABLE = CodeTable()


def resolve_ailment_code(code: str, table: CodeTable | None = None) -> AilmentCode:
    """Resolve a code against a corpus table (built-ins when table is None)."""
    return (table or _DEFAULT_TABLE).resolve(code)


# ---- plant parts ----

_PART_ORDER = [
    "Root",
    "Leaf",
    "Stem",
    "Rhizome",
    "Seed",
    "Fruit",
    "Bark",
    "Flower",
    "Tuber",
    "Frond",
    "Exudate",
    "WholePlant",
    "Other",
]

_PART_SYNONYMS = {
    "root": "Root",
    "roots": "Root",
    "leaf": "Leaf",
    "leaves": "Leaf",
    "stem": "Stem",
    "stems": "Stem",
    "rhizome": "Rhizome",
    "rhizomes": "Rhizome",
    "seed": "Seed",
    "seeds": "Seed",
    "fruit": "Fruit",
    "fruits": "Fruit",
    "bark": "Bark",
    "flower": "Flower",
    "flowers": "Flower",
    "tuber": "Tuber",
    "tubers": "Tuber",
    "frond": "Frond",
    "fronds": "Frond",
    "exudate": "Exudate",
    "exudates": "Exudate",
    "latex": "Exudate",
    "whole plant": "WholePlant",
    "wholeplant": "WholePlant",
    "whole-plant": "WholePlant",
}


@dataclass(frozen=True)
class PlantPart:
    """A plant part token; Other carries free text for unlisted parts."""

    token: str
    detail: str | None = None

    def __post_init__(self) -> None:
        if self.token not in _PART_ORDER:
            raise ValueError(f"unknown part token {self.token!r}")
        if self.token == "Other" and not (self.detail and self.detail.strip()):
            raise ValueError("Other part needs nonempty detail text")
        if self.token != "Other" and self.detail is not None:
            raise ValueError("detail is only valid on Other")

    @classmethod
    def parse(cls, text: str) -> "PlantPart":
        """Parse a part name; tolerates plurals, case, and stray periods."""
        cleaned = re.sub(r"[.\s]+", " ", text).strip().casefold()
        token = _PART_SYNONYMS.get(cleaned)
        if token:
            return cls(token)
        if not cleaned:
            raise ValueError("blank plant part")
        return cls("Other", text.strip())

    @property
    def display_name(self) -> str:
        if self.token == "Other":
            return str(self.detail)
        if self.token == "WholePlant":
            return "Whole plant"
        return self.token

    def key(self) -> tuple[str, str | None]:
        """Comparison key: case-insensitive on Other detail."""
        return (self.token, self.detail.casefold() if self.detail else None)

    def sort_index(self) -> tuple[int, str]:
        return (_PART_ORDER.index(self.token), self.detail or "")


def sorted_parts(parts) -> list[PlantPart]:
    """Deterministic ordering for serialization and display."""
    return sorted(parts, key=PlantPart.sort_index)


# ---- market status ----


class MarketStatus(enum.Enum):
    """Trade-availability trend of a plant on local markets."""

    DECREASED = "Decreased"
    INCREASED = "Increased"
    PERSISTENT = "Persistent"

    @classmethod
    def parse(cls, text: str) -> "MarketStatus":
        """Accepts the single-letter codes D/I/P or full words, any case."""
        cleaned = text.strip().casefold()
        for member in cls:
            if cleaned in (member.value.casefold(), member.value[0].casefold()):
                return member
        raise ValueError(f"not a market status: {text!r}")
