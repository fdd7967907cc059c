"""Plant record schema, scientific-name parsing, and record validation.

A PlantRecord holds one plant's full profile: names, uses, provenance,
safety data, media references, and optional conservation assessment.
Records are immutable values; all mutation goes through the store.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, fields

from .errors import EmptyNameError, MalformedNameError, UnknownCodeError
from .languages import DEFAULT_REGISTRY, LanguageRegistry, is_valid_tag
from .media import MediaManifest, scheme_allowed, uri_scheme
from .status import ConservationAssessment, classify_opinions
from .vocab import AilmentCode, CodeTable, MarketStatus, PlantPart

# ---- scientific names ----

_GENUS_RE = re.compile(r"^[A-Z][A-Za-z-]*$")
_EPITHET_RE = re.compile(r"^[a-z][a-z-]*$")


@dataclass(frozen=True)
class CanonicalName:
    """A parsed Latin binomial with optional author abbreviation.

    ``raw`` preserves the original input byte for byte; the structured
    fields are what search and narration work from.
    """

    genus: str
    epithet: str
    authority: str | None
    raw: str

    def canonical(self) -> str:
        """Normalized rendering: ``Genus epithet Authority``."""
        parts = [self.genus, self.epithet]
        if self.authority:
            parts.append(self.authority)
        return " ".join(parts)


def parse_scientific_name(raw: str) -> CanonicalName:
    """Split a botanical name into genus, species epithet, and authority.

    The first token is the genus (capitalized), the second the epithet
    (lowercase Latin letters and hyphens), and anything left becomes the
    uninterpreted authority string. Misspellings are preserved; this is a
    format check, not a taxonomic one.
    """
    if not raw or not raw.strip():
        raise EmptyNameError("scientific name is blank")
    tokens = raw.split()
    if len(tokens) < 2:
        raise MalformedNameError(
            f"expected at least genus and epithet, got {raw.strip()!r}"
        )
    genus, epithet = tokens[0], tokens[1]
    if not _GENUS_RE.match(genus):
        raise MalformedNameError(f"genus {genus!r} must be a capitalized Latin word")
    if not _EPITHET_RE.match(epithet):
        raise MalformedNameError(
            f"epithet {epithet!r} must be lowercase Latin letters or hyphens"
        )
    authority = " ".join(tokens[2:]) or None
    return CanonicalName(genus=genus, epithet=epithet, authority=authority, raw=raw)


_SLUG_STRIP_RE = re.compile(r"[^a-z0-9]+")


def slug_for(name: CanonicalName) -> str:
    """Base identifier slug: ``genus-epithet``."""
    genus = _SLUG_STRIP_RE.sub("", name.genus.casefold())
    epithet = _SLUG_STRIP_RE.sub("", name.epithet.casefold())
    return f"{genus}-{epithet}"


def allocate_id(name: CanonicalName, taken) -> str:
    """Slug id, with a numeric suffix when the slug is already taken."""
    base = slug_for(name)
    if base not in taken:
        return base
    n = 2
    while f"{base}-{n}" in taken:
        n += 1
    return f"{base}-{n}"


# ---- record components ----


@dataclass(frozen=True)
class LocalizedName:
    """A vernacular name tagged with its language."""

    text: str
    language: str


@dataclass(frozen=True)
class UseEntry:
    """One medicinal use: the ailment plus how the plant is applied."""

    ailment: AilmentCode
    parts_used: frozenset[PlantPart] = frozenset()
    preparation: str | None = None
    dosage: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts_used", frozenset(self.parts_used))


@dataclass(frozen=True)
class DrugInteraction:
    """A known interaction with a drug or drug class."""

    agent: str
    effect: str
    severity_note: str | None = None


@dataclass(frozen=True)
class PlantRecord:
    """One plant's complete knowledge-base entry."""

    id: str
    scientific_name: CanonicalName
    family: str = ""
    common_names: tuple[str, ...] = ()
    synonyms: tuple[str, ...] = ()
    local_names: tuple[LocalizedName, ...] = ()
    description: str = ""
    uses: tuple[UseEntry, ...] = ()
    areas_of_origin: tuple[str, ...] = ()
    contraindications: tuple[str, ...] = ()
    phytoconstituents: tuple[str, ...] = ()
    adverse_reactions: tuple[str, ...] = ()
    toxicity: str | None = None
    pharmacology: str | None = None
    drug_interactions: tuple[DrugInteraction, ...] = ()
    media: MediaManifest = field(default_factory=MediaManifest)
    sources: tuple[str, ...] = ()
    conservation: ConservationAssessment | None = None
    market_status: MarketStatus | None = None

    def __post_init__(self) -> None:
        for name in (
            "common_names",
            "synonyms",
            "local_names",
            "uses",
            "areas_of_origin",
            "contraindications",
            "phytoconstituents",
            "adverse_reactions",
            "drug_interactions",
            "sources",
        ):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def ailment_codes(self) -> list[str]:
        """Distinct use codes in first-appearance order."""
        return list(dict.fromkeys(use.ailment.code for use in self.uses))

    def all_parts(self) -> list[PlantPart]:
        """Distinct parts across all uses, in first-appearance order."""
        seen: dict[tuple, PlantPart] = {}
        for use in self.uses:
            for part in sorted(use.parts_used, key=PlantPart.sort_index):
                seen.setdefault(part.key(), part)
        return list(seen.values())

    def effective_status(self):
        return self.conservation.effective_status() if self.conservation else None


# ---- validation ----

Issue = tuple[str, str]


@dataclass(frozen=True)
class ValidationReport:
    """Validation outcome: errors block storage, warnings never do."""

    errors: tuple[Issue, ...] = ()
    warnings: tuple[Issue, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "errors", tuple(self.errors))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_json_dict(self) -> dict:
        return {
            "errors": [{"field": f, "message": m} for f, m in self.errors],
            "warnings": [{"field": f, "message": m} for f, m in self.warnings],
        }


_PART_WORD_RE = re.compile(
    r"\b(roots?|leaf|leaves|stems?|rhizomes?|seeds?|fruits?|bark|flowers?"
    r"|tubers?|fronds?|exudates?|latex|whole[ -]?plant)\b",
    re.IGNORECASE,
)


def validate_record(
    record: PlantRecord,
    code_table: CodeTable | None = None,
    language_registry: LanguageRegistry | None = None,
) -> ValidationReport:
    """Check a record against the schema; never raises.

    Errors: missing/malformed scientific name, duplicate use entries,
    unknown ailment codes, structurally broken sub-entries. Warnings:
    empty sources, opinion sums off 100, media refs with unrecognized
    schemes, unregistered language tags.
    """
    table = code_table or CodeTable()
    registry = language_registry or DEFAULT_REGISTRY
    errors: list[Issue] = []
    warnings: list[Issue] = []

    if not record.id or not record.id.strip():
        errors.append(("id", "missing"))

    name = record.scientific_name
    if name is None or not name.raw.strip():
        errors.append(("scientific_name", "missing"))
    else:
        if not name.genus or not _GENUS_RE.match(name.genus):
            errors.append(("scientific_name", f"invalid genus {name.genus!r}"))
        if not name.epithet or not _EPITHET_RE.match(name.epithet):
            errors.append(("scientific_name", f"invalid epithet {name.epithet!r}"))

    seen_uses: set[tuple[str, str | None]] = set()
    for i, use in enumerate(record.uses):
        path = f"uses[{i}]"
        try:
            known = table.resolve(use.ailment.code)
        except UnknownCodeError:
            errors.append((f"{path}.ailment", f"unknown ailment code {use.ailment.code!r}"))
        else:
            if known.full_name.casefold() != use.ailment.full_name.casefold():
                errors.append(
                    (
                        f"{path}.ailment",
                        f"code {use.ailment.code!r} means {known.full_name!r} in this corpus",
                    )
                )
        dup_key = (use.ailment.code.upper(), use.preparation)
        if dup_key in seen_uses:
            errors.append(("uses", f"duplicate use entry {dup_key!r}"))
        seen_uses.add(dup_key)
        if use.preparation and not use.parts_used and _PART_WORD_RE.search(use.preparation):
            errors.append(
                (f"{path}.parts_used", "empty although the preparation names a plant part")
            )

    for i, local in enumerate(record.local_names):
        path = f"local_names[{i}]"
        if not local.text.strip():
            errors.append((path, "blank name"))
        if not is_valid_tag(local.language):
            errors.append((f"{path}.language", f"malformed language tag {local.language!r}"))
        elif not registry.is_registered(local.language):
            warnings.append((f"{path}.language", f"unregistered language {local.language!r}"))

    for i, interaction in enumerate(record.drug_interactions):
        if not interaction.agent.strip():
            errors.append((f"drug_interactions[{i}].agent", "blank agent"))

    for i, ref in enumerate(record.media):
        path = f"media.items[{i}]"
        if not ref.uri.strip():
            errors.append((path, "blank uri"))
        elif not scheme_allowed(ref.uri):
            warnings.append((path, f"unrecognized scheme {uri_scheme(ref.uri)!r}"))

    assessment = record.conservation
    if assessment is not None and assessment.opinions is not None:
        total = assessment.opinions.total()
        if not 99 <= total <= 101:
            warnings.append(
                ("conservation.opinions", f"percentages sum to {total:g}, expected ~100")
            )
        if (
            assessment.paper_status is not None
            and not assessment.manual_override
            and total > 0
            and classify_opinions(assessment.opinions) is not assessment.paper_status
        ):
            errors.append(
                (
                    "conservation.paper_status",
                    "disagrees with the opinion classification (set manual_override to keep it)",
                )
            )

    if not record.sources:
        warnings.append(("sources", "empty"))

    return ValidationReport(errors=tuple(errors), warnings=tuple(warnings))


#: Field names of PlantRecord in schema order, used by the serializers.
RECORD_FIELDS: tuple[str, ...] = tuple(f.name for f in fields(PlantRecord))
