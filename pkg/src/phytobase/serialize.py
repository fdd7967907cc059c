"""Record serialization: canonical JSON, tabular CSV, import and export.

JSON is the lossless canonical format: a top-level array of record
objects with keys in schema order. CSV carries exactly the survey sheet's
eighteen columns; multi-valued fields join with "|", use entries encode
as ``CODE:part1+part2:preparation:dosage``, and media flatten to bare
URIs (kind is re-guessed from the extension on import).

Exports are deterministic: records sort by id and keys keep schema order,
so export -> import -> export is byte-stable.
"""

from __future__ import annotations

import csv
import datetime
import io
import json
from dataclasses import dataclass, field

from .errors import (
    CodeConflictError,
    EmptyNameError,
    InvalidRecordError,
    MalformedNameError,
    MalformedSourceError,
    UnknownCodeError,
)
from .languages import is_valid_tag
from .media import MediaKind, MediaManifest, MediaRef, guess_kind
from .model import (
    CanonicalName,
    DrugInteraction,
    LocalizedName,
    PlantRecord,
    UseEntry,
    ValidationReport,
    allocate_id,
    parse_scientific_name,
    validate_record,
)
from .status import ConservationAssessment, IUCNCategory, OpinionDistribution, PaperStatus
from .vocab import CodeTable, MarketStatus, PlantPart, sorted_parts

MULTI_SEP = "|"

CSV_COLUMNS = (
    "Scientific/Botanical Name",
    "Family Name",
    "Common Name",
    "Synonyms",
    "Local Names (Yoruba Lang)",
    "Description",
    "Medicinal Uses",
    "Parts Used",
    "Area(s) of Origin",
    "Preparations / Dosage",
    "Contraindications",
    "Phytoconstituents",
    "Adverse Reactions",
    "Toxicity",
    "Pharmacology",
    "Drug interactions",
    "Picture",
    "Published Source(s)",
)


# ---- JSON encoding ----


def record_to_json_dict(record: PlantRecord) -> dict:
    """Canonical JSON object for one record, keys in schema order."""
    name = record.scientific_name
    conservation = record.conservation
    return {
        "id": record.id,
        "scientific_name": {
            "genus": name.genus,
            "epithet": name.epithet,
            "authority": name.authority,
            "raw": name.raw,
        },
        "family": record.family,
        "common_names": list(record.common_names),
        "synonyms": list(record.synonyms),
        "local_names": [
            {"text": n.text, "language": n.language} for n in record.local_names
        ],
        "description": record.description,
        "uses": [
            {
                "ailment": {"code": u.ailment.code, "full_name": u.ailment.full_name},
                "parts_used": [p.display_name for p in sorted_parts(u.parts_used)],
                "preparation": u.preparation,
                "dosage": u.dosage,
            }
            for u in record.uses
        ],
        "areas_of_origin": list(record.areas_of_origin),
        "contraindications": list(record.contraindications),
        "phytoconstituents": list(record.phytoconstituents),
        "adverse_reactions": list(record.adverse_reactions),
        "toxicity": record.toxicity,
        "pharmacology": record.pharmacology,
        "drug_interactions": [
            {"agent": d.agent, "effect": d.effect, "severity_note": d.severity_note}
            for d in record.drug_interactions
        ],
        "media": {
            "items": [
                {"kind": m.kind.value, "uri": m.uri, "caption": m.caption}
                for m in record.media
            ]
        },
        "sources": list(record.sources),
        "conservation": None
        if conservation is None
        else {
            "paper_status": conservation.paper_status.value
            if conservation.paper_status
            else None,
            "iucn": conservation.iucn.name if conservation.iucn else None,
            "opinions": None
            if conservation.opinions is None
            else conservation.opinions.as_mapping(),
            "market_status": conservation.market_status.value
            if conservation.market_status
            else None,
            "assessed_on": conservation.assessed_on.isoformat()
            if conservation.assessed_on
            else None,
            "manual_override": conservation.manual_override,
        },
        "market_status": record.market_status.value if record.market_status else None,
    }


def _decode_ailment(obj, code_table: CodeTable):
    """Resolve a code reference; objects may register new codes."""
    if isinstance(obj, str):
        return code_table.resolve(obj)
    if isinstance(obj, dict):
        code = str(obj.get("code", "")).strip()
        full_name = str(obj.get("full_name") or "").strip()
        if full_name:
            return code_table.register(code, full_name)
        return code_table.resolve(code)
    raise MalformedSourceError(f"cannot decode ailment reference {obj!r}")


def _decode_opinions(obj) -> OpinionDistribution:
    return OpinionDistribution(
        endangered_pct=float(obj.get("endangered_pct", 0)),
        threatened_pct=float(obj.get("threatened_pct", 0)),
        rare_pct=float(obj.get("rare_pct", 0)),
        common_pct=float(obj.get("common_pct", 0)),
    )


def record_from_json_dict(obj: dict, code_table: CodeTable) -> PlantRecord:
    """Rebuild a record from its canonical JSON object.

    Unknown ailment codes register through their carried full names; a
    bare code string must already be known to the corpus.
    """
    name_obj = obj.get("scientific_name")
    if isinstance(name_obj, str):
        name = parse_scientific_name(name_obj)
    elif isinstance(name_obj, dict):
        raw = str(name_obj.get("raw") or "").strip()
        if raw and "genus" in name_obj and "epithet" in name_obj:
            name = CanonicalName(
                genus=str(name_obj["genus"]),
                epithet=str(name_obj["epithet"]),
                authority=name_obj.get("authority") or None,
                raw=str(name_obj["raw"]),
            )
        else:
            name = parse_scientific_name(raw)
    else:
        raise EmptyNameError("scientific name is blank")

    uses = []
    for u in obj.get("uses", ()):
        uses.append(
            UseEntry(
                ailment=_decode_ailment(u.get("ailment"), code_table),
                parts_used=frozenset(
                    PlantPart.parse(p) for p in u.get("parts_used", ()) if str(p).strip()
                ),
                preparation=u.get("preparation") or None,
                dosage=u.get("dosage") or None,
            )
        )

    conservation = None
    cons_obj = obj.get("conservation")
    if cons_obj:
        conservation = ConservationAssessment(
            paper_status=PaperStatus.parse(cons_obj["paper_status"])
            if cons_obj.get("paper_status")
            else None,
            iucn=IUCNCategory.parse(cons_obj["iucn"]) if cons_obj.get("iucn") else None,
            opinions=_decode_opinions(cons_obj["opinions"])
            if cons_obj.get("opinions")
            else None,
            market_status=MarketStatus.parse(cons_obj["market_status"])
            if cons_obj.get("market_status")
            else None,
            assessed_on=datetime.date.fromisoformat(cons_obj["assessed_on"])
            if cons_obj.get("assessed_on")
            else None,
            manual_override=bool(cons_obj.get("manual_override", False)),
        )

    media_items = []
    for m in (obj.get("media") or {}).get("items", ()):
        media_items.append(
            MediaRef(
                kind=MediaKind.parse(m.get("kind", "image")),
                uri=str(m.get("uri", "")),
                caption=m.get("caption") or None,
            )
        )

    return PlantRecord(
        id=str(obj.get("id") or ""),
        scientific_name=name,
        family=str(obj.get("family") or ""),
        common_names=tuple(obj.get("common_names", ())),
        synonyms=tuple(obj.get("synonyms", ())),
        local_names=tuple(
            LocalizedName(text=str(n["text"]), language=str(n["language"]))
            for n in obj.get("local_names", ())
        ),
        description=str(obj.get("description") or ""),
        uses=tuple(uses),
        areas_of_origin=tuple(obj.get("areas_of_origin", ())),
        contraindications=tuple(obj.get("contraindications", ())),
        phytoconstituents=tuple(obj.get("phytoconstituents", ())),
        adverse_reactions=tuple(obj.get("adverse_reactions", ())),
        toxicity=obj.get("toxicity") or None,
        pharmacology=obj.get("pharmacology") or None,
        drug_interactions=tuple(
            DrugInteraction(
                agent=str(d["agent"]),
                effect=str(d.get("effect") or ""),
                severity_note=d.get("severity_note") or None,
            )
            for d in obj.get("drug_interactions", ())
        ),
        media=MediaManifest(tuple(media_items)),
        sources=tuple(obj.get("sources", ())),
        conservation=conservation,
        market_status=MarketStatus.parse(obj["market_status"])
        if obj.get("market_status")
        else None,
    )


# ---- CSV encoding ----


def _join(values) -> str:
    return MULTI_SEP.join(values)


def _split(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(MULTI_SEP) if part.strip()]


def _encode_use(use: UseEntry) -> str:
    segments = [
        use.ailment.code,
        "+".join(p.display_name for p in sorted_parts(use.parts_used)),
        use.preparation or "",
        use.dosage or "",
    ]
    while segments and not segments[-1]:
        segments.pop()
    return ":".join(segments)


def _decode_use(text: str, code_table: CodeTable, fallback_parts) -> UseEntry:
    segments = text.split(":", 3)
    code = segments[0].strip()
    parts = frozenset(
        PlantPart.parse(p) for p in segments[1].split("+") if p.strip()
    ) if len(segments) > 1 else frozenset()
    if not parts and fallback_parts:
        parts = fallback_parts
    return UseEntry(
        ailment=code_table.resolve(code),
        parts_used=parts,
        preparation=segments[2].strip() or None if len(segments) > 2 else None,
        dosage=segments[3].strip() or None if len(segments) > 3 else None,
    )


def _encode_local_name(name: LocalizedName) -> str:
    return name.text if name.language == "yo" else f"{name.text}@{name.language}"


def _decode_local_name(cell: str) -> LocalizedName:
    text, sep, tag = cell.rpartition("@")
    if sep and is_valid_tag(tag):
        return LocalizedName(text=text, language=tag)
    return LocalizedName(text=cell, language="yo")


def _preparation_summary(record: PlantRecord) -> list[str]:
    items: dict[str, None] = {}
    for use in record.uses:
        if use.preparation and use.dosage:
            items.setdefault(f"{use.preparation} [{use.dosage}]")
        elif use.preparation:
            items.setdefault(use.preparation)
        elif use.dosage:
            items.setdefault(f"[{use.dosage}]")
    return list(items)


def record_to_csv_row(record: PlantRecord) -> list[str]:
    """One CSV row in survey-sheet column order (lossy: see module doc)."""
    return [
        record.scientific_name.raw,
        record.family,
        _join(record.common_names),
        _join(record.synonyms),
        _join(_encode_local_name(n) for n in record.local_names),
        record.description,
        _join(_encode_use(u) for u in record.uses),
        _join(p.display_name for p in record.all_parts()),
        _join(record.areas_of_origin),
        _join(_preparation_summary(record)),
        _join(record.contraindications),
        _join(record.phytoconstituents),
        _join(record.adverse_reactions),
        record.toxicity or "",
        record.pharmacology or "",
        _join(
            ":".join(filter(None, (d.agent, d.effect, d.severity_note or "")))
            for d in record.drug_interactions
        ),
        _join(m.uri for m in record.media),
        _join(record.sources),
    ]


def record_from_csv_row(row: list[str], code_table: CodeTable, record_id: str) -> PlantRecord:
    cells = dict(zip(CSV_COLUMNS, (cell.strip() for cell in row)))
    name = parse_scientific_name(cells.get("Scientific/Botanical Name", ""))

    fallback_parts = frozenset(
        PlantPart.parse(p) for p in _split(cells.get("Parts Used", ""))
    )
    uses = tuple(
        _decode_use(entry, code_table, fallback_parts)
        for entry in _split(cells.get("Medicinal Uses", ""))
    )

    interactions = []
    for entry in _split(cells.get("Drug interactions", "")):
        segments = entry.split(":", 2)
        interactions.append(
            DrugInteraction(
                agent=segments[0].strip(),
                effect=segments[1].strip() if len(segments) > 1 else "",
                severity_note=segments[2].strip() or None if len(segments) > 2 else None,
            )
        )

    media = MediaManifest(
        tuple(
            MediaRef(kind=guess_kind(uri), uri=uri)
            for uri in _split(cells.get("Picture", ""))
        )
    )

    return PlantRecord(
        id=record_id,
        scientific_name=name,
        family=cells.get("Family Name", ""),
        common_names=tuple(_split(cells.get("Common Name", ""))),
        synonyms=tuple(_split(cells.get("Synonyms", ""))),
        local_names=tuple(
            _decode_local_name(c) for c in _split(cells.get("Local Names (Yoruba Lang)", ""))
        ),
        description=cells.get("Description", ""),
        uses=uses,
        areas_of_origin=tuple(_split(cells.get("Area(s) of Origin", ""))),
        contraindications=tuple(_split(cells.get("Contraindications", ""))),
        phytoconstituents=tuple(_split(cells.get("Phytoconstituents", ""))),
        adverse_reactions=tuple(_split(cells.get("Adverse Reactions", ""))),
        toxicity=cells.get("Toxicity", "") or None,
        pharmacology=cells.get("Pharmacology", "") or None,
        drug_interactions=tuple(interactions),
        media=media,
        sources=tuple(_split(cells.get("Published Source(s)", ""))),
    )


# ---- import / export ----


@dataclass
class ImportReport:
    """Outcome of one import run; rejections carry their locators."""

    imported: int = 0
    rejected: list[tuple[str, ValidationReport]] = field(default_factory=list)
    warnings: int = 0

    @property
    def total(self) -> int:
        return self.imported + len(self.rejected)


def _as_text(source) -> str:
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise MalformedSourceError(f"source is not UTF-8: {exc}") from exc
    if isinstance(source, str):
        return source
    data = source.read()
    return _as_text(data)


def _failure_report(exc: Exception) -> ValidationReport:
    if isinstance(exc, EmptyNameError):
        return ValidationReport(errors=(("scientific_name", "missing"),))
    if isinstance(exc, MalformedNameError):
        return ValidationReport(errors=(("scientific_name", str(exc)),))
    if isinstance(exc, (UnknownCodeError, CodeConflictError)):
        return ValidationReport(errors=(("uses", str(exc)),))
    if isinstance(exc, InvalidRecordError):
        return exc.report
    return ValidationReport(errors=(("record", f"cannot decode: {exc}"),))


def import_records(store, source, format: str = "json") -> ImportReport:
    """Import records into the store, one-by-one (partial imports allowed).

    Valid records are upserted immediately; invalid ones are listed in the
    report with a locator ("row N" for CSV, "record N" for JSON) and do
    not block the rest of the batch.
    """
    text = _as_text(source)
    fmt = format.casefold()
    if fmt == "json":
        return _import_json(store, text)
    if fmt == "csv":
        return _import_csv(store, text)
    raise MalformedSourceError(f"unsupported import format {format!r}")


def _ingest(store, report: ImportReport, locator: str, build) -> None:
    try:
        record = build()
        if not record.id:
            record = _with_id(record, allocate_id(record.scientific_name, store))
        validation = validate_record(record, store.code_table, store.language_registry)
        if not validation.ok:
            report.rejected.append((locator, validation))
            return
        store.upsert(record)
        report.imported += 1
        report.warnings += len(validation.warnings)
    except Exception as exc:  # noqa: BLE001 - per-record isolation is the contract
        report.rejected.append((locator, _failure_report(exc)))


def _with_id(record: PlantRecord, record_id: str) -> PlantRecord:
    from dataclasses import replace

    return replace(record, id=record_id)


def _import_json(store, text: str) -> ImportReport:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSourceError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, list):
        raise MalformedSourceError("expected a top-level JSON array of records")
    report = ImportReport()
    for i, obj in enumerate(payload):
        _ingest(
            store,
            report,
            f"record {i}",
            lambda obj=obj: record_from_json_dict(obj, store.code_table),
        )
    return report


def _import_csv(store, text: str) -> ImportReport:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise MalformedSourceError("CSV source is empty (header row is mandatory)")
    header = [cell.strip() for cell in rows[0]]
    if header != list(CSV_COLUMNS):
        raise MalformedSourceError(
            "CSV header does not match the canonical column layout"
        )
    report = ImportReport()
    for lineno, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue

        def build(row=row):
            record = record_from_csv_row(row, store.code_table, record_id="")
            return _with_id(record, allocate_id(record.scientific_name, store))

        _ingest(store, report, f"row {lineno}", build)
    return report


def _selected_records(store, selection):
    records = store.snapshot_records()
    if selection is None:
        return records
    if isinstance(selection, str):
        code = store.code_table.resolve(selection).code
        return tuple(r for r in records if code in r.ailment_codes())
    wanted = set(selection)
    return tuple(r for r in records if r.id in wanted)


def export_records(store, selection=None, format: str = "json") -> bytes:
    """Deterministic export of the store (or an ailment/id selection).

    selection: None for everything, an ailment code to extract one
    disease's sub-database, or an iterable of record ids.
    """
    records = _selected_records(store, selection)
    fmt = format.casefold()
    if fmt == "json":
        payload = [record_to_json_dict(r) for r in records]
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record_to_csv_row(record))
        return buffer.getvalue().encode("utf-8")
    raise MalformedSourceError(f"unsupported export format {format!r}")
