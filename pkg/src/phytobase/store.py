"""Record store: validated records, inverted indexes, durable snapshots.

Desk-scale persistence: one snapshot file plus an append-only operation
log, compacted whenever the store is opened with pending log entries.
Concurrency follows a single-writer/multi-reader contract guarded by one
re-entrant lock; records themselves are immutable values.
"""

from __future__ import annotations

import json
import re
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    CorruptSnapshotError,
    InvalidRecordError,
    NotFoundError,
    PhytobaseError,
    ReadOnlyError,
    StoreUnavailableError,
)
from .languages import DEFAULT_REGISTRY, LanguageRegistry
from .model import PlantRecord, validate_record
from .vocab import AilmentCode, CodeTable

SNAPSHOT_HEADER = "phytobase-snapshot v1"
SNAPSHOT_FILE = "store.snapshot"
OPLOG_FILE = "store.oplog"

# ---- tokenization ----

_SPLIT_RE = re.compile(r"[\s,\-]+")
_EDGE_RE = re.compile(r"^\W+|\W+$")


def tokenize_name(text: str) -> list[str]:
    """Lowercase name tokens split on whitespace, commas, and hyphens.

    Diacritics are preserved; Yoruba names carry them semantically. Edge
    punctuation is stripped so "Rosc." and "Rosc" index identically.
    """
    tokens = []
    for piece in _SPLIT_RE.split(text.casefold()):
        piece = _EDGE_RE.sub("", piece)
        if piece:
            tokens.append(piece)
    return tokens


# ---- indexes ----


@dataclass
class IndexSet:
    """Inverted indexes over a record set.

    name_index keys are name tokens drawn from scientific, common,
    synonym, and local names; the other three key on whole values.
    """

    name_index: dict[str, set[str]] = field(default_factory=dict)
    ailment_index: dict[str, set[str]] = field(default_factory=dict)
    family_index: dict[str, set[str]] = field(default_factory=dict)
    origin_index: dict[str, set[str]] = field(default_factory=dict)

    @staticmethod
    def _record_keys(record: PlantRecord) -> dict[str, set[str]]:
        name_tokens: set[str] = set(tokenize_name(record.scientific_name.raw))
        for text in record.common_names:
            name_tokens.update(tokenize_name(text))
        for text in record.synonyms:
            name_tokens.update(tokenize_name(text))
        for local in record.local_names:
            name_tokens.update(tokenize_name(local.text))
        return {
            "name_index": name_tokens,
            "ailment_index": {use.ailment.code for use in record.uses},
            "family_index": {record.family.strip().casefold()} - {""},
            "origin_index": {a.strip().casefold() for a in record.areas_of_origin} - {""},
        }

    def add_record(self, record: PlantRecord) -> None:
        for index_name, keys in self._record_keys(record).items():
            index: dict[str, set[str]] = getattr(self, index_name)
            for key in keys:
                index.setdefault(key, set()).add(record.id)

    def remove_record(self, record: PlantRecord) -> None:
        for index_name, keys in self._record_keys(record).items():
            index: dict[str, set[str]] = getattr(self, index_name)
            for key in keys:
                postings = index.get(key)
                if postings is not None:
                    postings.discard(record.id)
                    if not postings:
                        del index[key]

    def postings(self, index_name: str, key: str) -> frozenset[str]:
        index: dict[str, set[str]] = getattr(self, index_name)
        return frozenset(index.get(key, ()))


# ---- store ----


class RecordStore:
    """In-memory record map with live indexes and optional durability."""

    def __init__(
        self,
        code_table: CodeTable | None = None,
        language_registry: LanguageRegistry | None = None,
    ) -> None:
        self.code_table = code_table or CodeTable()
        self.language_registry = language_registry or DEFAULT_REGISTRY
        self._records: dict[str, PlantRecord] = {}
        self._indexes = IndexSet()
        self._revision = 0
        self._lock = threading.RLock()
        self._data_dir: Path | None = None
        self._read_only = False

    # -- lifecycle --

    @classmethod
    def open(cls, path: str | Path, read_only: bool = False) -> "RecordStore":
        """Open (or create) a store persisted under a directory."""
        store = cls()
        data_dir = Path(path)
        if not data_dir.exists():
            if read_only:
                raise StoreUnavailableError(f"data path {data_dir} does not exist")
            data_dir.mkdir(parents=True, exist_ok=True)
        store._data_dir = data_dir
        store._read_only = read_only
        store._load()
        return store

    @property
    def read_only(self) -> bool:
        return self._read_only

    @property
    def revision(self) -> int:
        return self._revision

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._records

    @contextmanager
    def reading(self):
        """Hold a consistent view for the duration of a read."""
        with self._lock:
            yield self

    # -- reads --

    def get(self, record_id: str) -> PlantRecord:
        with self._lock:
            try:
                return self._records[record_id]
            except KeyError:
                raise NotFoundError(f"no record with id {record_id!r}") from None

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._records)

    def snapshot_records(self) -> tuple[PlantRecord, ...]:
        """All records, id-ascending, as an immutable snapshot."""
        with self._lock:
            return tuple(self._records[k] for k in sorted(self._records))

    @property
    def indexes(self) -> IndexSet:
        """The incrementally maintained indexes (do not mutate)."""
        return self._indexes

    def rebuild_indexes(self) -> IndexSet:
        """Fresh indexes from scratch; equals the incremental set."""
        with self._lock:
            rebuilt = IndexSet()
            for record in self._records.values():
                rebuilt.add_record(record)
            return rebuilt

    # -- mutations --

    def upsert(self, record: PlantRecord) -> int:
        """Insert or replace a record; returns the new store revision."""
        with self._lock:
            self._require_writable()
            report = validate_record(record, self.code_table, self.language_registry)
            if not report.ok:
                raise InvalidRecordError(report)
            self._apply_upsert(record)
            self._revision += 1
            self._append_op({"op": "upsert", "record": self._encode_record(record)})
            return self._revision

    def delete(self, record_id: str) -> int:
        with self._lock:
            self._require_writable()
            record = self._records.get(record_id)
            if record is None:
                raise NotFoundError(f"no record with id {record_id!r}")
            del self._records[record_id]
            self._indexes.remove_record(record)
            self._revision += 1
            self._append_op({"op": "delete", "id": record_id})
            return self._revision

    def register_code(self, code: str, full_name: str) -> AilmentCode:
        """Extend the corpus code table; no-op when already registered."""
        with self._lock:
            self._require_writable()
            before = len(self.code_table)
            entry = self.code_table.register(code, full_name)
            if len(self.code_table) != before:
                self._revision += 1
                self._append_op(
                    {"op": "register_code", "code": entry.code, "full_name": entry.full_name}
                )
            return entry

    def _apply_upsert(self, record: PlantRecord) -> None:
        old = self._records.get(record.id)
        if old is not None:
            self._indexes.remove_record(old)
        self._records[record.id] = record
        self._indexes.add_record(record)

    def _require_writable(self) -> None:
        if self._read_only:
            raise ReadOnlyError("store is open read-only")

    # -- persistence --

    def _snapshot_path(self) -> Path:
        assert self._data_dir is not None
        return self._data_dir / SNAPSHOT_FILE

    def _oplog_path(self) -> Path:
        assert self._data_dir is not None
        return self._data_dir / OPLOG_FILE

    def _encode_record(self, record: PlantRecord) -> dict:
        from .serialize import record_to_json_dict

        return record_to_json_dict(record)

    def _decode_record(self, obj: dict) -> PlantRecord:
        from .serialize import record_from_json_dict

        return record_from_json_dict(obj, self.code_table)

    def _append_op(self, op: dict) -> None:
        if self._data_dir is None:
            return
        try:
            with self._oplog_path().open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(op, ensure_ascii=False) + "\n")
        except OSError as exc:
            raise StoreUnavailableError(f"cannot append to operation log: {exc}") from exc

    def _load(self) -> None:
        snapshot_path = self._snapshot_path()
        if snapshot_path.exists():
            text = snapshot_path.read_text("utf-8")
            header, _, body = text.partition("\n")
            if header.strip() != SNAPSHOT_HEADER:
                raise CorruptSnapshotError(
                    f"bad snapshot header {header.strip()!r} in {snapshot_path}"
                )
            try:
                snap = json.loads(body)
                for entry in snap.get("codes", []):
                    self.code_table.register(entry["code"], entry["full_name"])
                for obj in snap.get("records", []):
                    self._apply_upsert(self._decode_record(obj))
                self._revision = int(snap.get("revision", 0))
            except (PhytobaseError, ValueError, KeyError, TypeError) as exc:
                raise CorruptSnapshotError(f"cannot read {snapshot_path}: {exc}") from exc

        pending = 0
        oplog_path = self._oplog_path()
        if oplog_path.exists():
            for lineno, line in enumerate(
                oplog_path.read_text("utf-8").splitlines(), start=1
            ):
                if not line.strip():
                    continue
                try:
                    op = json.loads(line)
                    self._apply_logged(op)
                except (PhytobaseError, ValueError, KeyError, TypeError) as exc:
                    raise CorruptSnapshotError(
                        f"cannot replay {oplog_path}:{lineno}: {exc}"
                    ) from exc
                pending += 1
            self._revision += pending

        if pending and not self._read_only:
            self.compact()

    def _apply_logged(self, op: dict) -> None:
        kind = op["op"]
        if kind == "upsert":
            self._apply_upsert(self._decode_record(op["record"]))
        elif kind == "delete":
            record = self._records.pop(op["id"], None)
            if record is not None:
                self._indexes.remove_record(record)
        elif kind == "register_code":
            self.code_table.register(op["code"], op["full_name"])
        else:
            raise CorruptSnapshotError(f"unknown operation {kind!r}")

    def compact(self) -> None:
        """Write a fresh snapshot and truncate the operation log."""
        if self._data_dir is None:
            return
        with self._lock:
            self._require_writable()
            snap = {
                "revision": self._revision,
                "codes": [
                    {"code": c.code, "full_name": c.full_name}
                    for c in self.code_table.extras()
                ],
                "records": [
                    self._encode_record(self._records[k]) for k in sorted(self._records)
                ],
            }
            body = json.dumps(snap, indent=2, ensure_ascii=False)
            tmp = self._snapshot_path().with_suffix(".tmp")
            try:
                tmp.write_text(SNAPSHOT_HEADER + "\n" + body + "\n", encoding="utf-8")
                tmp.replace(self._snapshot_path())
                self._oplog_path().write_text("", encoding="utf-8")
            except OSError as exc:
                raise StoreUnavailableError(f"cannot write snapshot: {exc}") from exc
