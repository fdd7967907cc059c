"""HTTP service exposing CRUD, search, PQL, reports, narration, media.

Every endpoint is a thin serialization of the corresponding library
operation; no endpoint carries its own filtering or ordering logic.
Errors map 1:1 onto a closed taxonomy of machine codes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .errors import PhytobaseError, QueryError, ReadOnlyError, UnknownFieldError
from .media import media_manifest
from .model import PlantRecord
from .narration import build_narration, render_narration_plaintext
from .pql import evaluate_query, parse_query, structured_search
from .pql.evaluator import CRITERIA_FIELDS
from .serialize import export_records, record_from_json_dict, record_to_json_dict
from .status import status_report
from .store import RecordStore

logger = logging.getLogger(__name__)

#: Published error taxonomy; every response error code comes from here.
ERROR_CODES = frozenset(
    {
        "PARSE_ERROR",
        "UNKNOWN_FIELD",
        "UNKNOWN_CODE",
        "UNKNOWN_LANGUAGE",
        "NOT_FOUND",
        "INVALID_RECORD",
        "READ_ONLY",
        "EMPTY_CRITERIA",
        "MALFORMED_SOURCE",
        "BAD_REQUEST",
        "INTERNAL",
    }
)

_HTTP_STATUS = {
    "NOT_FOUND": 404,
    "READ_ONLY": 403,
    "INTERNAL": 500,
}


@dataclass
class ServiceConfig:
    """Runtime settings for one service process."""

    host: str = "127.0.0.1"
    port: int = 8000
    data_path: str | Path = "phytobase-data"
    read_only: bool = False
    default_language: str = "en"


def _error_response(code: str, message: str, span=None, status: int | None = None):
    assert code in ERROR_CODES, code
    payload: dict = {"code": code, "message": message}
    if span is not None:
        payload["span"] = [span[0], span[1]]
    return JSONResponse(
        status_code=status or _HTTP_STATUS.get(code, 400), content=payload
    )


def _summary(record: PlantRecord) -> dict:
    return {
        "id": record.id,
        "scientific_name": record.scientific_name.raw,
        "family": record.family,
        "ailments": record.ailment_codes(),
    }


def create_app(store: RecordStore, config: ServiceConfig | None = None) -> FastAPI:
    """Build the API application around an open store."""
    config = config or ServiceConfig()
    app = FastAPI(title="phytobase", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(PhytobaseError)
    async def _domain_error(request: Request, exc: PhytobaseError):
        span = exc.span if isinstance(exc, QueryError) else None
        code = exc.code if exc.code in ERROR_CODES else "INTERNAL"
        return _error_response(code, str(exc), span=span)

    def _mutable() -> None:
        if config.read_only:
            raise ReadOnlyError("service is running read-only")

    @app.get("/plants")
    def list_plants(request: Request):
        criteria: dict[str, str] = {}
        for key in request.query_params:
            if key not in CRITERIA_FIELDS:
                raise UnknownFieldError(f"unknown filter field {key!r}")
            values = request.query_params.getlist(key)
            # repeatable params AND together; a repeated field keeps its
            # last value, matching one-criterion-per-field search semantics
            criteria[key] = values[-1]
        if not criteria:
            return [_summary(r) for r in store.snapshot_records()]
        result = structured_search(criteria, store)
        ids = result.ids()
        with store.reading():
            return [_summary(store.get(record_id)) for record_id in ids]

    @app.get("/plants/{record_id}")
    def get_plant(record_id: str):
        return record_to_json_dict(store.get(record_id))

    @app.put("/plants/{record_id}")
    async def put_plant(record_id: str, request: Request):
        _mutable()
        try:
            payload = await request.json()
        except ValueError as exc:
            return _error_response("BAD_REQUEST", f"body is not valid JSON: {exc}")
        if not isinstance(payload, dict):
            return _error_response("BAD_REQUEST", "body must be a record object")
        body_id = payload.get("id")
        if body_id and body_id != record_id:
            return _error_response(
                "BAD_REQUEST", f"body id {body_id!r} does not match path id {record_id!r}"
            )
        payload["id"] = record_id
        record = record_from_json_dict(payload, store.code_table)
        revision = store.upsert(record)
        return {"id": record_id, "revision": revision}

    @app.delete("/plants/{record_id}")
    def delete_plant(record_id: str):
        _mutable()
        revision = store.delete(record_id)
        return {"id": record_id, "revision": revision}

    @app.post("/query")
    async def run_query(request: Request):
        body = (await request.body()).decode("utf-8", errors="replace")
        query = parse_query(body)
        return evaluate_query(query, store).to_json_dict()

    @app.get("/report/status")
    def report_status():
        return status_report(store).to_json_dict()

    @app.get("/plants/{record_id}/narration")
    def narration(record_id: str, lang: str | None = None):
        record = store.get(record_id)
        script = build_narration(
            record,
            lang or config.default_language,
            revision=store.revision,
            registry=store.language_registry,
        )
        return PlainTextResponse(render_narration_plaintext(script))

    @app.get("/plants/{record_id}/media")
    def media(record_id: str):
        manifest = media_manifest(store.get(record_id))
        return {
            "items": [
                {"kind": m.kind.value, "uri": m.uri, "caption": m.caption}
                for m in manifest
            ]
        }

    @app.get("/export")
    def export(ailment: str | None = None, format: str = "json"):
        if format not in ("csv", "json"):
            return _error_response("BAD_REQUEST", f"unsupported format {format!r}")
        data = export_records(store, selection=ailment, format=format)
        media_type = "text/csv" if format == "csv" else "application/json"
        return Response(content=data, media_type=media_type)

    @app.get("/meta/codes")
    def meta_codes():
        return [
            {"code": c.code, "full_name": c.full_name} for c in store.code_table.codes()
        ]

    return app


def serve(config: ServiceConfig) -> None:
    """Open the store at the configured data path and serve forever."""
    import uvicorn

    store = RecordStore.open(config.data_path, read_only=config.read_only)
    app = create_app(store, config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
