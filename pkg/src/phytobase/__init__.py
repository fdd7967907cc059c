"""phytobase: a knowledge-base engine for medicinal-plant records.

Library surface: the record schema and validation (model), a persistent
indexed store (store), JSON/CSV import-export (serialize), the plant
query language (pql), conservation-status classification (status),
narration scripts and media manifests (narration, media), plus an HTTP
service (service) and operator CLI (cli) on top.
"""

from .errors import PhytobaseError
from .languages import DEFAULT_REGISTRY, SEGMENT_KEYS, LanguageRegistry
from .media import MediaKind, MediaManifest, MediaRef, media_manifest
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
from .narration import NarrationScript, NarrationSegment, build_narration, render_narration_plaintext
from .pql import (
    Query,
    ResultSet,
    evaluate_query,
    parse_query,
    render_query,
    structured_search,
    tokenize,
)
from .serialize import ImportReport, export_records, import_records
from .status import (
    ConservationAssessment,
    IUCNCategory,
    OpinionDistribution,
    PaperStatus,
    StatusReport,
    classify_opinions,
    effective_assessment,
    map_status_to_iucn,
    status_report,
)
from .store import IndexSet, RecordStore, tokenize_name
from .vocab import (
    BUILTIN_AILMENT_CODES,
    AilmentCode,
    CodeTable,
    MarketStatus,
    PlantPart,
    resolve_ailment_code,
)

__version__ = "0.1.0"
