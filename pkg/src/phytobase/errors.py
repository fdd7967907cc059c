"""Exception hierarchy shared across the package.

Every error that can leave the library derives from PhytobaseError and
carries a stable machine code so the HTTP layer can map it 1:1 onto its
published error taxonomy.
"""

from __future__ import annotations


class PhytobaseError(Exception):
    """Base class for all domain errors."""

    code = "INTERNAL"


# ---- naming / vocabularies ----


class EmptyNameError(PhytobaseError):
    """Scientific name was blank."""

    code = "INVALID_RECORD"


class MalformedNameError(PhytobaseError):
    """Scientific name did not split into a valid genus/epithet pair."""

    code = "INVALID_RECORD"


class UnknownCodeError(PhytobaseError):
    """Ailment code absent from the corpus code table."""

    code = "UNKNOWN_CODE"


class CodeConflictError(PhytobaseError):
    """Registration would break the code/full-name bijection."""

    code = "INVALID_RECORD"


# ---- store ----


class InvalidRecordError(PhytobaseError):
    """Record failed validation; carries the full report."""

    code = "INVALID_RECORD"

    def __init__(self, report):
        self.report = report
        details = "; ".join(f"{path}: {msg}" for path, msg in report.errors)
        super().__init__(f"record failed validation: {details}")


class NotFoundError(PhytobaseError):
    code = "NOT_FOUND"


class StoreUnavailableError(PhytobaseError):
    code = "INTERNAL"


class CorruptSnapshotError(PhytobaseError):
    code = "INTERNAL"


class MalformedSourceError(PhytobaseError):
    """Import source is undecodable or structurally broken."""

    code = "MALFORMED_SOURCE"


class ReadOnlyError(PhytobaseError):
    code = "READ_ONLY"


# ---- query language ----


class QueryError(PhytobaseError):
    """Base for lex/parse/evaluation errors; span is (start, end) offsets."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span


class LexError(QueryError):
    code = "PARSE_ERROR"


class ParseError(QueryError):
    code = "PARSE_ERROR"


class UnknownFieldError(QueryError):
    code = "UNKNOWN_FIELD"


class EmptyCriteriaError(PhytobaseError):
    code = "EMPTY_CRITERIA"


# ---- status engine ----


class AllZeroDistributionError(PhytobaseError):
    """Opinion distribution with every percentage zero is unclassifiable."""

    code = "INVALID_RECORD"


# ---- narration ----


class UnknownLanguageError(PhytobaseError):
    code = "UNKNOWN_LANGUAGE"


class DuplicateLanguageError(PhytobaseError):
    code = "INVALID_RECORD"


class LabelCatalogError(PhytobaseError):
    """A label catalog is missing, unreadable, or incomplete."""

    code = "INTERNAL"
