"""PQL evaluation against a record store.

Semantics on multi-valued fields: = / != / IN are any-element equality
(case-insensitive, != being the complement of =), CONTAINS is
any-element substring. Top-level equality on the indexed fields
(ailment, family, area_of_origin, and the name fields) narrows through
IndexSet before per-record verification, so results always equal a
naive full scan.
"""

from __future__ import annotations

from ..errors import EmptyCriteriaError, UnknownFieldError
from ..model import PlantRecord
from ..status import PaperStatus
from ..vocab import MarketStatus, PlantPart
from .ast import (
    And,
    Compare,
    Contains,
    In,
    LIST_FIELDS,
    Not,
    Or,
    PredicateExpr,
    Query,
    QUERYABLE_FIELDS,
    ResultRow,
    ResultSet,
)

_NAME_FIELDS = ("scientific_name", "common_name", "synonym", "local_name")

#: /plants-style structured criteria: the pseudo-field "name" fans out
#: over all four name fields.
CRITERIA_FIELDS: tuple[str, ...] = QUERYABLE_FIELDS + ("name",)

_EQUALS_CRITERIA = frozenset({"ailment", "part_used", "status", "market_status"})


# ---- field value extraction ----


def field_values(record: PlantRecord, field: str) -> list[str]:
    """Textual values of one queryable field (empty when absent)."""
    if field == "scientific_name":
        name = record.scientific_name
        variants = [name.raw, name.canonical(), f"{name.genus} {name.epithet}"]
        return list(dict.fromkeys(variants))
    if field == "family":
        return [record.family] if record.family else []
    if field == "common_name":
        return list(record.common_names)
    if field == "synonym":
        return list(record.synonyms)
    if field == "local_name":
        return [n.text for n in record.local_names]
    if field == "ailment":
        values: dict[str, None] = {}
        for use in record.uses:
            values.setdefault(use.ailment.code)
            values.setdefault(use.ailment.full_name)
        return list(values)
    if field == "part_used":
        return [p.display_name for p in record.all_parts()]
    if field == "area_of_origin":
        return list(record.areas_of_origin)
    if field == "phytoconstituent":
        return list(record.phytoconstituents)
    if field == "status":
        status = record.effective_status()
        return [status.value] if status else []
    if field == "market_status":
        return [record.market_status.value] if record.market_status else []
    if field == "description":
        return [record.description] if record.description else []
    if field == "pharmacology":
        return [record.pharmacology] if record.pharmacology else []
    raise UnknownFieldError(f"unknown field {field!r}")


def _equals(record: PlantRecord, field: str, literal) -> bool:
    operand = str(literal)
    if field == "part_used":
        try:
            wanted = PlantPart.parse(operand).key()
        except ValueError:
            return False
        return wanted in {p.key() for p in record.all_parts()}
    if field == "status":
        try:
            wanted_status = PaperStatus.parse(operand)
        except ValueError:
            return False
        return record.effective_status() is wanted_status
    if field == "market_status":
        try:
            wanted_market = MarketStatus.parse(operand)
        except ValueError:
            return False
        return record.market_status is wanted_market
    folded = operand.casefold()
    return any(value.casefold() == folded for value in field_values(record, field))


def matches(record: PlantRecord, node: PredicateExpr) -> bool:
    """Evaluate one predicate against one record."""
    if isinstance(node, Compare):
        hit = _equals(record, node.field, node.literal)
        return hit if node.op == "=" else not hit
    if isinstance(node, Contains):
        needle = node.literal.casefold()
        return any(needle in value.casefold() for value in field_values(record, node.field))
    if isinstance(node, In):
        return any(_equals(record, node.field, lit) for lit in node.literals)
    if isinstance(node, Not):
        return not matches(record, node.child)
    if isinstance(node, And):
        return all(matches(record, child) for child in node.children)
    if isinstance(node, Or):
        return any(matches(record, child) for child in node.children)
    raise TypeError(f"not a predicate node: {node!r}")


# ---- index narrowing ----


def _equality_candidates(store, field: str, literal) -> set[str] | None:
    """Ids that could satisfy ``field = literal``; None means no help.

    Must over-approximate: every true match is included, and the caller
    re-verifies each candidate record against the full predicate.
    """
    operand = str(literal).strip()
    if not operand:
        return None
    indexes = store.indexes
    if field == "ailment":
        table = store.code_table
        entry = None
        if operand.upper() in table:
            entry = table.resolve(operand)
        else:
            entry = table.lookup_name(operand)
        if entry is None:
            return set()
        return set(indexes.postings("ailment_index", entry.code))
    if field == "family":
        return set(indexes.postings("family_index", operand.casefold()))
    if field == "area_of_origin":
        return set(indexes.postings("origin_index", operand.casefold()))
    if field in _NAME_FIELDS:
        from ..store import tokenize_name

        tokens = tokenize_name(operand)
        if not tokens:
            return None
        candidates: set[str] | None = None
        for token in tokens:
            postings = set(indexes.postings("name_index", token))
            candidates = postings if candidates is None else candidates & postings
        return candidates
    return None


def _candidates(store, node: PredicateExpr) -> set[str] | None:
    if isinstance(node, Compare) and node.op == "=":
        return _equality_candidates(store, node.field, node.literal)
    if isinstance(node, In):
        union: set[str] = set()
        for literal in node.literals:
            ids = _equality_candidates(store, node.field, literal)
            if ids is None:
                return None
            union |= ids
        return union
    if isinstance(node, And):
        narrowed: set[str] | None = None
        for child in node.children:
            ids = _candidates(store, child)
            if ids is not None:
                narrowed = ids if narrowed is None else narrowed & ids
        return narrowed
    if isinstance(node, Or):
        union = set()
        for child in node.children:
            ids = _candidates(store, child)
            if ids is None:
                return None
            union |= ids
        return union
    return None


# ---- evaluation ----


def _order_key(record: PlantRecord, field: str):
    return tuple(sorted(v.casefold() for v in field_values(record, field)))


def _project(record: PlantRecord, fields) -> ResultRow:
    values: dict[str, object] = {}
    for field in fields:
        if field == "ailment":
            values[field] = record.ailment_codes()
        elif field in LIST_FIELDS:
            values[field] = field_values(record, field)
        elif field == "scientific_name":
            values[field] = record.scientific_name.raw
        elif field == "family":
            values[field] = record.family
        elif field == "description":
            values[field] = record.description
        else:
            extracted = field_values(record, field)
            values[field] = extracted[0] if extracted else None
    return ResultRow(id=record.id, values=values)


def evaluate_query(query: Query, store) -> ResultSet:
    """Run a query; rows come back ordered and limited per the AST."""
    fields = QUERYABLE_FIELDS if query.projection == "*" else query.projection
    for field in fields:
        if field not in QUERYABLE_FIELDS:
            raise UnknownFieldError(f"unknown field {field!r}")
    if query.order_by is not None and query.order_by[0] not in QUERYABLE_FIELDS:
        raise UnknownFieldError(f"unknown field {query.order_by[0]!r}")

    with store.reading():
        if query.predicate is None:
            matched = list(store.snapshot_records())
        else:
            ids = _candidates(store, query.predicate)
            pool = (
                store.snapshot_records()
                if ids is None
                else [store.get(record_id) for record_id in sorted(ids)]
            )
            matched = [r for r in pool if matches(r, query.predicate)]

    matched.sort(key=lambda r: r.id)
    if query.order_by is not None:
        field, direction = query.order_by
        matched.sort(key=lambda r: _order_key(r, field), reverse=direction == "DESC")

    total = len(matched)
    if query.limit is not None:
        matched = matched[: query.limit]
    return ResultSet(rows=[_project(r, fields) for r in matched], total=total)


# ---- structured multi-criteria search ----

_SUMMARY_PROJECTION = ("scientific_name", "family", "ailment")


def desugar_criteria(criteria) -> PredicateExpr:
    """Conjunctive predicate equivalent to a criteria mapping."""
    if not criteria:
        raise EmptyCriteriaError("search needs at least one criterion")
    parts: list[PredicateExpr] = []
    for field in sorted(criteria):
        value = str(criteria[field])
        if field == "name":
            parts.append(Or(tuple(Contains(f, value) for f in _NAME_FIELDS)))
        elif field not in CRITERIA_FIELDS:
            raise UnknownFieldError(f"unknown field {field!r}")
        elif field in _EQUALS_CRITERIA:
            parts.append(Compare(field, "=", value))
        else:
            parts.append(Contains(field, value))
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def structured_search(criteria, store) -> ResultSet:
    """Search by any combination of characteristics (criteria AND up).

    Code and enum valued fields match exactly; text fields match as
    substrings. Rows carry a fixed summary projection.
    """
    predicate = desugar_criteria(criteria)
    return evaluate_query(Query(projection=_SUMMARY_PROJECTION, predicate=predicate), store)
