"""Query AST nodes and result payloads."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

#: Fields a query may project, order by, or filter on. The free-prose
#: fields (description, pharmacology) are most useful with CONTAINS but
#: accept every operator; all comparisons are textual.
QUERYABLE_FIELDS: tuple[str, ...] = (
    "scientific_name",
    "family",
    "common_name",
    "synonym",
    "local_name",
    "ailment",
    "part_used",
    "area_of_origin",
    "phytoconstituent",
    "status",
    "market_status",
    "description",
    "pharmacology",
)

#: Fields treated as lists in projections; the rest project as scalars.
LIST_FIELDS: frozenset[str] = frozenset(
    {
        "common_name",
        "synonym",
        "local_name",
        "ailment",
        "part_used",
        "area_of_origin",
        "phytoconstituent",
    }
)

Literal = Union[str, int]


@dataclass(frozen=True)
class Compare:
    """``field = literal`` or ``field != literal`` (textual, any-element)."""

    field: str
    op: str  # "=" or "!="
    literal: Literal

    def __post_init__(self) -> None:
        if self.op not in ("=", "!="):
            raise ValueError(f"bad comparison operator {self.op!r}")


@dataclass(frozen=True)
class Contains:
    """Case-insensitive substring match against any element of a field."""

    field: str
    literal: str


@dataclass(frozen=True)
class In:
    """True when any listed literal would satisfy ``field = literal``."""

    field: str
    literals: tuple[Literal, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "literals", tuple(self.literals))
        if not self.literals:
            raise ValueError("IN needs at least one literal")


@dataclass(frozen=True)
class Not:
    child: "PredicateExpr"


@dataclass(frozen=True)
class And:
    children: tuple["PredicateExpr", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("AND needs at least two children")


@dataclass(frozen=True)
class Or:
    children: tuple["PredicateExpr", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("OR needs at least two children")


PredicateExpr = Union[Compare, Contains, In, Not, And, Or]


@dataclass(frozen=True)
class Query:
    """A parsed SELECT statement over the plants corpus."""

    projection: tuple[str, ...] | str = "*"
    predicate: PredicateExpr | None = None
    order_by: tuple[str, str] | None = None  # (field, "ASC" | "DESC")
    limit: int | None = None

    def __post_init__(self) -> None:
        if self.projection != "*":
            object.__setattr__(self, "projection", tuple(self.projection))


@dataclass
class ResultRow:
    """One matched record: its id plus the projected field values."""

    id: str
    values: dict[str, object] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"id": self.id, "values": self.values}


@dataclass
class ResultSet:
    """Ordered query results; total counts matches before LIMIT."""

    rows: list[ResultRow]
    total: int

    def ids(self) -> list[str]:
        return [row.id for row in self.rows]

    def to_json_dict(self) -> dict:
        return {"total": self.total, "rows": [row.to_json_dict() for row in self.rows]}
