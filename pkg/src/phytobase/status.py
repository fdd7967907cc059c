"""Conservation-status modeling.

Covers the survey vocabulary (Endangered/Threatened/Rare/Common and the
wider Extinct..Common scale), respondent-opinion classification, the nine
2007 IUCN Red List categories, and corpus-level status reports.
"""

from __future__ import annotations

import datetime
import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import AllZeroDistributionError
from .vocab import MarketStatus


class PaperStatus(enum.Enum):
    """Survey status vocabulary, ordered by severity.

    "Available" is an alias of Common and normalizes to it on parse.
    """

    EXTINCT = "Extinct"
    ALMOST_EXTINCT = "Almost Extinct"
    ENDANGERED = "Endangered"
    THREATENED = "Threatened"
    VULNERABLE = "Vulnerable"
    RARE = "Rare"
    COMMON = "Common"

    @property
    def severity(self) -> int:
        """Higher means more threatened; Common is 0."""
        return _SEVERITY[self]

    @classmethod
    def parse(cls, text: str) -> "PaperStatus":
        cleaned = " ".join(text.split()).casefold()
        member = _STATUS_ALIASES.get(cleaned)
        if member is None:
            raise ValueError(f"not a conservation status: {text!r}")
        return member


_SEVERITY = {
    PaperStatus.EXTINCT: 6,
    PaperStatus.ALMOST_EXTINCT: 5,
    PaperStatus.ENDANGERED: 4,
    PaperStatus.THREATENED: 3,
    PaperStatus.VULNERABLE: 2,
    PaperStatus.RARE: 1,
    PaperStatus.COMMON: 0,
}

_STATUS_ALIASES = {member.value.casefold(): member for member in PaperStatus}
_STATUS_ALIASES.update(
    {
        "almostextinct": PaperStatus.ALMOST_EXTINCT,
        "almost-extinct": PaperStatus.ALMOST_EXTINCT,
        "available": PaperStatus.COMMON,
        "e": PaperStatus.ENDANGERED,
        "v": PaperStatus.VULNERABLE,
    }
)


class IUCNCategory(enum.Enum):
    """The nine 2007 IUCN Red List categories."""

    EX = "Extinct"
    EW = "Extinct in the Wild"
    CR = "Critically Endangered"
    EN = "Endangered"
    VU = "Vulnerable"
    NT = "Near Threatened"
    LC = "Least Concern"
    DD = "Data Deficient"
    NE = "Not Evaluated"

    @classmethod
    def parse(cls, text: str) -> "IUCNCategory":
        cleaned = text.strip()
        try:
            return cls[cleaned.upper()]
        except KeyError:
            pass
        for member in cls:
            if member.value.casefold() == cleaned.casefold():
                return member
        raise ValueError(f"not an IUCN category: {text!r}")


#: Default survey-status -> IUCN mapping. The two vocabularies were only
#: ever juxtaposed in the source material; this table is the documented,
#: overridable bridge between them. It never yields DD or NE.
DEFAULT_IUCN_MAPPING: dict[PaperStatus, IUCNCategory] = {
    PaperStatus.EXTINCT: IUCNCategory.EX,
    PaperStatus.ALMOST_EXTINCT: IUCNCategory.CR,
    PaperStatus.ENDANGERED: IUCNCategory.EN,
    PaperStatus.THREATENED: IUCNCategory.VU,
    PaperStatus.VULNERABLE: IUCNCategory.VU,
    PaperStatus.RARE: IUCNCategory.NT,
    PaperStatus.COMMON: IUCNCategory.LC,
}


def map_status_to_iucn(
    status: PaperStatus,
    mapping: Mapping[PaperStatus, IUCNCategory] | None = None,
) -> IUCNCategory:
    """Total mapping from the survey vocabulary onto IUCN categories."""
    table = DEFAULT_IUCN_MAPPING if mapping is None else mapping
    return table[status]


# ---- respondent opinions ----


@dataclass(frozen=True)
class OpinionDistribution:
    """Respondent percentages per status category, kept as printed.

    Sums are not normalized; a sum outside [99, 101] only draws a
    validation warning, since classification depends on the argmax alone.
    """

    endangered_pct: float
    threatened_pct: float
    rare_pct: float
    common_pct: float

    def __post_init__(self) -> None:
        for name, value in self.as_mapping().items():
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")

    def as_mapping(self) -> dict[str, float]:
        return {
            "endangered_pct": self.endangered_pct,
            "threatened_pct": self.threatened_pct,
            "rare_pct": self.rare_pct,
            "common_pct": self.common_pct,
        }

    def total(self) -> float:
        return sum(self.as_mapping().values())

    def scaled(self, k: float) -> "OpinionDistribution":
        return OpinionDistribution(
            self.endangered_pct * k,
            self.threatened_pct * k,
            self.rare_pct * k,
            self.common_pct * k,
        )


def classify_opinions(dist: OpinionDistribution) -> PaperStatus:
    """Category with the maximum percentage; severity breaks ties.

    The tie-break is deliberately precautionary: when two categories share
    the maximum, the more threatened one wins.
    """
    if dist.total() == 0:
        raise AllZeroDistributionError("all opinion percentages are zero")
    candidates = [
        (dist.endangered_pct, PaperStatus.ENDANGERED),
        (dist.threatened_pct, PaperStatus.THREATENED),
        (dist.rare_pct, PaperStatus.RARE),
        (dist.common_pct, PaperStatus.COMMON),
    ]
    return max(candidates, key=lambda pair: (pair[0], pair[1].severity))[1]


# ---- assessments ----


@dataclass(frozen=True)
class ConservationAssessment:
    """One conservation assessment of a record.

    When both opinions and an explicit status are present they must agree
    (validation enforces it) unless manual_override is set.
    """

    paper_status: PaperStatus | None = None
    iucn: IUCNCategory | None = None
    opinions: OpinionDistribution | None = None
    market_status: MarketStatus | None = None
    assessed_on: datetime.date | None = None
    manual_override: bool = False

    def effective_status(self) -> PaperStatus | None:
        """Explicit status, else the opinion classification, else None."""
        if self.paper_status is not None:
            return self.paper_status
        if self.opinions is not None and self.opinions.total() > 0:
            return classify_opinions(self.opinions)
        return None


def effective_assessment(
    assessments: Iterable[ConservationAssessment],
) -> ConservationAssessment | None:
    """Pick the assessment that speaks for a record.

    The most recent dated assessment wins; among undated ones (or on a
    date tie) the more severe effective status wins.
    """
    best: ConservationAssessment | None = None
    best_key: tuple = ()
    for assessment in assessments:
        status = assessment.effective_status()
        key = (
            assessment.assessed_on or datetime.date.min,
            status.severity if status else -1,
        )
        if best is None or key > best_key:
            best, best_key = assessment, key
    return best


# ---- corpus report ----


@dataclass(frozen=True)
class StatusReport:
    """Per-status record counts over one corpus."""

    counts: Mapping[PaperStatus, int]
    total_assessed: int
    unassessed: int

    def to_json_dict(self) -> dict:
        return {
            "counts": {member.value: self.counts.get(member, 0) for member in PaperStatus},
            "total_assessed": self.total_assessed,
            "unassessed": self.unassessed,
        }


def status_report(store) -> StatusReport:
    """Classify every record in the store.

    A record contributes its assessment's effective status (explicit, or
    computed from opinions); records without either count as unassessed.
    """
    counts: dict[PaperStatus, int] = {}
    unassessed = 0
    for record in store.snapshot_records():
        status = record.conservation.effective_status() if record.conservation else None
        if status is None:
            unassessed += 1
        else:
            counts[status] = counts.get(status, 0) + 1
    return StatusReport(
        counts=counts,
        total_assessed=sum(counts.values()),
        unassessed=unassessed,
    )
