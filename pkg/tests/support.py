"""Test support: a naive full-scan oracle and seeded random generators.

The oracle evaluates predicates record-by-record with no index use and
no shared machinery with the production evaluator, so index or
candidate-narrowing bugs cannot hide.
"""

from __future__ import annotations

import random

from phytobase.model import (
    LocalizedName,
    PlantRecord,
    UseEntry,
    allocate_id,
    parse_scientific_name,
)
from phytobase.pql.ast import And, Compare, Contains, In, Not, Or, Query, QUERYABLE_FIELDS
from phytobase.status import ConservationAssessment, OpinionDistribution, PaperStatus
from phytobase.store import RecordStore
from phytobase.vocab import BUILTIN_AILMENT_CODES, MarketStatus, PlantPart

# ---- naive scan oracle ----


def oracle_values(record: PlantRecord, field: str) -> list[str]:
    name = record.scientific_name
    if field == "scientific_name":
        return [name.raw, name.canonical(), f"{name.genus} {name.epithet}"]
    if field == "family":
        return [record.family] if record.family else []
    if field == "common_name":
        return list(record.common_names)
    if field == "synonym":
        return list(record.synonyms)
    if field == "local_name":
        return [n.text for n in record.local_names]
    if field == "ailment":
        out = []
        for use in record.uses:
            out.append(use.ailment.code)
            out.append(use.ailment.full_name)
        return out
    if field == "part_used":
        out = []
        for use in record.uses:
            for part in use.parts_used:
                out.append(part.display_name)
        return out
    if field == "area_of_origin":
        return list(record.areas_of_origin)
    if field == "phytoconstituent":
        return list(record.phytoconstituents)
    if field == "status":
        status = record.conservation.effective_status() if record.conservation else None
        return [status.value] if status else []
    if field == "market_status":
        return [record.market_status.value] if record.market_status else []
    if field == "description":
        return [record.description] if record.description else []
    if field == "pharmacology":
        return [record.pharmacology] if record.pharmacology else []
    raise AssertionError(f"oracle has no field {field}")


def _oracle_equals(record: PlantRecord, field: str, literal) -> bool:
    operand = str(literal)
    if field == "part_used":
        try:
            wanted = PlantPart.parse(operand)
        except ValueError:
            return False
        parts = {p.key() for use in record.uses for p in use.parts_used}
        return wanted.key() in parts
    if field == "status":
        try:
            wanted_status = PaperStatus.parse(operand)
        except ValueError:
            return False
        current = record.conservation.effective_status() if record.conservation else None
        return current is wanted_status
    if field == "market_status":
        try:
            wanted_market = MarketStatus.parse(operand)
        except ValueError:
            return False
        return record.market_status is wanted_market
    return operand.casefold() in (v.casefold() for v in oracle_values(record, field))


def oracle_matches(record: PlantRecord, node) -> bool:
    if isinstance(node, Compare):
        hit = _oracle_equals(record, node.field, node.literal)
        return hit if node.op == "=" else not hit
    if isinstance(node, Contains):
        needle = node.literal.casefold()
        return any(needle in v.casefold() for v in oracle_values(record, node.field))
    if isinstance(node, In):
        return any(_oracle_equals(record, node.field, lit) for lit in node.literals)
    if isinstance(node, Not):
        return not oracle_matches(record, node.child)
    if isinstance(node, And):
        return all(oracle_matches(record, c) for c in node.children)
    if isinstance(node, Or):
        return any(oracle_matches(record, c) for c in node.children)
    raise AssertionError(f"oracle has no node {node!r}")


def oracle_match_ids(store: RecordStore, predicate) -> set[str]:
    """Ids matching a predicate by linear scan of every record."""
    return {
        record.id
        for record in store.snapshot_records()
        if predicate is None or oracle_matches(record, predicate)
    }


# ---- record construction ----


def minimal_record(record_id="zingiber-officinale", raw="Zingiber officinale Rosc", **kwargs):
    """Smallest valid record; keyword arguments override any field."""
    return PlantRecord(
        id=record_id,
        scientific_name=parse_scientific_name(raw),
        sources=kwargs.pop("sources", ("test",)),
        **kwargs,
    )


# ---- random corpora ----

_SYLLABLES = ["ba", "ko", "ri", "tu", "ze", "la", "mo", "shi", "pa", "du", "we", "fi"]
_FAMILIES = ["Asteraceae", "Moraceae", "Rubiaceae", "Fabaceae", "Poaceae", ""]
_AREAS = ["Nigeria", "Ghana", "India", "China", "Cameroon", "Benin Republic"]
_PARTS = ["Root", "Leaf", "Stem", "Bark", "Fruit", "Whole plant", "Rhizome"]
_PREPARATIONS = [None, "decoction", "infusion", "powder"]
_DIACRITIC_NAMES = ["Ewé-ìta", "Òrúko", "Akòko", "Ata-ìgbó", "Efinrin"]


def _word(rng: random.Random, n_min=2, n_max=4) -> str:
    return "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(n_min, n_max)))


def random_record(rng: random.Random, store: RecordStore) -> PlantRecord:
    genus = _word(rng).capitalize()
    epithet = _word(rng)
    name = parse_scientific_name(f"{genus} {epithet}" + (" L." if rng.random() < 0.3 else ""))

    uses = []
    seen = set()
    for _ in range(rng.randint(0, 4)):
        code = rng.choice(sorted(BUILTIN_AILMENT_CODES))
        preparation = rng.choice(_PREPARATIONS)
        if (code, preparation) in seen:
            continue
        seen.add((code, preparation))
        parts = frozenset(
            PlantPart.parse(p)
            for p in rng.sample(_PARTS, rng.randint(1, 3))
        )
        uses.append(
            UseEntry(
                ailment=store.code_table.resolve(code),
                parts_used=parts,
                preparation=preparation,
            )
        )

    conservation = None
    if rng.random() < 0.5:
        conservation = ConservationAssessment(
            opinions=OpinionDistribution(
                rng.randint(0, 60), rng.randint(0, 60), rng.randint(0, 60), rng.randint(1, 60)
            )
        )

    return PlantRecord(
        id=allocate_id(name, store),
        scientific_name=name,
        family=rng.choice(_FAMILIES),
        common_names=tuple({_word(rng).capitalize() for _ in range(rng.randint(0, 2))}),
        synonyms=(f"{_word(rng).capitalize()} {_word(rng)}",) if rng.random() < 0.2 else (),
        local_names=tuple(
            LocalizedName(text=rng.choice(_DIACRITIC_NAMES), language="yo")
            for _ in range(rng.randint(0, 2))
        ),
        description=_word(rng, 4, 8) if rng.random() < 0.5 else "",
        uses=tuple(uses),
        areas_of_origin=tuple(rng.sample(_AREAS, rng.randint(0, 3))),
        sources=("generated",),
        conservation=conservation,
        market_status=rng.choice([None, *MarketStatus]),
    )


def random_store(rng: random.Random, size: int) -> RecordStore:
    store = RecordStore()
    for _ in range(size):
        store.upsert(random_record(rng, store))
    return store


# ---- random predicates and queries ----


def _pool_value(rng: random.Random, store: RecordStore, field: str) -> str:
    """A value that often occurs in the corpus, sometimes noise."""
    if rng.random() < 0.25:
        return _word(rng)
    records = store.snapshot_records()
    if records:
        record = rng.choice(records)
        values = oracle_values(record, field)
        if values:
            value = rng.choice(values)
            return value if rng.random() < 0.7 else value.upper()
    return _word(rng)


def random_predicate(rng: random.Random, store: RecordStore, depth: int):
    indexable_bias = rng.random()
    if depth <= 0 or rng.random() < 0.45:
        field = (
            rng.choice(["ailment", "family", "area_of_origin", "scientific_name"])
            if indexable_bias < 0.6
            else rng.choice(QUERYABLE_FIELDS)
        )
        roll = rng.random()
        if roll < 0.5:
            return Compare(field, rng.choice(["=", "!="]), _pool_value(rng, store, field))
        if roll < 0.75:
            return Contains(field, _pool_value(rng, store, field)[:4])
        return In(
            field,
            tuple(_pool_value(rng, store, field) for _ in range(rng.randint(1, 3))),
        )
    roll = rng.random()
    if roll < 0.2:
        return Not(random_predicate(rng, store, depth - 1))
    children = tuple(
        random_predicate(rng, store, depth - 1) for _ in range(rng.randint(2, 3))
    )
    return And(children) if roll < 0.6 else Or(children)


# ---- random ASTs for round-trip checks ----

_TRICKY_STRINGS = [
    "",
    "WI",
    "it's",
    'say "go"',
    "back\\slash",
    "Zingiber officinale",
    "ẹ̀yà-ọ̀gbìn",
    "  spaced  out  ",
    "'leading quote",
    "trail\\",
]


def _random_literal(rng: random.Random):
    if rng.random() < 0.2:
        return rng.randint(0, 9999)
    if rng.random() < 0.5:
        return rng.choice(_TRICKY_STRINGS)
    return _word(rng)


def random_ast_predicate(rng: random.Random, depth: int):
    if depth <= 0 or rng.random() < 0.4:
        field = rng.choice(QUERYABLE_FIELDS)
        roll = rng.random()
        if roll < 0.45:
            return Compare(field, rng.choice(["=", "!="]), _random_literal(rng))
        if roll < 0.7:
            literal = _random_literal(rng)
            return Contains(field, literal if isinstance(literal, str) else str(literal))
        return In(field, tuple(_random_literal(rng) for _ in range(rng.randint(1, 4))))
    roll = rng.random()
    if roll < 0.25:
        return Not(random_ast_predicate(rng, depth - 1))
    children = tuple(
        random_ast_predicate(rng, depth - 1) for _ in range(rng.randint(2, 4))
    )
    return And(children) if roll < 0.65 else Or(children)


def random_ast_query(rng: random.Random, max_depth: int = 5) -> Query:
    projection = (
        "*"
        if rng.random() < 0.4
        else tuple(rng.choice(QUERYABLE_FIELDS) for _ in range(rng.randint(1, 4)))
    )
    predicate = (
        random_ast_predicate(rng, rng.randint(0, max_depth)) if rng.random() < 0.85 else None
    )
    order_by = (
        (rng.choice(QUERYABLE_FIELDS), rng.choice(["ASC", "DESC"]))
        if rng.random() < 0.4
        else None
    )
    limit = rng.randint(1, 500) if rng.random() < 0.4 else None
    return Query(projection=projection, predicate=predicate, order_by=order_by, limit=limit)
