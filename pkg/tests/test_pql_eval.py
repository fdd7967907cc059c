"""Query evaluation and structured search against real corpora."""

import random

import pytest

from phytobase.errors import EmptyCriteriaError, UnknownFieldError
from phytobase.pql import (
    And,
    Compare,
    Not,
    Or,
    Query,
    evaluate_query,
    parse_query,
    structured_search,
)
from support import oracle_match_ids, random_predicate, random_store


def run(text, store):
    return evaluate_query(parse_query(text), store)


class TestFixtureQueries:
    def test_infertility_query(self, plants_store):
        result = run("SELECT scientific_name FROM plants WHERE ailment = 'INF'", plants_store)
        assert result.ids() == [
            "elytraria-marginata",
            "euphorbia-laterifolia",
            "ficus-capensis",
        ]
        assert result.total == 3

    def test_women_infertility_query(self, plants_store):
        result = run("SELECT * FROM plants WHERE ailment = 'WI'", plants_store)
        assert result.ids() == ["acalypha-villicaulis", "ageratum-conyzoides"]

    def test_ailment_matches_full_name_too(self, plants_store):
        result = run("SELECT * FROM plants WHERE ailment = 'women infertility'", plants_store)
        assert result.ids() == ["acalypha-villicaulis", "ageratum-conyzoides"]

    def test_origin_contains_nigeria_includes_ginger(self, plants_store):
        result = run(
            "SELECT * FROM plants WHERE area_of_origin CONTAINS 'Nigeria'", plants_store
        )
        assert "zingiber-officinale" in result.ids()

    def test_origin_equality_is_case_insensitive(self, plants_store):
        result = run("SELECT * FROM plants WHERE area_of_origin = 'nigeria'", plants_store)
        assert "zingiber-officinale" in result.ids()

    def test_local_name_lookup(self, plants_store):
        result = run("SELECT * FROM plants WHERE local_name = 'Jinwini'", plants_store)
        assert result.ids() == ["acalypha-villicaulis"]

    def test_contains_on_description(self, plants_store):
        result = run("SELECT * FROM plants WHERE description CONTAINS 'rhizome'", plants_store)
        assert result.ids() == ["zingiber-officinale"]

    def test_part_used_equality_canonicalizes_plurals(self, plants_store):
        result = run("SELECT * FROM plants WHERE part_used = 'Leaves'", plants_store)
        assert result.ids() == [
            "ageratum-conyzoides",
            "euphorbia-laterifolia",
            "ficus-capensis",
        ]

    def test_status_equality_uses_classified_opinions(self, full_store):
        result = run("SELECT * FROM plants WHERE status = 'Threatened'", full_store)
        assert "rauwolfia-vomitoria" in result.ids()
        assert "rauwolfia-vomitoria-2" in result.ids()
        assert result.total == 8

    def test_not_equals_is_complement(self, plants_store):
        eq = set(run("SELECT * FROM plants WHERE family = 'Moraceae'", plants_store).ids())
        ne = set(run("SELECT * FROM plants WHERE family != 'Moraceae'", plants_store).ids())
        assert eq | ne == set(plants_store.ids())
        assert not eq & ne

    def test_in_list(self, plants_store):
        result = run("SELECT * FROM plants WHERE ailment IN ('STR', 'MI')", plants_store)
        assert result.ids() == ["allium-sativum", "asparagus-racemosus"]

    def test_order_by_desc_with_ties_broken_by_id(self, plants_store):
        result = run("SELECT family FROM plants ORDER BY family DESC", plants_store)
        families = [row.values["family"] for row in result.rows]
        assert families == sorted(families, key=str.casefold, reverse=True)
        # the two Euphorbiaceae records tie; ids stay ascending
        euphorbs = [r.id for r in result.rows if r.values["family"] == "Euphorbiaceae"]
        assert euphorbs == ["acalypha-villicaulis", "euphorbia-laterifolia"]

    def test_limit_is_a_prefix_of_unlimited(self, full_store):
        unlimited = run("SELECT * FROM plants ORDER BY scientific_name ASC", full_store)
        limited = run(
            "SELECT * FROM plants ORDER BY scientific_name ASC LIMIT 5", full_store
        )
        assert limited.ids() == unlimited.ids()[:5]
        assert limited.total == unlimited.total == len(full_store)

    def test_default_order_is_id_ascending(self, full_store):
        ids = run("SELECT * FROM plants", full_store).ids()
        assert ids == sorted(ids)

    def test_projection_star_covers_all_queryable_fields(self, plants_store):
        row = run("SELECT * FROM plants LIMIT 1", plants_store).rows[0]
        assert "scientific_name" in row.values
        assert "ailment" in row.values
        assert "market_status" in row.values

    def test_projection_values(self, plants_store):
        result = run(
            "SELECT scientific_name, ailment FROM plants WHERE family = 'Zingiberaceae'",
            plants_store,
        )
        (row,) = result.rows
        assert row.values["scientific_name"] == "Zingiber officinale Rosc"
        assert row.values["ailment"] == ["AST", "PIL", "HEP", "OBE", "ANA", "CAN", "DYS"]

    def test_unknown_field_in_handbuilt_query(self, plants_store):
        with pytest.raises(UnknownFieldError):
            evaluate_query(Query(projection=("bogus",)), plants_store)


class TestAlgebraicProperties:
    def test_de_morgan_on_fixture(self, full_store):
        p = Compare("ailment", "=", "INF")
        q = Compare("family", "=", "Moraceae")
        lhs = evaluate_query(Query(predicate=Not(Or((p, q)))), full_store).ids()
        rhs = evaluate_query(Query(predicate=And((Not(p), Not(q)))), full_store).ids()
        assert lhs == rhs

    def test_and_is_monotone(self, full_store):
        p = Compare("ailment", "=", "INF")
        q = Compare("part_used", "=", "Leaves")
        conj = set(evaluate_query(Query(predicate=And((p, q))), full_store).ids())
        assert conj <= set(evaluate_query(Query(predicate=p), full_store).ids())
        assert conj <= set(evaluate_query(Query(predicate=q), full_store).ids())


class TestIndexScanEquivalence:
    def test_random_corpora_smoke(self):
        rng = random.Random(4242)
        for _ in range(8):
            store = random_store(rng, rng.randint(0, 60))
            for _ in range(20):
                predicate = random_predicate(rng, store, rng.randint(0, 3))
                indexed = set(evaluate_query(Query(predicate=predicate), store).ids())
                assert indexed == oracle_match_ids(store, predicate)

    def test_fixture_queries_equal_oracle(self, full_store):
        for text in [
            "SELECT * FROM plants WHERE ailment = 'INF'",
            "SELECT * FROM plants WHERE family = 'Euphorbiaceae'",
            "SELECT * FROM plants WHERE area_of_origin = 'Nigeria'",
            "SELECT * FROM plants WHERE scientific_name = 'Zingiber officinale Rosc'",
            "SELECT * FROM plants WHERE common_name = 'ginger'",
            "SELECT * FROM plants WHERE family = 'Moraceae' AND ailment = 'INF'",
        ]:
            query = parse_query(text)
            assert set(evaluate_query(query, full_store).ids()) == oracle_match_ids(
                full_store, query.predicate
            )


class TestStructuredSearch:
    def test_infertility_plus_leaves(self, plants_store):
        result = structured_search({"ailment": "INF", "part_used": "Leaves"}, plants_store)
        assert result.ids() == ["euphorbia-laterifolia", "ficus-capensis"]

    def test_family_criterion(self, plants_store):
        result = structured_search({"family": "Zingiberaceae"}, plants_store)
        assert result.ids() == ["zingiber-officinale"]

    def test_empty_criteria_rejected(self, plants_store):
        with pytest.raises(EmptyCriteriaError):
            structured_search({}, plants_store)

    def test_unknown_criteria_field_rejected(self, plants_store):
        with pytest.raises(UnknownFieldError):
            structured_search({"bogus": "x"}, plants_store)

    def test_summary_projection_shape(self, plants_store):
        (row, *_) = structured_search({"ailment": "WI"}, plants_store).rows
        assert set(row.values) == {"scientific_name", "family", "ailment"}

    def test_name_pseudo_field_spans_all_name_fields(self, plants_store):
        by_local = structured_search({"name": "Jinwini"}, plants_store)
        assert by_local.ids() == ["acalypha-villicaulis"]
        by_common = structured_search({"name": "garlic"}, plants_store)
        assert by_common.ids() == ["allium-sativum"]

    def test_text_criteria_match_substrings(self, plants_store):
        result = structured_search({"scientific_name": "zingiber"}, plants_store)
        assert result.ids() == ["zingiber-officinale"]

    def test_equivalent_to_desugared_query(self, plants_store):
        criteria = {"ailment": "INF", "family": "Moraceae"}
        direct = structured_search(criteria, plants_store).ids()
        desugared = run(
            "SELECT * FROM plants WHERE ailment = 'INF' AND family CONTAINS 'Moraceae'",
            plants_store,
        ).ids()
        assert direct == desugared
