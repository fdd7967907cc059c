"""PQL parser: grammar coverage, precedence, error spans."""

import pytest

from phytobase.errors import ParseError, UnknownFieldError
from phytobase.pql import And, Compare, Contains, In, Not, Or, Query, parse_query


def test_projection_star_no_predicate():
    query = parse_query("SELECT * FROM plants")
    assert query == Query(projection="*", predicate=None, order_by=None, limit=None)


def test_single_field_equality():
    query = parse_query("SELECT scientific_name FROM plants WHERE ailment = 'INF'")
    assert query.projection == ("scientific_name",)
    assert query.predicate == Compare("ailment", "=", "INF")


def test_structural_equality_of_nested_query():
    query = parse_query(
        "SELECT * FROM plants WHERE family = 'x' AND (ailment='AST' OR ailment='CAN') LIMIT 5"
    )
    expected = Query(
        projection="*",
        predicate=And(
            (
                Compare("family", "=", "x"),
                Or((Compare("ailment", "=", "AST"), Compare("ailment", "=", "CAN"))),
            )
        ),
        limit=5,
    )
    assert query == expected


def test_precedence_not_binds_tighter_than_and_than_or():
    query = parse_query(
        "SELECT * FROM plants WHERE NOT family = 'a' AND ailment = 'WI' OR status = 'Rare'"
    )
    assert query.predicate == Or(
        (
            And((Not(Compare("family", "=", "a")), Compare("ailment", "=", "WI"))),
            Compare("status", "=", "Rare"),
        )
    )


def test_parentheses_group():
    query = parse_query(
        "SELECT * FROM plants WHERE NOT (family = 'a' OR family = 'b')"
    )
    assert query.predicate == Not(
        Or((Compare("family", "=", "a"), Compare("family", "=", "b")))
    )


def test_in_list():
    query = parse_query("SELECT * FROM plants WHERE ailment IN ('WI', 'MI', 'INF')")
    assert query.predicate == In("ailment", ("WI", "MI", "INF"))


def test_in_single_literal():
    assert parse_query("SELECT * FROM plants WHERE ailment IN ('WI')").predicate == In(
        "ailment", ("WI",)
    )


def test_contains():
    query = parse_query("SELECT * FROM plants WHERE area_of_origin CONTAINS 'Nigeria'")
    assert query.predicate == Contains("area_of_origin", "Nigeria")


def test_contains_requires_a_string():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM plants WHERE family CONTAINS 42")


def test_integer_literals_accepted_in_comparisons():
    assert parse_query("SELECT * FROM plants WHERE family = 42").predicate == Compare(
        "family", "=", 42
    )


def test_order_by_defaults_to_asc():
    query = parse_query("SELECT * FROM plants ORDER BY family")
    assert query.order_by == ("family", "ASC")


def test_order_by_desc_and_limit():
    query = parse_query("SELECT * FROM plants ORDER BY family DESC LIMIT 3")
    assert query.order_by == ("family", "DESC")
    assert query.limit == 3


def test_projection_list():
    query = parse_query("SELECT scientific_name, family, ailment FROM plants")
    assert query.projection == ("scientific_name", "family", "ailment")


def test_field_names_fold_to_lowercase():
    assert parse_query("SELECT FAMILY FROM plants").projection == ("family",)


def test_unknown_field_error_carries_span():
    text = "SELECT * FROM plants WHERE bogus = 'x'"
    with pytest.raises(UnknownFieldError) as excinfo:
        parse_query(text)
    start, end = excinfo.value.span
    assert text[start:end] == "bogus"


def test_unknown_projection_field():
    with pytest.raises(UnknownFieldError):
        parse_query("SELECT bogus FROM plants")


def test_unknown_order_by_field():
    with pytest.raises(UnknownFieldError):
        parse_query("SELECT * FROM plants ORDER BY bogus")


def test_table_must_be_plants():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM animals")


def test_missing_from_is_a_parse_error():
    with pytest.raises(ParseError) as excinfo:
        parse_query("SELECT *")
    assert "FROM" in str(excinfo.value)


def test_limit_zero_rejected():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM plants LIMIT 0")


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM plants WHERE family = 'x' whatever")


def test_double_not_needs_parentheses():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM plants WHERE NOT NOT family = 'x'")
    query = parse_query("SELECT * FROM plants WHERE NOT (NOT family = 'x')")
    assert query.predicate == Not(Not(Compare("family", "=", "x")))


def test_empty_where_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_query("SELECT * FROM plants WHERE")
