"""Scientific-name parsing and id allocation."""

import pytest
from hypothesis import given, strategies as st

from phytobase.errors import EmptyNameError, MalformedNameError
from phytobase.model import allocate_id, parse_scientific_name, slug_for


def test_ginger_with_authority():
    name = parse_scientific_name("Zingiber officinale Rosc")
    assert name.genus == "Zingiber"
    assert name.epithet == "officinale"
    assert name.authority == "Rosc"
    assert name.raw == "Zingiber officinale Rosc"


def test_garlic_with_dotted_authority():
    name = parse_scientific_name("Allium sativum L.")
    assert (name.genus, name.epithet, name.authority) == ("Allium", "sativum", "L.")


def test_multi_word_authority_joined():
    name = parse_scientific_name("Bergenia ciliate (Haw) Sternb.")
    assert name.authority == "(Haw) Sternb."


def test_no_authority():
    name = parse_scientific_name("Elytraria marginata")
    assert name.authority is None
    assert name.canonical() == "Elytraria marginata"


def test_hyphenated_epithet():
    name = parse_scientific_name("Adiantum capillus-veneris L.")
    assert name.epithet == "capillus-veneris"


def test_raw_preserved_verbatim():
    raw = "  Zingiber officinale Rosc "
    # leading/trailing whitespace is not trimmed away from raw
    assert parse_scientific_name(raw).raw == raw


def test_blank_is_empty_name():
    with pytest.raises(EmptyNameError):
        parse_scientific_name("   ")


def test_single_token_is_malformed():
    with pytest.raises(MalformedNameError):
        parse_scientific_name("Zingiber")


def test_uppercase_epithet_is_malformed():
    with pytest.raises(MalformedNameError):
        parse_scientific_name("Zingiber Officinale")


def test_lowercase_genus_is_malformed():
    with pytest.raises(MalformedNameError):
        parse_scientific_name("zingiber officinale")


_genus = st.from_regex(r"[A-Z][a-z]{1,12}", fullmatch=True)
_epithet = st.from_regex(r"[a-z]{2,12}(-[a-z]{1,8})?", fullmatch=True)
_authority = st.sampled_from(["", "L.", "Rosc", "Thunb", "(Haw) Sternb."])


@given(_genus, _epithet, _authority)
def test_reparsing_the_canonical_rendering_is_identity(genus, epithet, authority):
    raw = " ".join(t for t in (genus, epithet, authority) if t)
    first = parse_scientific_name(raw)
    second = parse_scientific_name(first.canonical())
    assert (first.genus, first.epithet, first.authority) == (
        second.genus,
        second.epithet,
        second.authority,
    )
    assert second.canonical() == first.canonical()


def test_slug_and_collision_suffix():
    name = parse_scientific_name("Rauwolfia vomitoria")
    assert slug_for(name) == "rauwolfia-vomitoria"
    assert allocate_id(name, set()) == "rauwolfia-vomitoria"
    assert allocate_id(name, {"rauwolfia-vomitoria"}) == "rauwolfia-vomitoria-2"
    assert (
        allocate_id(name, {"rauwolfia-vomitoria", "rauwolfia-vomitoria-2"})
        == "rauwolfia-vomitoria-3"
    )
