"""Parser and serializer tests for the set-file format."""

from __future__ import annotations

import pytest

from ksets import catalog
from ksets.errors import (
    SetSyntaxError,
    UnknownReferenceError,
    ValidationError,
)
from ksets.setfile import parse, serialize


def test_parse_embedded_18_9():
    s = catalog.seed_set("d4-18-9")
    assert s.n_projectors == 18
    assert s.n_contexts == 9


def test_parse_reports_incomplete_context():
    with pytest.raises(ValidationError) as err:
        parse("dim 2\nray a 1 0\nctx a\n")
    assert any("rank sum" in issue for issue in err.value.report.issues)


def test_parse_alias_token():
    s = parse("dim 2\nray a 1 w3\nray b 1 -w3\nctx a b\n")
    from ksets.cyclo import OMEGA3

    assert s.projectors["a"].span[0].entries[1] == OMEGA3
    assert s.projectors["b"].span[0].entries[1] == -OMEGA3


def test_parse_comments_and_blanks():
    text = "# heading\ndim 2\n\nray a 1 0  # trailing\nray b 0 1\nctx a b\n"
    s = parse(text)
    assert s.n_projectors == 2


def test_parse_proj_groups():
    text = (
        "dim 3\n"
        "ray x 1 0 0\nray y 0 1 0\nray z 0 0 1\n"
        "proj p x y\n"
        "ctx p z\n"
    )
    s = parse(text)
    assert s.projectors["p"].rank == 2
    assert s.contexts == [("p", "z")]


def test_parse_rejects_unknown_reference():
    with pytest.raises(UnknownReferenceError):
        parse("dim 2\nray a 1 0\nray b 0 1\nctx a c\n")


def test_parse_rejects_grouped_ray_in_context():
    text = (
        "dim 3\n"
        "ray x 1 0 0\nray y 0 1 0\nray z 0 0 1\n"
        "proj p x y\n"
        "ctx x z\n"
    )
    with pytest.raises(UnknownReferenceError):
        parse(text)


def test_parse_rejects_bad_dim_line():
    with pytest.raises(SetSyntaxError):
        parse("ray a 1 0\n")


def test_parse_rejects_wrong_entry_count():
    with pytest.raises(SetSyntaxError) as err:
        parse("dim 3\nray a 1 0\n")
    assert err.value.line == 2


def test_parse_rejects_duplicate_ray_id():
    with pytest.raises(SetSyntaxError):
        parse("dim 2\nray a 1 0\nray a 0 1\nctx a a\n")


def test_parse_rejects_double_grouping():
    text = (
        "dim 4\n"
        "ray w 1 0 0 0\nray x 0 1 0 0\nray y 0 0 1 0\nray z 0 0 0 1\n"
        "proj p w x\nproj q x y\n"
        "ctx p z y\n"
    )
    with pytest.raises(SetSyntaxError):
        parse(text)


def test_round_trip_all_catalog_entries():
    for entry in catalog.entries():
        text = serialize(entry.set)
        again = parse(text)
        assert again == entry.set, entry.name


def test_round_trip_preserves_higher_ranks():
    s = catalog.seed_set("d8-30-9")
    again = parse(serialize(s))
    assert again.projectors["1+2"].rank == 2
    assert again == s


def test_serialize_renders_minimal_scalars():
    s = parse("dim 2\nray a 1 1/2\nray b 1 -2\nctx a b\n")
    text = serialize(s)
    assert "1/2" in text
    s21 = catalog.seed_set("d6-21-7")
    text21 = serialize(s21)
    assert "-z^4" in text21  # the conjugate cube root renders as a monomial
    assert "w3" in text21
