"""Report table rendering details."""

import pytest

from avcbounds.report import Table, bound_table, format_members


def test_add_checks_arity():
    table = Table(("a", "b"))
    table.add(1, 2)
    with pytest.raises(ValueError):
        table.add(1)


def test_csv_escapes_and_none():
    table = Table(("a", "b"))
    table.add("x,y", None)
    assert table.to_csv() == 'a,b\n"x,y",\n'


def test_json_is_stable():
    table = bound_table(title="t")
    table.add("l=1", "wb", 3, "")
    first = table.to_json()
    assert first == table.to_json()
    assert first.endswith("\n")


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        bound_table().render("xml")


def test_format_members():
    assert format_members((3, 1, 9)) == "{3 1 9}"
    assert format_members(()) == "{}"
