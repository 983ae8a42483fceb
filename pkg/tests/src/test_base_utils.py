# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Test the utilities in :py:mod:`hkstars.base_utils`

"""
import pytest
from hypothesis import given, example
from hypothesis.strategies import integers, lists, text
from hkstars.base_utils import argmax_set, parse_int_list, strip_comment

# pragma pylint: disable=missing-docstring


def test_strip_comment_keeps_code():
    assert strip_comment("3 4") == "3 4"
    assert strip_comment("3 4#x") == "3 4"
    assert strip_comment("\t 3 4 \n") == "3 4"


@given(text())
@example("#")
@example("a # b # c")
def test_strip_comment_never_keeps_hash(line):
    stripped = strip_comment(line)
    assert "#" not in stripped
    assert stripped == stripped.strip()


@given(lists(integers(min_value=0, max_value=10 ** 30)))
def test_parse_int_list_inverts_join(values):
    assert parse_int_list(",".join(str(v) for v in values)) == values


def test_parse_int_list_other_separator():
    assert parse_int_list("1/2/3", sep="/") == [1, 2, 3]


@pytest.mark.parametrize("bad", ["1,,2", "-1", "a", "1,2,", "\u00b2",
                                 "1,\u00b3"])
def test_parse_int_list_rejects(bad):
    with pytest.raises(ValueError):
        parse_int_list(bad)


@given(lists(integers(min_value=-5, max_value=5), min_size=1))
@example([0, 0, 0])
def test_argmax_set(values):
    best = argmax_set(values)
    assert best
    top = max(values)
    assert best == {i for i, val in enumerate(values) if val == top}
