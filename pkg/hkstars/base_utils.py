# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Basic utilities for generally applicable functions

"""

from typing import FrozenSet, List, Sequence


def strip_comment(line: str) -> str:
    r"""Remove a ``#`` comment and surrounding whitespace from a line

    >>> strip_comment('0 1  # spine edge\n')
    '0 1'
    >>> strip_comment('# only a comment')
    ''
    >>> strip_comment('  n 4 ')
    'n 4'

    Args:
        line: The line to clean up

    Returns: ``line`` without any comment, leading or trailing whitespace

    """
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return line.strip()


def parse_int_list(text: str, sep: str = ",") -> List[int]:
    """Parse a separated list of non-negative integers

    An empty string is an empty list.

    >>> parse_int_list("2,0,1,3")
    [2, 0, 1, 3]
    >>> parse_int_list("")
    []
    >>> parse_int_list("1, 2")
    [1, 2]

    Args:
        text: The text to parse
        sep: Separator between the integers

    Returns: The integers in order

    Raises:
        ValueError: When an element is not a non-negative integer

    """
    if not text.strip():
        return []
    values = []
    for elem in text.split(sep):
        elem = elem.strip()
        if not elem.isdecimal():
            raise ValueError("'{}' is not a non-negative integer (in "
                             "'{}')".format(elem, text))
        values.append(int(elem))
    return values


def argmax_set(values: Sequence[int]) -> FrozenSet[int]:
    """Get every index at which a sequence attains its maximum

    >>> sorted(argmax_set([3, 7, 1, 7]))
    [1, 3]
    >>> argmax_set([])
    frozenset()

    Args:
        values: The values to search through

    Returns: The indices of all maximal elements. Ties are all reported.

    """
    if not values:
        return frozenset()
    best = max(values)
    return frozenset(i for i, val in enumerate(values) if val == best)
