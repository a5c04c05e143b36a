import itertools

import pytest
from hypothesis import given, strategies as st

from contlaws.kernel import (DepTable, FinIndexSet, RankError, enumerate_dep_maps, nested_families,
                             pair_index, rank_dep_map, space_size, unrank_dep_map)


def test_fin_index_set():
    F = FinIndexSet(3)
    assert list(F) == [0, 1, 2] and len(F) == 3
    assert 2 in F and 3 not in F and -1 not in F
    with pytest.raises(ValueError):
        FinIndexSet(-1)


def test_enumeration_is_lexicographic_first_index_most_significant():
    maps = [t.entries for t in enumerate_dep_maps([2, 3])]
    assert maps == list(itertools.product(range(2), range(3)))
    assert [rank_dep_map(t) for t in enumerate_dep_maps([2, 3])] == list(range(6))


def test_empty_domain_has_one_map_and_empty_codomain_none():
    assert [t.entries for t in enumerate_dep_maps([])] == [()]
    assert enumerate_dep_maps([2, 0]) == []


def test_rank_examples():
    assert rank_dep_map((1, 2), [2, 3]) == 5
    assert unrank_dep_map([2, 3], 4).entries == (1, 1)


def test_rank_errors():
    with pytest.raises(RankError):
        unrank_dep_map([2, 3], 6)
    with pytest.raises(RankError):
        rank_dep_map((0, 3), [2, 3])
    with pytest.raises(RankError):
        space_size([2] * 64)


def test_dep_table_validation():
    with pytest.raises(ValueError):
        DepTable((2,), (2,))
    with pytest.raises(ValueError):
        DepTable((2, 2), (0,))


@given(st.lists(st.integers(1, 4), max_size=5), st.data())
def test_rank_unrank_round_trip(sizes, data):
    total = 1
    for n in sizes:
        total *= n
    r = data.draw(st.integers(0, total - 1))
    assert rank_dep_map(unrank_dep_map(sizes, r)) == r


def test_nested_families_and_pairs():
    fams = list(nested_families([1, 0, 2], 2))
    assert len(fams) == 2 ** 3
    assert fams[0] == ((0,), (), (0, 0)) and fams[-1] == ((1,), (), (1, 1))
    assert pair_index([2, 0, 1]) == [(0, 0), (0, 1), (2, 0)]
