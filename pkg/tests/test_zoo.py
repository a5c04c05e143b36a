import itertools

import pytest

from contlaws.laws import LawKind, check_law
from contlaws.report import Status
from contlaws.search import SearchProblem, search_laws
from contlaws.zoo import (FunctionalAction, MatchingPair, Monoid, cyclic, dir_mnd_law_from_matching_pair,
                          enumerate_monoids, functional_action_from_mixed_law, functional_actions,
                          law_from_matching_pair, matching_pair_from_dir_mnd_law, matching_pair_from_law,
                          matching_pairs, mixed_law_from_functional_action, monoid_of_writer, opposite,
                          reader_directed, trivial_monoid, writer, zappa_szep)

import oracles

MONOIDS2 = enumerate_monoids(2)
PAIRS2 = list(itertools.product(MONOIDS2, repeat=2))
PAIR_IDS = [f"m{i}-m{j}" for i, j in itertools.product(range(len(MONOIDS2)), repeat=2)]


def _key(mp):
    return mp.alpha, mp.beta


def test_monoid_enumeration_counts():
    assert len(MONOIDS2) == len(oracles.all_monoid_tables(2)) == 4
    assert len(enumerate_monoids(3)) == len(oracles.all_monoid_tables(3)) == 33
    for M in MONOIDS2:
        assert oracles.is_monoid([list(r) for r in M.table], M.e)


def test_monoid_validation():
    with pytest.raises(ValueError):
        Monoid(2, 0, ((0, 1), (1, 1 + 1)))
    with pytest.raises(ValueError):
        Monoid(2, 1, ((0, 1), (1, 0)))
    assert trivial_monoid().size == 1
    A = Monoid(2, 0, ((0, 1), (1, 1)))
    assert opposite(A).table == A.table


def test_writer_roundtrips_monoid():
    for M in enumerate_monoids(3):
        back = monoid_of_writer(writer(M))
        assert back.table == M.table and back.e == M.e


@pytest.mark.parametrize("A,B", PAIRS2, ids=PAIR_IDS)
def test_laws_between_writers_are_matching_pairs(A, B):
    laws = search_laws(SearchProblem(writer(A), writer(B))).laws
    pairs = matching_pairs(A, B)
    assert len(laws) == len(pairs)
    assert sorted(_key(matching_pair_from_law(L)) for L in laws) == sorted(_key(mp) for mp in pairs)
    for mp in pairs:
        assert check_law(law_from_matching_pair(mp)).status is Status.VERIFIED


@pytest.mark.parametrize("A,B", PAIRS2, ids=PAIR_IDS)
def test_zappa_szep_product(A, B):
    for mp in matching_pairs(A, B):
        Z = zappa_szep(mp)
        table, e = oracles.zappa_szep_table([list(r) for r in A.table], [list(r) for r in B.table],
                                            A.e, B.e, mp.alpha, mp.beta)
        assert [list(r) for r in Z.table] == table and Z.e == e
        assert oracles.is_monoid(table, e)


@pytest.mark.parametrize("A,B", PAIRS2, ids=PAIR_IDS)
def test_dir_mnd_laws_are_matching_pairs(A, B):
    problem = SearchProblem(writer(opposite(A)), reader_directed(B), LawKind.DIR_MND)
    laws = search_laws(problem).laws
    pairs = matching_pairs(A, B)
    assert len(laws) == len(pairs)
    assert sorted(_key(matching_pair_from_dir_mnd_law(L)) for L in laws) == sorted(_key(mp) for mp in pairs)
    for mp in pairs:
        L = dir_mnd_law_from_matching_pair(mp)
        assert check_law(L).ok
        assert _key(matching_pair_from_dir_mnd_law(L)) == _key(mp)


def test_opposite_matters_for_dir_mnd_laws():
    A = next(M for M in enumerate_monoids(3) if any(M.mul(a, b) != M.mul(b, a)
                                                    for a in range(3) for b in range(3)))
    B = cyclic(2)
    with_op = search_laws(SearchProblem(writer(opposite(A)), reader_directed(B), LawKind.DIR_MND)).laws
    without = search_laws(SearchProblem(writer(A), reader_directed(B), LawKind.DIR_MND)).laws
    assert len(with_op) == len(matching_pairs(A, B))
    assert len(without) != len(with_op)


@pytest.mark.parametrize("A,B", PAIRS2, ids=PAIR_IDS)
def test_mixed_laws_are_functional_actions(A, B):
    laws = search_laws(SearchProblem(reader_directed(A), writer(B), LawKind.MND_DIR)).laws
    actions = functional_actions(A, B)
    assert len(laws) == len(actions)
    got = sorted(sorted(functional_action_from_mixed_law(L).alpha.items()) for L in laws)
    assert got == sorted(sorted(fa.alpha.items()) for fa in actions)
    for fa in actions:
        assert check_law(mixed_law_from_functional_action(fa)).status is Status.VERIFIED


def test_invalid_matching_pair_and_action():
    Z2 = cyclic(2)
    with pytest.raises(ValueError):
        MatchingPair(Z2, Z2, ((0, 0), (1, 1)), ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        FunctionalAction(Z2, Z2, {f: (1, 1) for f in itertools.product(range(2), repeat=2)})


def test_trivial_actions_always_match():
    for A, B in PAIRS2:
        alpha = tuple(tuple(a for _ in range(B.size)) for a in range(A.size))
        beta = tuple(tuple(b for b in range(B.size)) for _ in range(A.size))
        MatchingPair(A, B, alpha, beta)
