import pytest

from contlaws.laws import LawKind, check_law
from contlaws.report import Status
from contlaws.search import (Applicable, BoundedSat, BoundedUnsat, BudgetExceeded, Complete, NotApplicable,
                             SearchProblem, check_composite_s3, check_left_zero, check_S3,
                             enumerate_candidates, nogo_certificate, refute_bounded, search_laws)
from contlaws.zoo import (cyclic, exception, exception_law, list_monadic, maybe, reader, reader_directed,
                          state, writer, writer_directed)


def _brute_force(slot1, slot2, kind=LawKind.MND_MND):
    return sorted((L for L in enumerate_candidates(slot1, slot2, kind) if check_law(L).ok),
                  key=lambda L: L.flatten())


PAIRS = [
    ("exc1/z2", exception(1), writer(cyclic(2)), LawKind.MND_MND),
    ("z2/reader2", writer(cyclic(2)), reader(2), LawKind.MND_MND),
    ("z2/z2", writer(cyclic(2)), writer(cyclic(2)), LawKind.MND_MND),
    ("exc1/exc1", exception(1), exception(1), LawKind.MND_MND),
    ("wdir2/reader2", writer_directed(2), reader(2), LawKind.MND_DIR),
    ("z2/rdir-z2", writer(cyclic(2)), reader_directed(cyclic(2)), LawKind.DIR_MND),
]


@pytest.mark.parametrize("name,s1,s2,kind", PAIRS, ids=[p[0] for p in PAIRS])
def test_search_agrees_with_brute_force(name, s1, s2, kind):
    verdict = search_laws(SearchProblem(s1, s2, kind))
    assert isinstance(verdict, Complete)
    expected = _brute_force(s1, s2, kind)
    assert [L.flatten() for L in verdict.laws] == [L.flatten() for L in expected]
    assert all(check_law(L).status is Status.VERIFIED for L in verdict.laws)


def test_search_finds_the_exception_law():
    M = writer(cyclic(2))
    verdict = search_laws(SearchProblem(exception(2), M))
    assert [L.flatten() for L in verdict.laws] == [exception_law(2, M).flatten()]


def test_search_is_deterministic():
    p = SearchProblem(maybe(), reader(2))
    a, b = search_laws(p), search_laws(p)
    assert [L.flatten() for L in a.laws] == [L.flatten() for L in b.laws]
    assert a.nodes == b.nodes


def test_budget_exceeded():
    verdict = search_laws(SearchProblem(exception(1), state(2), budget=5))
    assert isinstance(verdict, BudgetExceeded)
    assert verdict.nodes > 5


def test_search_rejects_bad_problems():
    with pytest.raises(ValueError):
        SearchProblem(writer_directed(2), reader(2), LawKind.MND_MND)
    with pytest.raises(ValueError):
        SearchProblem(exception(1), list_monadic(2))
    with pytest.raises(ValueError):
        search_laws(SearchProblem(list_monadic(2), exception(1)))


def test_list_over_two_exceptions_is_bounded_unsat():
    verdict = refute_bounded(SearchProblem(list_monadic(3), exception(2)))
    assert isinstance(verdict, BoundedUnsat)
    assert verdict.fuel == 3 and verdict.instances > 0


def test_list_over_one_exception_is_bounded_sat():
    verdict = refute_bounded(SearchProblem(list_monadic(3), exception(1)))
    assert isinstance(verdict, BoundedSat)


def test_nogo_certificate_list_exceptions():
    cert = nogo_certificate(list_monadic(3), exception(2))
    assert isinstance(cert, Applicable)
    assert cert.witness == (2, (0, 0))
    assert cert.positions == (0, 1) and cert.constants == (1, 2)
    assert isinstance(nogo_certificate(list_monadic(3), exception(1)), NotApplicable)
    assert isinstance(nogo_certificate(writer(cyclic(2)), exception(2)), NotApplicable)
    assert isinstance(nogo_certificate(reader(2), exception(2)), NotApplicable)


def test_s3_witnesses():
    assert check_S3(list_monadic(3)) == (1, (0,))
    assert check_S3(state(2)) == (1, (0, 1))
    assert check_S3(writer(cyclic(2))) == (0, (0,))
    assert check_S3(exception(2), min_positions=2) is None


def test_left_zero_and_composite_s3():
    assert check_left_zero(exception(2)).status is Status.VERIFIED
    assert check_left_zero(list_monadic(3)).ok
    laws = search_laws(SearchProblem(writer(cyclic(2)), exception(1))).laws
    assert laws
    for L in laws:
        assert check_composite_s3(L).ok


def test_applicable_certificate_agrees_with_bounded_search():
    for fuel in (2, 3):
        for E in (1, 2, 3):
            cert = nogo_certificate(list_monadic(fuel), exception(E))
            verdict = refute_bounded(SearchProblem(list_monadic(fuel), exception(E)))
            if isinstance(cert, Applicable):
                assert isinstance(verdict, BoundedUnsat)
