"""Acceptance suite: eight end-to-end criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import sys
import time
import traceback

sys.path.insert(0, os.path.dirname(__file__))

from contlaws.compose import check_compatible, composite_from_law, law_from_composite  # noqa: E402
from contlaws.container import enumerate_ext  # noqa: E402
from contlaws.directed import check_directed  # noqa: E402
from contlaws.laws import (DIR_MND_EQUATIONS, MND_DIR_EQUATIONS, MND_MND_EQUATIONS, LawKind,  # noqa: E402
                           beck_oracle, check_law, check_mnd_mnd)
from contlaws.monadic import check_monadic, check_sigma_universe  # noqa: E402
from contlaws.report import Status  # noqa: E402
from contlaws.search import (Applicable, BoundedSat, BoundedUnsat, Complete, NotApplicable,  # noqa: E402
                             SearchProblem, check_left_zero, enumerate_candidates, nogo_certificate,
                             refute_bounded, search_laws)
from contlaws.zoo import (cyclic, dir_mnd_law_from_matching_pair, embed_shape, exception,  # noqa: E402
                          exception_law, list_monadic, matching_pairs, mk_predicate_universe,
                          reader, reader_directed, reader_law, state,
                          writer, writer_directed, writer_reader_mixed_law, zappa_szep)

import oracles  # noqa: E402

RESULTS: dict[int, tuple[bool, str, str]] = {}

TITLES = {
    1: "axiom suites for the container zoo",
    2: "law fixtures against the equation suites and the Beck oracle",
    3: "checker and Beck oracle agree on every writer/writer candidate",
    4: "law counts by exhaustive search",
    5: "law -> composite -> law round trips",
    6: "monoid correspondences against brute force",
    7: "no-go certificate and bounded refutation",
    8: "predicate universe over exceptions",
}


def _record(n: int, fn):
    try:
        detail = fn()
        RESULTS[n] = (True, TITLES[n], detail or "")
    except Exception as exc:  # record, then let pytest report the failure
        RESULTS[n] = (False, TITLES[n], f"{type(exc).__name__}: {exc}".strip())
        raise


def result_lines() -> list[str]:
    return [f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}" + (f" ({detail})" if detail else "")
            for n, (ok, title, detail) in sorted(RESULTS.items())]


def _verified(report, names):
    assert report.names == list(names), report.names
    assert report.status is Status.VERIFIED, report.summary()


# -- 1 ---------------------------------------------------------------------------------


def _criterion_1():
    start = time.perf_counter()
    monadic = [exception(0), exception(1), exception(2), writer(cyclic(2)), writer(cyclic(3)),
               reader(1), reader(2), reader(3), state(2)]
    for M in monadic:
        assert check_monadic(M).status is Status.VERIFIED, M.name
    for D in [writer_directed(2), reader_directed(cyclic(2))]:
        assert check_directed(D).status is Status.VERIFIED, D.name
    lst = check_monadic(list_monadic(4))
    assert lst.status is Status.BOUNDED and lst.refuted() == []
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"took {elapsed:.1f}s"
    return f"{len(monadic) + 2} Verified, list:4 BoundedVerified, {elapsed:.2f}s"


def test_criterion_1_axiom_suites():
    _record(1, _criterion_1)


# -- 2 ---------------------------------------------------------------------------------


def _criterion_2():
    fixtures = [exception_law(1, writer(cyclic(2))), exception_law(2, reader(2)),
                reader_law(writer(cyclic(2)), 2), reader_law(exception(1), 2)]
    for L in fixtures:
        _verified(check_law(L), MND_MND_EQUATIONS)
        beck = beck_oracle(L, sizes=(0, 1, 2, 3))
        assert beck.status is Status.VERIFIED, beck.summary()
    _verified(check_law(writer_reader_mixed_law(2, 2)), MND_DIR_EQUATIONS)
    Z2 = cyclic(2)
    mps = matching_pairs(Z2, Z2)
    assert mps
    for mp in mps:
        _verified(check_law(dir_mnd_law_from_matching_pair(mp)), DIR_MND_EQUATIONS)
    return f"{len(fixtures)} monad laws 18/18 + Beck, mixed 13/13, dir-mnd 16/16"


def test_criterion_2_law_fixtures():
    _record(2, _criterion_2)


# -- 3 ---------------------------------------------------------------------------------


def _writer_pass_sets():
    Z = writer(cyclic(2))
    candidates = list(enumerate_candidates(Z, Z))
    by_checker = [L for L in candidates if check_mnd_mnd(L).ok]
    by_beck = [L for L in candidates if beck_oracle(L, sizes=(0, 1, 2, 3)).ok]
    return candidates, by_checker, by_beck


def _criterion_3():
    start = time.perf_counter()
    candidates, by_checker, by_beck = _writer_pass_sets()
    assert [L.flatten() for L in by_checker] == [L.flatten() for L in by_beck]
    elapsed = time.perf_counter() - start
    assert elapsed < 300, f"took {elapsed:.1f}s"
    return f"{len(candidates)} candidates, {len(by_checker)} pass both, {elapsed:.2f}s"


def test_criterion_3_oracle_equivalence():
    _record(3, _criterion_3)


# -- 4 ---------------------------------------------------------------------------------

SEARCHES = [
    ("exception:1/writer:z2", SearchProblem(exception(1), writer(cyclic(2)))),
    ("exception:2/writer:z2", SearchProblem(exception(2), writer(cyclic(2)))),
    ("writer:z2/reader:2", SearchProblem(writer(cyclic(2)), reader(2))),
    ("writer-dir:2/reader:2", SearchProblem(writer_directed(2), reader(2), LawKind.MND_DIR)),
]


def _criterion_4():
    counts = []
    for name, problem in SEARCHES:
        verdict = search_laws(problem)
        assert isinstance(verdict, Complete), f"{name}: {verdict.name}"
        assert len(verdict.laws) == 1, f"{name}: {len(verdict.laws)} laws"
        counts.append(f"{name}=1")
    return ", ".join(counts)


def test_criterion_4_uniqueness():
    _record(4, _criterion_4)


# -- 5 ---------------------------------------------------------------------------------


def _criterion_5():
    laws = []
    for _, problem in SEARCHES:
        if problem.kind is LawKind.MND_MND:
            laws += search_laws(problem).laws
    laws += _writer_pass_sets()[1]
    for L in laws:
        CC = composite_from_law(L)
        report = check_compatible(CC)
        assert report.status is Status.VERIFIED and len(report.names) == 16, report.summary()
        assert law_from_composite(CC).same_tables(L)
    return f"{len(laws)} monad-monad laws, 16/16 families each, tables restored exactly"


def test_criterion_5_round_trips():
    _record(5, _criterion_5)


# -- 6 ---------------------------------------------------------------------------------


def _criterion_6():
    Z2 = cyclic(2)
    t = [list(r) for r in Z2.table]
    laws = search_laws(SearchProblem(writer(Z2), writer(Z2))).laws
    expected_pairs = oracles.matching_pair_count(t, Z2.e, t, Z2.e)
    assert len(laws) == expected_pairs, (len(laws), expected_pairs)
    for mp in matching_pairs(Z2, Z2):
        Z = zappa_szep(mp)
        assert oracles.is_monoid([list(r) for r in Z.table], Z.e)
        assert check_monadic(writer(Z)).ok
    mixed = search_laws(SearchProblem(reader_directed(Z2), writer(Z2), LawKind.MND_DIR)).laws
    expected_actions = oracles.functional_action_count(t, Z2.e, t, Z2.e)
    assert len(mixed) == expected_actions, (len(mixed), expected_actions)
    literal = search_laws(SearchProblem(writer_directed(2), reader(2), LawKind.MND_DIR)).laws
    assert len(literal) == expected_actions
    return (f"matching pairs {len(laws)}={expected_pairs}, functional actions "
            f"{len(mixed)}={expected_actions}")


def test_criterion_6_monoid_correspondences():
    _record(6, _criterion_6)


# -- 7 ---------------------------------------------------------------------------------


def _criterion_7():
    L3 = list_monadic(3)
    cert = nogo_certificate(L3, exception(2))
    assert isinstance(cert, Applicable), cert
    verdict = refute_bounded(SearchProblem(L3, exception(2)))
    assert isinstance(verdict, BoundedUnsat), verdict.name
    assert isinstance(nogo_certificate(L3, exception(1)), NotApplicable)
    partial = refute_bounded(SearchProblem(L3, exception(1)))
    assert isinstance(partial, BoundedSat), partial.name
    for M in (exception(2), L3):
        assert check_left_zero(M).ok
    return f"Applicable + BoundedUnsat in {verdict.nodes} nodes; E=1 NotApplicable + partial law"


def test_criterion_7_nogo():
    _record(7, _criterion_7)


# -- 8 ---------------------------------------------------------------------------------


def _criterion_8():
    M = exception(1)
    U = mk_predicate_universe(M)
    assert check_monadic(U).status is Status.VERIFIED
    assert check_sigma_universe(U)
    for s in range(M.n_shapes):
        code = embed_shape(U, s)
        for n in range(4):
            ours = sum(1 for e in enumerate_ext(U.base, range(n)) if e.shape == code)
            orig = sum(1 for e in enumerate_ext(M.base, range(n)) if e.shape == s)
            assert ours == orig, (s, n, ours, orig)
    return f"{U.n_shapes} shapes, monadic and Σ-universe, embeddings size-preserving for |X|<=3"


def test_criterion_8_predicate_universe():
    _record(8, _criterion_8)


if __name__ == "__main__":
    for n, fn in [(1, _criterion_1), (2, _criterion_2), (3, _criterion_3), (4, _criterion_4),
                  (5, _criterion_5), (6, _criterion_6), (7, _criterion_7), (8, _criterion_8)]:
        try:
            _record(n, fn)
        except Exception:
            traceback.print_exc()
    print("\n".join(result_lines()))
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
