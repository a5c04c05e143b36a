"""Distributive-law data, the three equation suites, and the Beck oracle.

Slots are positional.  ``slot1`` holds the container written (S, P) in the
law's data types and ``slot2`` the one written (T, Q):

    u1 : (s : S) -> (P s -> T) -> T
    u2 : (s : S) -> (f : P s -> T) -> Q (u1 s f) -> S
    v1 : ... -> (q : Q (u1 s f)) -> P (u2 s f q) -> P s
    v2 : ... -> (q : Q (u1 s f)) -> (p : P (u2 s f q)) -> Q (f (v1 q p))

For monad-monad laws the composite monad lives on ``slot2 ∘ slot1``, so
slot1 is the *inner* and slot2 the *outer* container, and the law acts as
γ : ⟦inner⟧⟦outer⟧ ⇒ ⟦outer⟧⟦inner⟧.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .container import Container, Ext, OutOfFuel, check_ext, enumerate_nested, generic_elements
from .directed import DirectedContainer
from .kernel import nested_families
from .monadic import MonadicContainer, interpret_monad
from .natural import check_natural_law
from .report import EquationReport, EquationResult, Instance, run_instances


class LawKind(str, Enum):
    MND_MND = "mnd-mnd"
    MND_DIR = "mnd-dir"  # slot1 directed, slot2 monadic
    DIR_MND = "dir-mnd"  # slot1 monadic, slot2 directed


MND_MND_EQUATIONS = (
    "unit-ιS-s1", "unit-ιS-s2", "unit-ιS-p1", "unit-ιS-p2",
    "unit-ιT-s1", "unit-ιT-s2", "unit-ιT-p1", "unit-ιT-p2",
    "mul-S-s1", "mul-S-s2", "mul-S-p1", "mul-S-p21", "mul-S-p22",
    "mul-T-s1", "mul-T-s2", "mul-T-p1", "mul-T-p21", "mul-T-p22",
)

MND_DIR_EQUATIONS = (
    "unit-oS-s", "unit-oS-p1", "unit-oS-p2",
    "mul-S-s3", "mul-S-p1", "mul-S-p2",
    "unit-ιT-s2", "unit-ιT-p1", "unit-ιT-p2",
    "mul-T-s2", "mul-T-p1", "mul-T-p21", "mul-T-p22",
)

DIR_MND_EQUATIONS = (
    "unit-ιS-s1", "unit-ιS-s2", "unit-ιS-p1", "unit-ιS-p2",
    "mul-S-s1", "mul-S-s2", "mul-S-p1", "mul-S-p21", "mul-S-p22",
    "unit-oT-s", "unit-oT-p1", "unit-oT-p2",
    "mul-T-s1", "mul-T-s2", "mul-T-p1", "mul-T-p2",
)

EQUATIONS = {LawKind.MND_MND: MND_MND_EQUATIONS, LawKind.MND_DIR: MND_DIR_EQUATIONS,
             LawKind.DIR_MND: DIR_MND_EQUATIONS}

SLOT_TYPES = {
    LawKind.MND_MND: (MonadicContainer, MonadicContainer),
    LawKind.MND_DIR: (DirectedContainer, MonadicContainer),
    LawKind.DIR_MND: (MonadicContainer, DirectedContainer),
}


def law_rows(S: Container, T: Container):
    """Canonical (s, f) row keys of u1/u2/v1/v2."""
    for s in range(S.n_shapes):
        for f in S.families(s, T.n_shapes):
            yield s, f


@dataclass(frozen=True)
class DistLawData:
    """Tabulated law; ``u2``/``v1``/``v2`` rows are tuples indexed by q (then p).

    Under fuel a ``u2`` entry may be ``None`` (a shape beyond the bound);
    its ``v1``/``v2`` rows are then empty tuples and never read.
    """

    kind: LawKind
    slot1: MonadicContainer | DirectedContainer
    slot2: MonadicContainer | DirectedContainer
    u1_table: dict = field(repr=False)
    u2_table: dict = field(repr=False)
    v1_table: dict = field(repr=False)
    v2_table: dict = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", LawKind(self.kind))
        problems = self.validate()
        if problems:
            raise ValueError("invalid law data: " + problems[0])

    @property
    def S(self) -> Container:
        return self.slot1.base

    @property
    def T(self) -> Container:
        return self.slot2.base

    def u1(self, s, f):
        return self.u1_table[(s, f)]

    def u2(self, s, f, q):
        out = self.u2_table[(s, f)][q]
        if out is None:
            raise OutOfFuel(f"u2({s}, {f}, {q})")
        return out

    def v1(self, s, f, q, p):
        return self.v1_table[(s, f)][q][p]

    def v2(self, s, f, q, p):
        return self.v2_table[(s, f)][q][p]

    def rows(self):
        return law_rows(self.S, self.T)

    def validate(self) -> list[str]:
        S, T = self.S, self.T
        want1, want2 = SLOT_TYPES[self.kind]
        problems = []
        if not isinstance(self.slot1, want1) or not isinstance(self.slot2, want2):
            problems.append(f"slots do not match kind {self.kind.value}")
        if T.fueled:
            problems.append("slot2 must be finite")
        for s, f in self.rows():
            key = (s, f)
            if key not in self.u1_table:
                problems.append(f"u1 missing row {s} {list(f)}")
                continue
            u = self.u1_table[key]
            if not 0 <= u < T.n_shapes:
                problems.append(f"u1[{s}, {list(f)}] = {u} is not a slot2 shape")
                continue
            row2 = self.u2_table.get(key, ())
            if len(row2) != T.positions[u]:
                problems.append(f"u2[{s}, {list(f)}] needs {T.positions[u]} entries")
                continue
            row_v1, row_v2 = self.v1_table.get(key, ()), self.v2_table.get(key, ())
            if len(row_v1) != len(row2) or len(row_v2) != len(row2):
                problems.append(f"v rows of [{s}, {list(f)}] have the wrong length")
                continue
            for q, b in enumerate(row2):
                if b is None:
                    if not S.fueled:
                        problems.append(f"u2[{s}, {list(f)}][{q}] undefined")
                    continue
                if not 0 <= b < S.n_shapes:
                    problems.append(f"u2[{s}, {list(f)}][{q}] = {b} is not a slot1 shape")
                    continue
                if len(row_v1[q]) != S.positions[b] or len(row_v2[q]) != S.positions[b]:
                    problems.append(f"v row [{s}, {list(f)}][{q}] needs {S.positions[b]} entries")
                    continue
                for p, (a, c) in enumerate(zip(row_v1[q], row_v2[q])):
                    if not 0 <= a < S.positions[s]:
                        problems.append(f"v1[{s}, {list(f)}][{q}][{p}] = {a} out of range")
                    elif not 0 <= c < T.positions[f[a]]:
                        problems.append(f"v2[{s}, {list(f)}][{q}][{p}] = {c} out of range")
        return problems

    def flatten(self) -> tuple:
        """Canonical key: all entries of u1, u2, v1, v2 in row order."""
        keys = list(self.rows())
        out = [self.u1_table[k] for k in keys]
        for table in (self.u2_table, self.v1_table, self.v2_table):
            for k in keys:
                out.append(table[k])
        return tuple(out)

    def same_tables(self, other: "DistLawData") -> bool:
        return (self.kind == other.kind and self.u1_table == other.u1_table
                and self.u2_table == other.u2_table and self.v1_table == other.v1_table
                and self.v2_table == other.v2_table)


def law_from_functions(kind, slot1, slot2, u1, u2, v1, v2) -> DistLawData:
    """Tabulate a law from Python callables u1(s,f), u2(s,f,q), v1/v2(s,f,q,p)."""
    S, T = slot1.base, slot2.base
    U1, U2, V1, V2 = {}, {}, {}, {}
    for s, f in law_rows(S, T):
        u = U1[(s, f)] = u1(s, f)
        if not 0 <= u < T.n_shapes:
            raise ValueError(f"u1({s}, {list(f)}) = {u} is not a slot2 shape")
        row = U2[(s, f)] = tuple(u2(s, f, q) for q in range(T.positions[u]))
        if any(b is not None and not 0 <= b < S.n_shapes for b in row):
            raise ValueError(f"u2({s}, {list(f)}) has an entry outside slot1's shapes")
        width = [0 if b is None else S.positions[b] for b in row]
        V1[(s, f)] = tuple(tuple(v1(s, f, q, p) for p in range(width[q])) for q in range(len(row)))
        V2[(s, f)] = tuple(tuple(v2(s, f, q, p) for p in range(width[q])) for q in range(len(row)))
    return DistLawData(LawKind(kind), slot1, slot2, U1, U2, V1, V2)


# -- equation groups ------------------------------------------------------------
# Each group is one Instance; position equations run only where their governing
# shape equation holds, otherwise they are reported as blocked.


def _block_all(rec, names):
    for n in names:
        rec.block(n)


def unit_iota_S_instances(S: MonadicContainer, T: Container, L):
    names = MND_MND_EQUATIONS[:4]
    i = S.iota
    for t in range(T.n_shapes):
        def run(rec, t=t):
            f = (t,) * S.pos(i)
            u = L.u1(i, f)
            s1 = rec.eq("unit-ιS-s1", u, t)
            for q in range(T.positions[u]):
                b = L.u2(i, f, q)
                s2 = rec.eq("unit-ιS-s2", b, i, q=q)
                for p in range(S.pos(b)):
                    if s2:
                        rec.eq("unit-ιS-p1", L.v1(i, f, q, p), p, q=q, p=p)
                    else:
                        rec.block("unit-ιS-p1")
                    if s1:
                        rec.eq("unit-ιS-p2", L.v2(i, f, q, p), q, q=q, p=p)
                    else:
                        rec.block("unit-ιS-p2")
        yield Instance(names, {"t": t}, run)


def unit_iota_T_instances(S: Container, T: MonadicContainer, L, with_s1=True):
    names = ("unit-ιT-s1",) * with_s1 + ("unit-ιT-s2", "unit-ιT-p1", "unit-ιT-p2")
    j = T.iota
    for s in range(S.n_shapes):
        def run(rec, s=s):
            f = (j,) * S.positions[s]
            u = L.u1(s, f)
            s1 = rec.eq("unit-ιT-s1", u, j) if with_s1 else u == j
            for q in range(T.pos(u)):
                b = L.u2(s, f, q)
                s2 = rec.eq("unit-ιT-s2", b, s, q=q)
                for p in range(S.positions[b]):
                    if s2:
                        rec.eq("unit-ιT-p1", L.v1(s, f, q, p), p, q=q, p=p)
                    else:
                        rec.block("unit-ιT-p1")
                    if s1:
                        rec.eq("unit-ιT-p2", L.v2(s, f, q, p), q, q=q, p=p)
                    else:
                        rec.block("unit-ιT-p2")
        yield Instance(names, {"s": s}, run)


def mul_S_instances(S: MonadicContainer, T: Container, L):
    names = ("mul-S-s1", "mul-S-s2", "mul-S-p1", "mul-S-p21", "mul-S-p22")
    n = S.n_shapes
    for s in range(n):
        for f in S.base.families(s, n):
            if S.sigma_table.get((s, f)) is None:
                def out_of_scope(rec, s=s, f=f):
                    S.sigma(s, f)
                yield Instance(names, {"s": s, "f": f}, out_of_scope)
                continue
            for g in nested_families([S.pos(x) for x in f], T.n_shapes):
                yield Instance(names, {"s": s, "f": f, "g": g}, _mul_S(S, T, L, s, f, g))


def _mul_S(S, T, L, s, f, g):
    def run(rec):
        sf, prf = S.sigma(s, f), S.pr(s, f)
        gpr = tuple(g[a][b] for a, b in prf)
        h = tuple(L.u1(f[p], g[p]) for p in range(len(f)))
        uL = L.u1(sf, gpr)
        s1 = rec.eq("mul-S-s1", uL, L.u1(s, h))
        for q in range(T.positions[uL]):
            if not s1:
                _block_all(rec, ("mul-S-s2", "mul-S-p1", "mul-S-p21", "mul-S-p22"))
                continue
            base = L.u2(s, h, q)
            k = []
            for p in range(S.pos(base)):
                a = L.v1(s, h, q, p)
                k.append(L.u2(f[a], g[a], L.v2(s, h, q, p)))
            k = tuple(k)
            lhs = L.u2(sf, gpr, q)
            if not rec.eq("mul-S-s2", lhs, S.sigma(base, k), q=q):
                _block_all(rec, ("mul-S-p1", "mul-S-p21", "mul-S-p22"))
                continue
            prk = S.pr(base, k)
            for p in range(S.pos(lhs)):
                x = L.v1(sf, gpr, q, p)
                c1, c2 = prk[p]
                P1 = L.v1(s, h, q, c1)
                if not rec.eq("mul-S-p1", prf[x][0], P1, q=q, p=p):
                    _block_all(rec, ("mul-S-p21", "mul-S-p22"))
                    continue
                iq = L.v2(s, h, q, c1)
                if not rec.eq("mul-S-p21", prf[x][1], L.v1(f[P1], g[P1], iq, c2), q=q, p=p):
                    rec.block("mul-S-p22")
                    continue
                rec.eq("mul-S-p22", L.v2(sf, gpr, q, p), L.v2(f[P1], g[P1], iq, c2), q=q, p=p)
    return run


def mul_T_instances(S: Container, T: MonadicContainer, L, with_s1=True):
    names = ("mul-T-s1",) * with_s1 + ("mul-T-s2", "mul-T-p1", "mul-T-p21", "mul-T-p22")
    for s, f in law_rows(S, T.base):
        for g in nested_families([T.pos(t) for t in f], T.n_shapes):
            yield Instance(names, {"s": s, "f": f, "g": g}, _mul_T(S, T, L, s, f, g, with_s1))


def _mul_T(S, T, L, s, f, g, with_s1):
    def run(rec):
        hh = tuple(T.sigma(f[p], g[p]) for p in range(len(f)))
        ut = L.u1(s, f)
        gvs = {}

        def gv(q):
            if q not in gvs:
                b = L.u2(s, f, q)
                gvs[q] = tuple(g[L.v1(s, f, q, p)][L.v2(s, f, q, p)] for p in range(S.positions[b]))
            return gvs[q]

        fam = tuple(L.u1(L.u2(s, f, q), gv(q)) for q in range(T.pos(ut)))
        lhs = L.u1(s, hh)
        rhs = T.sigma(ut, fam)
        s1 = rec.eq("mul-T-s1", lhs, rhs) if with_s1 else lhs == rhs
        prT = T.pr(ut, fam)
        for q in range(T.pos(lhs)):
            if not s1:
                _block_all(rec, ("mul-T-s2", "mul-T-p1", "mul-T-p21", "mul-T-p22"))
                continue
            q1, q2 = prT[q]
            b1 = L.u2(s, f, q1)
            lhs2 = L.u2(s, hh, q)
            if not rec.eq("mul-T-s2", lhs2, L.u2(b1, gv(q1), q2), q=q):
                _block_all(rec, ("mul-T-p1", "mul-T-p21", "mul-T-p22"))
                continue
            for p in range(S.positions[lhs2]):
                inner = L.v1(b1, gv(q1), q2, p)
                P1 = L.v1(s, hh, q, p)
                if not rec.eq("mul-T-p1", L.v1(s, f, q1, inner), P1, q=q, p=p):
                    _block_all(rec, ("mul-T-p21", "mul-T-p22"))
                    continue
                r1, r2 = T.pr(f[P1], g[P1])[L.v2(s, hh, q, p)]
                if not rec.eq("mul-T-p21", L.v2(s, f, q1, inner), r1, q=q, p=p):
                    rec.block("mul-T-p22")
                    continue
                rec.eq("mul-T-p22", L.v2(b1, gv(q1), q2, p), r2, q=q, p=p)
    return run


def unit_o_S_instances(D: DirectedContainer, T: Container, L):
    """Directed-side equations of a monadic-directed law (slot1 directed)."""
    names = MND_DIR_EQUATIONS[:6]
    o, down, oplus = D.o, D.down, D.oplus
    for s, f in law_rows(D.base, T):
        def run(rec, s=s, f=f):
            u = L.u1(s, f)
            s_ok = rec.eq("unit-oS-s", u, f[o[s]])
            for q in range(T.positions[u]):
                b = L.u2(s, f, q)
                ob = o[b]
                p1 = rec.eq("unit-oS-p1", L.v1(s, f, q, ob), o[s], q=q)
                if s_ok and p1:
                    rec.eq("unit-oS-p2", L.v2(s, f, q, ob), q, q=q)
                else:
                    rec.block("unit-oS-p2")
                for p in range(D.pos(b)):
                    a = L.v1(s, f, q, p)
                    sa = down[s][a]
                    fa = tuple(f[oplus[s][a][x]] for x in range(D.pos(sa)))
                    qq = L.v2(s, f, q, p)
                    if qq >= T.positions[L.u1(sa, fa)]:
                        _block_all(rec, ("mul-S-s3", "mul-S-p1", "mul-S-p2"))
                        continue
                    b2 = L.u2(sa, fa, qq)
                    if not rec.eq("mul-S-s3", down[b][p], b2, q=q, p=p):
                        _block_all(rec, ("mul-S-p1", "mul-S-p2"))
                        continue
                    for p2 in range(D.pos(b2)):
                        lhs = oplus[b][p][p2]
                        if not rec.eq("mul-S-p1", L.v1(s, f, q, lhs),
                                      oplus[s][a][L.v1(sa, fa, qq, p2)], q=q, p=p, p2=p2):
                            rec.block("mul-S-p2")
                            continue
                        rec.eq("mul-S-p2", L.v2(s, f, q, lhs), L.v2(sa, fa, qq, p2),
                               q=q, p=p, p2=p2)
        yield Instance(names, {"s": s, "f": f}, run)


def unit_o_T_instances(S: Container, D: DirectedContainer, L):
    """Directed-side equations of a directed-monadic law (slot2 directed)."""
    names = DIR_MND_EQUATIONS[9:]
    o, down, oplus = D.o, D.down, D.oplus
    for s, f in law_rows(S, D.base):
        def run(rec, s=s, f=f):
            u = L.u1(s, f)
            oq = o[u]
            b0 = L.u2(s, f, oq)
            s_ok = rec.eq("unit-oT-s", b0, s)
            for p in range(S.positions[b0]):
                if not s_ok:
                    _block_all(rec, ("unit-oT-p1", "unit-oT-p2"))
                    continue
                if not rec.eq("unit-oT-p1", L.v1(s, f, oq, p), p, p=p):
                    rec.block("unit-oT-p2")
                    continue
                rec.eq("unit-oT-p2", L.v2(s, f, oq, p), o[f[p]], p=p)
            for q in range(D.pos(u)):
                b = L.u2(s, f, q)
                k = tuple(down[f[L.v1(s, f, q, p)]][L.v2(s, f, q, p)] for p in range(S.positions[b]))
                t2 = down[u][q]
                if not rec.eq("mul-T-s1", t2, L.u1(b, k), q=q):
                    _block_all(rec, ("mul-T-s2", "mul-T-p1", "mul-T-p2"))
                    continue
                for q2 in range(D.pos(t2)):
                    qq = oplus[u][q][q2]
                    b2 = L.u2(b, k, q2)
                    if not rec.eq("mul-T-s2", L.u2(s, f, qq), b2, q=q, q2=q2):
                        _block_all(rec, ("mul-T-p1", "mul-T-p2"))
                        continue
                    for p in range(S.positions[b2]):
                        inner = L.v1(b, k, q2, p)
                        a = L.v1(s, f, q, inner)
                        if not rec.eq("mul-T-p1", L.v1(s, f, qq, p), a, q=q, q2=q2, p=p):
                            rec.block("mul-T-p2")
                            continue
                        rhs = oplus[f[a]][L.v2(s, f, q, inner)][L.v2(b, k, q2, p)]
                        rec.eq("mul-T-p2", L.v2(s, f, qq, p), rhs, q=q, q2=q2, p=p)
        yield Instance(names, {"s": s, "f": f}, run)


def law_instances(kind: LawKind, slot1, slot2, L) -> list[Instance]:
    kind = LawKind(kind)
    if kind is LawKind.MND_MND:
        return (list(unit_iota_S_instances(slot1, slot2.base, L))
                + list(unit_iota_T_instances(slot1.base, slot2, L))
                + list(mul_S_instances(slot1, slot2.base, L))
                + list(mul_T_instances(slot1.base, slot2, L)))
    if kind is LawKind.MND_DIR:
        return (list(unit_o_S_instances(slot1, slot2.base, L))
                + list(unit_iota_T_instances(slot1.base, slot2, L, with_s1=False))
                + list(mul_T_instances(slot1.base, slot2, L, with_s1=False)))
    return (list(unit_iota_S_instances(slot1, slot2.base, L))
            + list(mul_S_instances(slot1, slot2.base, L))
            + list(unit_o_T_instances(slot1.base, slot2, L)))


def _check(L: DistLawData, kind: LawKind, jobs: int, notes=None) -> EquationReport:
    if L.kind is not kind:
        raise ValueError(f"expected a {kind.value} law, got {L.kind.value}")
    return run_instances(f"{kind.value} law", EQUATIONS[kind],
                         law_instances(kind, L.slot1, L.slot2, L), jobs, notes)


def check_mnd_mnd(L: DistLawData, jobs: int = 1) -> EquationReport:
    return _check(L, LawKind.MND_MND, jobs)


def check_mnd_dir(L: DistLawData, jobs: int = 1) -> EquationReport:
    return _check(L, LawKind.MND_DIR, jobs, {"unit-oS-s": "determining: fixes u1"})


def check_dir_mnd(L: DistLawData, jobs: int = 1) -> EquationReport:
    return _check(L, LawKind.DIR_MND, jobs)


def check_law(L: DistLawData, jobs: int = 1) -> EquationReport:
    return {LawKind.MND_MND: check_mnd_mnd, LawKind.MND_DIR: check_mnd_dir,
            LawKind.DIR_MND: check_dir_mnd}[L.kind](L, jobs)


# -- the law as a natural transformation -------------------------------------------


def law_gamma(L: DistLawData, e: Ext) -> Ext:
    """γ : ⟦slot1⟧⟦slot2⟧X -> ⟦slot2⟧⟦slot1⟧X."""
    if L.kind is not LawKind.MND_MND:
        raise ValueError("law_gamma is defined for monad-monad laws")
    S, T = L.S, L.T
    check_ext(S, e)
    for x in e.fill:
        if not isinstance(x, Ext):
            raise ValueError(f"{e!r} is not an element of the nested extension")
        check_ext(T, x)
    s = e.shape
    f = tuple(x.shape for x in e.fill)
    u = L.u1(s, f)
    out = []
    for q in range(T.positions[u]):
        b = L.u2(s, f, q)
        out.append(Ext(b, tuple(e.fill[L.v1(s, f, q, p)].fill[L.v2(s, f, q, p)]
                                for p in range(S.positions[b]))))
    return Ext(u, tuple(out))


BECK_DIAGRAMS = ("beck-unit-inner", "beck-unit-outer", "beck-mul-inner",
                 "beck-mul-outer", "beck-naturality")


def beck_oracle(L: DistLawData, sizes: Sequence[int] = (0, 1, 2, 3),
                naturality_sizes: Sequence[int] = (0, 1, 2)) -> EquationReport:
    """Commutation of the four distributive-law diagrams for the interpreted monads.

    inner = slot1 (monad I), outer = slot2 (monad O), γ : I O ⇒ O I.
    """
    if L.kind is not LawKind.MND_MND:
        raise ValueError("the Beck oracle applies to monad-monad laws")
    if L.S.fueled or L.T.fueled:
        raise ValueError("the Beck oracle needs finite slots")
    I, O = interpret_monad(L.slot1), interpret_monad(L.slot2)
    Ic, Oc = L.S, L.T
    gamma = lambda e: law_gamma(L, e)

    unit_inner = EquationResult("beck-unit-inner")
    check_natural_law(unit_inner, generic_elements([Oc]),
                      lambda x: gamma(I.eta(x)), lambda x: O.fmap(I.eta, x), sizes)
    unit_outer = EquationResult("beck-unit-outer")
    check_natural_law(unit_outer, generic_elements([Ic]),
                      lambda y: gamma(I.fmap(O.eta, y)), lambda y: O.eta(y), sizes)
    mul_inner = EquationResult("beck-mul-inner")
    check_natural_law(mul_inner, generic_elements([Ic, Ic, Oc]),
                      lambda z: gamma(I.mu(z)),
                      lambda z: O.fmap(I.mu, gamma(I.fmap(gamma, z))), sizes)
    mul_outer = EquationResult("beck-mul-outer")
    check_natural_law(mul_outer, generic_elements([Ic, Oc, Oc]),
                      lambda z: gamma(I.fmap(O.mu, z)),
                      lambda z: O.mu(O.fmap(gamma, gamma(z))), sizes)

    nat = EquationResult("beck-naturality")
    for nx in naturality_sizes:
        elems = enumerate_nested([Ic, Oc], range(nx))
        for ny in naturality_sizes:
            for h in itertools.product(range(ny), repeat=nx):
                hm = h.__getitem__
                for e in elems:
                    lhs = gamma(I.fmap(lambda x: O.fmap(hm, x), e))
                    rhs = O.fmap(lambda y: I.fmap(hm, y), gamma(e))
                    nat.checked += 1
                    if lhs != rhs and nat.counterexample is None:
                        nat.counterexample = {"X": nx, "Y": ny, "h": h, "element": e}
    return EquationReport("beck oracle", [unit_inner, unit_outer, mul_inner, mul_outer, nat])
