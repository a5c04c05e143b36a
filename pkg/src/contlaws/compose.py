"""Compatible composites: building them from laws, checking them, extracting laws."""

from __future__ import annotations

from dataclasses import dataclass

from .container import CompositeContainer, OutOfFuel, compose_containers
from .laws import DistLawData, LawKind, check_mnd_mnd, law_from_functions
from .monadic import MonadicContainer, check_monadic
from .report import EquationReport, Instance, run_instances

COMPATIBLE_EQUATIONS = (
    "inj-outer-s", "inj-outer-p1", "inj-outer-p2",
    "inj-inner-s", "inj-inner-p1", "inj-inner-p2",
    "middle-unit-s", "middle-unit-p",
)


@dataclass(frozen=True)
class CompatibleComposite:
    composite: MonadicContainer
    outer: MonadicContainer
    inner: MonadicContainer
    provenance: str = "user"

    @property
    def base(self) -> CompositeContainer:
        return self.composite.base

    def __post_init__(self):
        C = self.composite.base
        if not isinstance(C, CompositeContainer) or C.outer != self.outer.base or C.inner != self.inner.base:
            raise ValueError("composite must live on compose_containers(outer, inner)")
        unit = C.encode(self.outer.iota, (self.inner.iota,) * self.outer.pos(self.outer.iota))
        if self.composite.iota != unit:
            raise ValueError("composite unit must be (iota_outer, const iota_inner)")


def _const(O: MonadicContainer, o: int, i: int) -> tuple:
    return (i,) * O.pos(o)


def composite_from_law(L: DistLawData, check: bool = True) -> CompatibleComposite:
    """The monadic structure on slot2 ∘ slot1 induced by a monad-monad law."""
    if L.kind is not LawKind.MND_MND:
        raise ValueError("composites are built from monad-monad laws")
    if check:
        report = check_mnd_mnd(L)
        if not report.ok:
            raise ValueError(f"law is refuted at {report.refuted()[0]}")
    O, I = L.slot2, L.slot1
    C = compose_containers(O.base, I.base)

    def split(c, g):
        o, f = C.decode(c)
        pairs = C.position_pairs(c)
        g1 = [[] for _ in range(O.pos(o))]
        g2 = [[] for _ in range(O.pos(o))]
        for (p, q), x in zip(pairs, g):
            a, b = C.decode(x)
            g1[p].append(a)
            g2[p].append(b)
        return o, f, [tuple(r) for r in g1], g2

    def outer_part(o, f, g1):
        h = tuple(L.u1(f[p], g1[p]) for p in range(O.pos(o)))
        return h, O.sigma(o, h)

    def inner_parts(o, f, g1, g2, h, o2):
        parts = []
        for p1, p2 in O.pr(o, h):
            b = L.u2(f[p1], g1[p1], p2)
            k = tuple(g2[p1][L.v1(f[p1], g1[p1], p2, q)][L.v2(f[p1], g1[p1], p2, q)]
                      for q in range(I.pos(b)))
            parts.append((p1, p2, b, k))
        return parts

    def sigma(c, g):
        try:
            o, f, g1, g2 = split(c, g)
            h, o2 = outer_part(o, f, g1)
            inner = tuple(I.sigma(b, k) for _, _, b, k in inner_parts(o, f, g1, g2, h, o2))
        except OutOfFuel:
            return None
        return C.encode(o2, inner)

    def pr(c, g, x):
        o, f, g1, g2 = split(c, g)
        h, o2 = outer_part(o, f, g1)
        parts = inner_parts(o, f, g1, g2, h, o2)
        target = C.encode(o2, tuple(I.sigma(b, k) for _, _, b, k in parts))
        p, r = C.position_pairs(target)[x]
        p1, p2, b, k = parts[p]
        r1, r2 = I.pr(b, k)[r]
        first = (p1, L.v1(f[p1], g1[p1], p2, r1))
        second = (L.v2(f[p1], g1[p1], p2, r1), r2)
        a = C.position_index(c, *first)
        return a, C.position_index(g[a], *second)

    unit = C.encode(O.iota, _const(O, O.iota, I.iota))
    M = MonadicContainer.tabulate(C, unit, sigma, pr, f"{O.name}∘{I.name}")
    return CompatibleComposite(M, O, I, "law")


def check_compatible(CC: CompatibleComposite, jobs: int = 1) -> EquationReport:
    """Monadic axioms, both injections as monad morphisms, and the middle unitary law."""
    M, O, I = CC.composite, CC.outer, CC.inner
    C = CC.base
    base_report = check_monadic(M, jobs)

    def inj_outer(o, f):
        def run(rec):
            c = C.encode(o, _const(O, o, I.iota))
            g = tuple(C.encode(f[p], _const(O, f[p], I.iota)) for p, _ in C.position_pairs(c))
            lhs = C.encode(O.sigma(o, f), _const(O, O.sigma(o, f), I.iota))
            out = M.sigma(c, g)
            if not rec.eq("inj-outer-s", lhs, out):
                rec.block("inj-outer-p1")
                rec.block("inj-outer-p2")
                return
            prO, prC = O.pr(o, f), M.pr(c, g)
            for x, (px, _) in enumerate(C.position_pairs(out)):
                a, b = prC[x]
                pa, _ = C.position_pairs(c)[a]
                pb, _ = C.position_pairs(g[a])[b]
                rec.eq("inj-outer-p1", prO[px][0], pa, x=x)
                rec.eq("inj-outer-p2", prO[px][1], pb, x=x)
        return Instance(COMPATIBLE_EQUATIONS[0:3], {"s": o, "f": f}, run)

    def inj_inner(i, f):
        def run(rec):
            io = O.iota
            c = C.encode(io, _const(O, io, i))
            g = tuple(C.encode(io, _const(O, io, f[q])) for _, q in C.position_pairs(c))
            si = I.sigma(i, f)
            lhs = C.encode(io, _const(O, io, si))
            out = M.sigma(c, g)
            if not rec.eq("inj-inner-s", lhs, out):
                rec.block("inj-inner-p1")
                rec.block("inj-inner-p2")
                return
            prI, prC = I.pr(i, f), M.pr(c, g)
            for x, (_, qx) in enumerate(C.position_pairs(out)):
                a, b = prC[x]
                _, qa = C.position_pairs(c)[a]
                _, qb = C.position_pairs(g[a])[b]
                rec.eq("inj-inner-p1", prI[qx][0], qa, x=x)
                rec.eq("inj-inner-p2", prI[qx][1], qb, x=x)
        return Instance(COMPATIBLE_EQUATIONS[3:6], {"s": i, "f": f}, run)

    def middle(c):
        def run(rec):
            s, f = C.decode(c)
            c0 = C.encode(s, _const(O, s, I.iota))
            g = tuple(C.encode(O.iota, _const(O, O.iota, f[p])) for p, _ in C.position_pairs(c0))
            out = M.sigma(c0, g)
            if not rec.eq("middle-unit-s", out, c):
                rec.block("middle-unit-p")
                return
            prC = M.pr(c0, g)
            for x, pq in enumerate(C.position_pairs(c)):
                a, b = prC[x]
                pa, _ = C.position_pairs(c0)[a]
                _, qb = C.position_pairs(g[a])[b]
                rec.eq("middle-unit-p", (pa, qb), pq, x=x)
        return Instance(COMPATIBLE_EQUATIONS[6:], {"shape": c}, run)

    insts = [inj_outer(o, f) for o in range(O.n_shapes) for f in O.base.families(o, O.n_shapes)]
    insts += [inj_inner(i, f) for i in range(I.n_shapes) for f in I.base.families(i, I.n_shapes)]
    insts += [middle(c) for c in range(C.n_shapes)]
    rest = run_instances("morphisms", COMPATIBLE_EQUATIONS, insts, jobs)
    return EquationReport("compatible composite", base_report.results + rest.results)


def law_from_composite(CC: CompatibleComposite, check: bool = True) -> DistLawData:
    """Recover the monad-monad law (slot1 = inner, slot2 = outer) from a composite."""
    if check:
        report = check_compatible(CC)
        if not report.ok:
            raise ValueError(f"composite is not compatible: {report.refuted()[0]}")
    M, O, I = CC.composite, CC.outer, CC.inner
    C = CC.base
    cache = {}

    def row(i, f):
        if (i, f) not in cache:
            c0 = C.encode(O.iota, _const(O, O.iota, i))
            g = tuple(C.encode(f[q], _const(O, f[q], I.iota)) for _, q in C.position_pairs(c0))
            out = M.sigma(c0, g)
            cache[(i, f)] = (c0, g, out, M.pr(c0, g))
        return cache[(i, f)]

    def v(i, f, q, p):
        c0, g, out, prC = row(i, f)
        a, b = prC[C.position_index(out, q, p)]
        _, qa = C.position_pairs(c0)[a]
        pb, _ = C.position_pairs(g[a])[b]
        return qa, pb

    return law_from_functions(
        LawKind.MND_MND, I, O,
        lambda i, f: C.decode(row(i, f)[2])[0],
        lambda i, f, q: C.decode(row(i, f)[2])[1][q],
        lambda i, f, q, p: v(i, f, q, p)[0],
        lambda i, f, q, p: v(i, f, q, p)[1])
