"""Monadic containers: axiom checker, monad interpretation, Σ-universes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .container import Container, Ext, OutOfFuel, check_ext, fmap, generic_elements
from .kernel import nested_families, pair_index
from .natural import check_natural_law
from .report import EquationReport, EquationResult, Instance, run_instances

MONADIC_EQUATIONS = (
    "sigma-unit-left",   # σ ι (λ_. s) = s
    "sigma-unit-right",  # σ s (λ_. ι) = s
    "pr2-unit-left",
    "pr1-unit-right",
    "sigma-assoc",
    "pr1-assoc",
    "pr21-assoc",
    "pr22-assoc",
)


@dataclass(frozen=True)
class MonadicContainer:
    """A container with unit shape ``iota`` and tabulated ``sigma``/``pr``.

    ``sigma_table[(s, f)]`` is a shape, or ``None`` when it lies beyond the
    fuel bound; ``pr_table[(s, f)][p] = (p1, p2)``.
    """

    base: Container
    iota: int
    sigma_table: dict = field(repr=False)
    pr_table: dict = field(repr=False)
    name: str = field(default="", compare=False)

    @classmethod
    def tabulate(cls, base: Container, iota: int,
                 sigma: Callable[[int, tuple], int],
                 pr: Callable[[int, tuple, int], tuple[int, int]],
                 name: str = "") -> "MonadicContainer":
        sig, prs = {}, {}
        for s in range(base.n_shapes):
            for f in base.families(s, base.n_shapes):
                out = sigma(s, f)
                if out is None or out >= base.n_shapes:
                    if not base.fueled:
                        raise ValueError(f"sigma({s}, {f}) = {out} is not a shape")
                    sig[(s, f)] = None
                    continue
                sig[(s, f)] = out
                prs[(s, f)] = tuple(tuple(pr(s, f, p)) for p in range(base.positions[out]))
        return cls(base, iota, sig, prs, name)

    def sigma(self, s: int, f: tuple) -> int:
        out = self.sigma_table.get((s, f))
        if out is None:
            if self.base.fueled:
                raise OutOfFuel(f"sigma({s}, {f})")
            raise KeyError((s, f))
        return out

    def pr(self, s: int, f: tuple) -> tuple[tuple[int, int], ...]:
        self.sigma(s, f)
        return self.pr_table[(s, f)]

    @property
    def n_shapes(self) -> int:
        return self.base.n_shapes

    def pos(self, s: int) -> int:
        return self.base.positions[s]

    def validate(self) -> list[str]:
        """Index-validity problems of the tables (empty when well formed)."""
        C, n = self.base, self.base.n_shapes
        problems = []
        if not 0 <= self.iota < n:
            problems.append(f"iota {self.iota} is not a shape")
        for s in range(n):
            for f in C.families(s, n):
                if (s, f) not in self.sigma_table:
                    problems.append(f"sigma missing for ({s}, {list(f)})")
                    continue
                out = self.sigma_table[(s, f)]
                if out is None:
                    if not C.fueled:
                        problems.append(f"sigma undefined at ({s}, {list(f)})")
                    continue
                if not 0 <= out < n:
                    problems.append(f"sigma({s}, {list(f)}) = {out} is not a shape")
                    continue
                rows = self.pr_table.get((s, f), ())
                if len(rows) != C.positions[out]:
                    problems.append(f"pr({s}, {list(f)}) has {len(rows)} rows, "
                                    f"expected {C.positions[out]}")
                    continue
                for p, (p1, p2) in enumerate(rows):
                    if not (0 <= p1 < C.positions[s] and 0 <= p2 < C.positions[f[p1]]):
                        problems.append(f"pr({s}, {list(f)})[{p}] = ({p1}, {p2}) out of range")
        known = {(s, f) for s in range(n) for f in C.families(s, n)}
        for key in (set(self.sigma_table) | set(self.pr_table)) - known:
            problems.append(f"table entry {key} is not a (shape, family) pair")
        return problems

    def __post_init__(self):
        problems = self.validate()
        if problems:
            raise ValueError("invalid monadic container: " + problems[0])


def _unit_instances(M: MonadicContainer):
    n, i = M.n_shapes, M.iota
    for s in range(n):
        def left(rec, s=s):
            f = (s,) * M.pos(i)
            out = M.sigma(i, f)
            holds = rec.eq("sigma-unit-left", out, s)
            for p in range(M.pos(out)):
                if holds:
                    rec.eq("pr2-unit-left", M.pr(i, f)[p][1], p, p=p)
                else:
                    rec.block("pr2-unit-left")

        def right(rec, s=s):
            f = (i,) * M.pos(s)
            out = M.sigma(s, f)
            holds = rec.eq("sigma-unit-right", out, s)
            for p in range(M.pos(out)):
                if holds:
                    rec.eq("pr1-unit-right", M.pr(s, f)[p][0], p, p=p)
                else:
                    rec.block("pr1-unit-right")

        yield Instance(("sigma-unit-left", "pr2-unit-left"), {"s": s}, left)
        yield Instance(("sigma-unit-right", "pr1-unit-right"), {"s": s}, right)


def _assoc_instance(M, s, f, g):
    def run(rec):
        sf = M.sigma(s, f)
        prf = M.pr(s, f)
        gpr = tuple(g[a][b] for a, b in prf)
        h = tuple(M.sigma(f[p], g[p]) for p in range(len(f)))
        lhs, rhs = M.sigma(s, h), M.sigma(sf, gpr)
        if not rec.eq("sigma-assoc", lhs, rhs):
            for p in range(M.pos(rhs)):
                for name in MONADIC_EQUATIONS[5:]:
                    rec.block(name)
            return
        prh, prg = M.pr(s, h), M.pr(sf, gpr)
        for p in range(M.pos(rhs)):
            a1, a2 = prg[p]
            b1, b2 = prh[p]
            if not rec.eq("pr1-assoc", b1, prf[a1][0], p=p):
                rec.block("pr21-assoc")
                rec.block("pr22-assoc")
                continue
            c1, c2 = M.pr(f[b1], g[b1])[b2]
            if not rec.eq("pr21-assoc", c1, prf[a1][1], p=p):
                rec.block("pr22-assoc")
                continue
            rec.eq("pr22-assoc", c2, a2, p=p)
    return Instance(MONADIC_EQUATIONS[4:], {"s": s, "f": f, "g": g}, run)


def _assoc_instances(M: MonadicContainer):
    n = M.n_shapes
    for s in range(n):
        for f in M.base.families(s, n):
            if M.sigma_table.get((s, f)) is None:
                # g cannot even be enumerated past the fuel bound
                def deferred(rec, s=s, f=f):
                    M.sigma(s, f)
                yield Instance(MONADIC_EQUATIONS[4:], {"s": s, "f": f}, deferred)
                continue
            for g in nested_families([M.pos(t) for t in f], n):
                yield _assoc_instance(M, s, f, g)


def check_monadic(M: MonadicContainer, jobs: int = 1) -> EquationReport:
    insts = list(_unit_instances(M)) + list(_assoc_instances(M))
    return run_instances(f"monadic {M.name}".strip(), MONADIC_EQUATIONS, insts, jobs)


# -- monad interpretation ------------------------------------------------------


@dataclass(frozen=True)
class MonadInterpretation:
    M: MonadicContainer

    def eta(self, x) -> Ext:
        return Ext(self.M.iota, (x,) * self.M.pos(self.M.iota))

    def mu(self, e: Ext) -> Ext:
        M = self.M
        check_ext(M.base, e)
        for inner in e.fill:
            if not isinstance(inner, Ext):
                raise ValueError(f"{e!r} is not a nested element")
            check_ext(M.base, inner)
        f = tuple(inner.shape for inner in e.fill)
        out = M.sigma(e.shape, f)
        return Ext(out, tuple(e.fill[p1].fill[p2] for p1, p2 in M.pr(e.shape, f)))

    def fmap(self, fn, e: Ext) -> Ext:
        return fmap(self.M.base, fn, e)


def interpret_monad(M: MonadicContainer, X=None) -> MonadInterpretation:
    return MonadInterpretation(M)


def monad_laws_oracle(M: MonadicContainer, sizes: Sequence[int] = (0, 1, 2, 3)) -> EquationReport:
    """Unit and associativity laws of the interpreted monad, pointwise on |X| in sizes."""
    if M.base.fueled:
        raise ValueError("the monad-law oracle needs a finite container")
    T = interpret_monad(M)
    C = M.base
    left = EquationResult("monad-unit-left")
    check_natural_law(left, generic_elements([C]), lambda e: T.mu(T.eta(e)), lambda e: e, sizes)
    right = EquationResult("monad-unit-right")
    check_natural_law(right, generic_elements([C]),
                      lambda e: T.mu(T.fmap(T.eta, e)), lambda e: e, sizes)
    assoc = EquationResult("monad-assoc")
    check_natural_law(assoc, generic_elements([C, C, C]),
                      lambda e: T.mu(T.mu(e)), lambda e: T.mu(T.fmap(T.mu, e)), sizes)
    return EquationReport(f"monad laws {M.name}".strip(), [left, right, assoc])


# -- Σ-universes -----------------------------------------------------------------


@dataclass
class SigmaUniverseVerdict:
    is_universe: bool
    bounded: bool = False
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.is_universe


def check_sigma_universe(M: MonadicContainer) -> SigmaUniverseVerdict:
    failures = []
    if M.pos(M.iota) != 1:
        failures.append(f"Pos(iota) has size {M.pos(M.iota)}")
    bounded = False
    for (s, f), out in sorted(M.sigma_table.items()):
        if out is None:
            bounded = True
            continue
        expected = pair_index([M.pos(t) for t in f])
        got = M.pr_table[(s, f)]
        if len(got) != len(expected) or set(got) != set(expected):
            failures.append(f"pr({s}, {list(f)}) is not a bijection")
    return SigmaUniverseVerdict(not failures, bounded, failures)
