"""Exhaustive law search, bounded refutation under fuel, and the no-go machinery."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .container import OutOfFuel
from .laws import DistLawData, LawKind, law_instances, law_rows, SLOT_TYPES
from .monadic import MonadicContainer
from .report import EquationReport, Instance, run_instances

DEFAULT_BUDGET = 10 ** 7


class Unassigned(Exception):
    """Raised by a partial law when an equation reads an unassigned variable."""

    def __init__(self, var):
        self.var = var


class Conflict(Exception):
    pass


class _Out:
    """u2 value standing for a slot1 shape beyond the fuel bound."""

    def __repr__(self):
        return "OUT"


OUT = _Out()


class PartialLaw:
    """Law lookups over a partial assignment of search variables."""

    def __init__(self):
        self.values: dict = {}

    def u1(self, s, f):
        key = ("u1", s, f)
        try:
            return self.values[key]
        except KeyError:
            raise Unassigned(key) from None

    def _u2row(self, s, f):
        key = ("u2", s, f)
        try:
            return self.values[key]
        except KeyError:
            raise Unassigned(key) from None

    def u2(self, s, f, q):
        out = self._u2row(s, f)[q]
        if out is OUT:
            raise OutOfFuel(f"u2({s}, {f}, {q})")
        return out

    def _vrow(self, s, f, q):
        key = ("v", s, f, q)
        try:
            return self.values[key]
        except KeyError:
            raise Unassigned(key) from None

    def v1(self, s, f, q, p):
        return self._vrow(s, f, q)[p][0]

    def v2(self, s, f, q, p):
        return self._vrow(s, f, q)[p][1]


class _FailFast:
    """Recorder stand-in: any failing equation aborts the instance."""

    def eq(self, name, lhs, rhs, **_):
        if lhs != rhs:
            raise Conflict(name)
        return True

    def block(self, name):
        pass


_FAIL_FAST = _FailFast()


def _run(inst: Instance):
    """None when satisfied or out of scope, else the variable it waits on."""
    try:
        inst.fn(_FAIL_FAST)
    except Unassigned as w:
        return w.var
    except OutOfFuel:
        return None
    return None


# -- problems and verdicts --------------------------------------------------------


@dataclass
class SearchProblem:
    slot1: object
    slot2: object
    kind: LawKind = LawKind.MND_MND
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        self.kind = LawKind(self.kind)
        want1, want2 = SLOT_TYPES[self.kind]
        if not isinstance(self.slot1, want1) or not isinstance(self.slot2, want2):
            raise ValueError(f"slots do not match kind {self.kind.value}")
        if self.slot2.base.fueled:
            raise ValueError("slot2 must be finite")

    @property
    def fuel(self):
        return self.slot1.base.fuel


@dataclass
class Complete:
    laws: list[DistLawData]
    nodes: int = 0

    @property
    def name(self):
        return "Complete"


@dataclass
class BoundedUnsat:
    fuel: int
    instances: int
    nodes: int = 0

    @property
    def name(self):
        return "BoundedUnsat"


@dataclass
class BoundedSat:
    """A consistent assignment of the in-fuel fragment; OUT marks shapes past the bound."""

    fuel: int
    assignment: dict
    nodes: int = 0

    @property
    def name(self):
        return "BoundedSat"


@dataclass
class BudgetExceeded:
    nodes: int
    found: int = 0

    @property
    def name(self):
        return "BudgetExceeded"


# -- the solver ---------------------------------------------------------------------


class _Solver:
    def __init__(self, problem: SearchProblem, first_only: bool):
        self.p = problem
        self.S, self.T = problem.slot1.base, problem.slot2.base
        self.kind = problem.kind
        self.first_only = first_only
        self.law = PartialLaw()
        self.instances = law_instances(self.kind, problem.slot1, problem.slot2, self.law)
        self.watch: dict = {}
        self.trail: list = []
        self.nodes = 0
        self.solutions: list[dict] = []
        self.rows = list(law_rows(self.S, self.T))

    # forced values from the unit equations
    def _u1_domain(self, s, f):
        forced = set(range(self.T.n_shapes))
        S1, S2 = self.p.slot1, self.p.slot2
        if self.kind in (LawKind.MND_MND, LawKind.DIR_MND) and s == S1.iota and len(set(f)) <= 1 and f:
            forced &= {f[0]}
        if self.kind is LawKind.MND_MND and f == (S2.iota,) * len(f):
            forced &= {S2.iota}
        if self.kind is LawKind.MND_DIR:
            forced &= {f[S1.o[s]]}
        return sorted(forced)

    def _u2_domain(self, s, f):
        u = self.law.values[("u1", s, f)]
        n = self.T.positions[u]
        choices = list(range(self.S.n_shapes)) + ([OUT] if self.S.fueled else [])
        S1, S2 = self.p.slot1, self.p.slot2
        rows = None
        if self.kind in (LawKind.MND_MND, LawKind.DIR_MND) and s == S1.iota and len(set(f)) <= 1:
            rows = {(S1.iota,) * n}
        if self.kind in (LawKind.MND_MND, LawKind.MND_DIR) and f == (S2.iota,) * len(f):
            # unit-ιT-s2 applies only where u1 already equals ιT
            if self.kind is LawKind.MND_DIR or u == S2.iota:
                new = {(s,) * n}
                rows = new if rows is None else rows & new
        if rows is not None:
            return sorted(rows)
        return list(itertools.product(choices, repeat=n))

    def _v_domain(self, s, f, q):
        b = self.law.values[("u2", s, f)][q]
        pairs = [(a, c) for a in range(self.S.positions[s]) for c in range(self.T.positions[f[a]])]
        return list(itertools.product(pairs, repeat=self.S.positions[b]))

    # watch lists
    def _attach(self, idx):
        var = _run(self.instances[idx])
        if var is not None:
            self.watch.setdefault(var, []).append(idx)
            self.trail.append(("push", var))

    def _assign(self, var, value) -> bool:
        self.law.values[var] = value
        pending = self.watch.pop(var, [])
        self.trail.append(("pop", var, pending))
        for idx in pending:
            try:
                self._attach(idx)
            except Conflict:
                return False
        return True

    def _undo(self, mark, var):
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "push":
                self.watch[entry[1]].pop()
                if not self.watch[entry[1]]:
                    del self.watch[entry[1]]
            else:
                if entry[2]:
                    self.watch[entry[1]] = entry[2]
        del self.law.values[var]

    def _budget(self):
        self.nodes += 1
        if self.nodes > self.p.budget:
            raise _Budget()

    def run(self):
        try:
            for idx in range(len(self.instances)):
                self._attach(idx)
        except Conflict:
            return
        u1_vars = [("u1", s, f) for s, f in self.rows]
        self._dfs(u1_vars, 0, self._u1_domain, self._stage_u2)

    def _dfs(self, vars_, i, domain, next_stage):
        if self.first_only and self.solutions:
            return
        if i == len(vars_):
            next_stage()
            return
        var = vars_[i]
        for value in domain(*var[1:]):
            self._budget()
            mark = len(self.trail)
            if self._assign(var, value):
                self._dfs(vars_, i + 1, domain, next_stage)
            self._undo(mark, var)
            if self.first_only and self.solutions:
                return

    def _stage_u2(self):
        self._dfs([("u2", s, f) for s, f in self.rows], 0, self._u2_domain, self._stage_v)

    def _stage_v(self):
        vars_ = []
        for s, f in self.rows:
            for q, b in enumerate(self.law.values[("u2", s, f)]):
                if b is not OUT:
                    vars_.append(("v", s, f, q))
        self._dfs(vars_, 0, self._v_domain, self._record)

    def _record(self):
        # every instance has either passed or left scope
        assert not self.watch, f"unresolved instances on {next(iter(self.watch))}"
        self.solutions.append(dict(self.law.values))


class _Budget(Exception):
    pass


def assignment_to_law(problem: SearchProblem, values: dict) -> DistLawData:
    S, T = problem.slot1.base, problem.slot2.base
    U1, U2, V1, V2 = {}, {}, {}, {}
    for s, f in law_rows(S, T):
        U1[(s, f)] = values[("u1", s, f)]
        row = values[("u2", s, f)]
        U2[(s, f)] = tuple(None if b is OUT else b for b in row)
        vr = [() if b is OUT else values[("v", s, f, q)] for q, b in enumerate(row)]
        V1[(s, f)] = tuple(tuple(a for a, _ in r) for r in vr)
        V2[(s, f)] = tuple(tuple(c for _, c in r) for r in vr)
    return DistLawData(problem.kind, problem.slot1, problem.slot2, U1, U2, V1, V2)


def search_laws(problem: SearchProblem):
    """Every law of the given kind between two finite structured containers."""
    if problem.slot1.base.fueled:
        raise ValueError("complete search needs finite slots; use refute_bounded")
    solver = _Solver(problem, first_only=False)
    try:
        solver.run()
    except _Budget:
        return BudgetExceeded(solver.nodes, len(solver.solutions))
    laws = [assignment_to_law(problem, v) for v in solver.solutions]
    laws.sort(key=lambda L: L.flatten())
    return Complete(laws, solver.nodes)


def refute_bounded(problem: SearchProblem):
    """Look for a law on the in-fuel fragment; BoundedUnsat proves there is none."""
    solver = _Solver(problem, first_only=True)
    try:
        solver.run()
    except _Budget:
        return BudgetExceeded(solver.nodes, len(solver.solutions))
    fuel = problem.fuel if problem.fuel is not None else -1
    if solver.solutions:
        return BoundedSat(fuel, solver.solutions[0], solver.nodes)
    return BoundedUnsat(fuel, len(solver.instances), solver.nodes)


def enumerate_candidates(slot1, slot2, kind=LawKind.MND_MND) -> Iterator[DistLawData]:
    """Every index-valid table tuple (no pruning)."""
    S, T = slot1.base, slot2.base
    rows = list(law_rows(S, T))
    for u1 in itertools.product(range(T.n_shapes), repeat=len(rows)):
        u2_choices = [list(itertools.product(range(S.n_shapes), repeat=T.positions[u])) for u in u1]
        for u2 in itertools.product(*u2_choices):
            v_choices = []
            for (s, f), row in zip(rows, u2):
                pairs = [(a, c) for a in range(S.positions[s]) for c in range(T.positions[f[a]])]
                v_choices.append(list(itertools.product(
                    *[list(itertools.product(pairs, repeat=S.positions[b])) for b in row])))
            for v in itertools.product(*v_choices):
                yield DistLawData(
                    kind, slot1, slot2,
                    dict(zip(rows, u1)), dict(zip(rows, u2)),
                    {k: tuple(tuple(a for a, _ in r) for r in vr) for k, vr in zip(rows, v)},
                    {k: tuple(tuple(c for _, c in r) for r in vr) for k, vr in zip(rows, v)})


# -- no-go ---------------------------------------------------------------------------


def check_singleton(M: MonadicContainer) -> bool:
    return M.pos(M.iota) == 1


def constant_shapes(M: MonadicContainer) -> list[int]:
    return [s for s in range(M.n_shapes) if M.pos(s) == 0]


def _is_s3(M: MonadicContainer, s: int, f: tuple) -> bool:
    for p in range(M.pos(s)):
        g = f[:p] + (M.iota,) + f[p + 1:]
        try:
            if M.sigma(s, g) != M.iota:
                return False
        except OutOfFuel:
            return False
    return True


def s3_witnesses(M: MonadicContainer, min_positions: int = 1):
    for s in range(M.n_shapes):
        if M.pos(s) < max(min_positions, 1):
            continue
        for f in M.base.families(s, M.n_shapes):
            if _is_s3(M, s, f):
                yield s, f


def check_S3(M: MonadicContainer, min_positions: int = 1):
    """First witness (s, f) in canonical order, or None."""
    return next(s3_witnesses(M, min_positions), None)


@dataclass
class Applicable:
    witness: tuple
    positions: tuple[int, int]
    constants: tuple[int, int]

    @property
    def name(self):
        return "Applicable"


@dataclass
class NotApplicable:
    reason: str

    @property
    def name(self):
        return "NotApplicable"


def nogo_certificate(M1: MonadicContainer, M2: MonadicContainer):
    """Hypotheses under which no monad-monad law with slot1 = M1, slot2 = M2 exists."""
    if not check_singleton(M1):
        return NotApplicable(f"Pos(iota) of slot1 has {M1.pos(M1.iota)} elements")
    witness = check_S3(M1, min_positions=2)
    if witness is None:
        return NotApplicable("no S3 witness shape with two distinct positions")
    consts = constant_shapes(M2)
    if len(consts) < 2:
        return NotApplicable(f"slot2 has {len(consts)} constant shape(s)")
    return Applicable(witness, (0, 1), (consts[0], consts[1]))


def check_left_zero(M: MonadicContainer) -> EquationReport:
    def inst(s):
        def run(rec):
            rec.eq("left-zero", M.sigma(s, ()), s)
        return Instance(("left-zero",), {"s": s}, run)

    return run_instances(f"left zeros {M.name}".strip(), ("left-zero",),
                         [inst(s) for s in constant_shapes(M)])


def check_composite_s3(L: DistLawData) -> EquationReport:
    """u1 s (t at p, ιT elsewhere) = t at every S3 witness of a singleton slot1."""
    S, T = L.slot1, L.slot2

    def inst(s, t, p):
        def run(rec):
            fam = tuple(t if x == p else T.iota for x in range(S.pos(s)))
            rec.eq("composite-s3", L.u1(s, fam), t)
        return Instance(("composite-s3",), {"s": s, "t": t, "p": p}, run)

    insts = []
    if L.kind is LawKind.MND_MND and check_singleton(S):
        shapes = sorted({s for s, _ in s3_witnesses(S)})
        insts = [inst(s, t, p) for s in shapes for t in range(T.n_shapes) for p in range(S.pos(s))]
    return run_instances("composite S3", ("composite-s3",), insts)
