"""Concrete monadic and directed containers, monoids, and their correspondences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .container import Container, ContainerMorphism
from .directed import DirectedContainer
from .monadic import MonadicContainer

# -- monoids ---------------------------------------------------------------------


@dataclass(frozen=True)
class Monoid:
    """Carrier ``range(size)``, unit ``e``, multiplication ``table[a][b]``."""

    size: int
    e: int
    table: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.size
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        problems = monoid_problems(n, self.e, table)
        if problems:
            raise ValueError("invalid monoid: " + problems[0])

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.size)


def monoid_problems(n: int, e: int, table) -> list[str]:
    if n < 1:
        return ["a monoid needs at least one element"]
    if len(table) != n or any(len(r) != n for r in table):
        return [f"multiplication table must be {n}x{n}"]
    if not 0 <= e < n:
        return [f"unit {e} out of range"]
    out = []
    for a in range(n):
        for b in range(n):
            if not 0 <= table[a][b] < n:
                out.append(f"{a}*{b} = {table[a][b]} out of range")
    if out:
        return out
    for a in range(n):
        if table[e][a] != a or table[a][e] != a:
            out.append(f"unit law fails at {a}")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            out.append(f"associativity fails at ({a}, {b}, {c})")
            break
    return out


def cyclic(n: int) -> Monoid:
    """Additive group Z_n."""
    return Monoid(n, 0, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), f"z{n}")


def trivial_monoid() -> Monoid:
    return Monoid(1, 0, ((0,),), "trivial")


def enumerate_monoids(n: int) -> list[Monoid]:
    """All monoid structures on ``range(n)`` (labelled, not up to iso)."""
    found = []
    for flat in itertools.product(range(n), repeat=n * n):
        table = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        for e in range(n):
            if not monoid_problems(n, e, table):
                found.append(Monoid(n, e, table))
                break  # a unit is unique
    return found


# -- monadic containers -------------------------------------------------------------


def exception(E: int) -> MonadicContainer:
    """Shape 0 is inl ⋆ (one position); shape 1 + e is inr e (none)."""
    base = Container(("inl*",) + tuple(f"inr {e}" for e in range(E)), (1,) + (0,) * E)
    return MonadicContainer.tabulate(
        base, 0,
        lambda s, f: f[0] if s == 0 else s,
        lambda s, f, p: (0, p),
        f"exception:{E}")


def maybe() -> MonadicContainer:
    M = exception(1)
    return MonadicContainer(M.base, M.iota, M.sigma_table, M.pr_table, "maybe")


def writer(A: Monoid) -> MonadicContainer:
    base = Container(tuple(str(a) for a in range(A.size)), (1,) * A.size)
    return MonadicContainer.tabulate(base, A.e, lambda a, f: A.mul(a, f[0]),
                                     lambda a, f, p: (0, 0), f"writer:{A.name or A.size}")


def reader(k: int) -> MonadicContainer:
    """⊤ ◁ const A; the unit laws leave σ = ⋆ and pr a = (a, a) as the only choice."""
    base = Container(("*",), (k,))
    return MonadicContainer.tabulate(base, 0, lambda s, f: 0, lambda s, f, a: (a, a), f"reader:{k}")


def state_shapes(n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(n), repeat=n))


def state(n: int) -> MonadicContainer:
    """Shapes are endofunctions of ``range(n)`` in lexicographic order."""
    fns = state_shapes(n)
    index = {fn: i for i, fn in enumerate(fns)}
    base = Container(tuple("".join(map(str, fn)) or "()" for fn in fns), (n,) * len(fns))
    ident = index[tuple(range(n))]

    def sigma(s, f):
        fn = fns[s]
        return index[tuple(fns[f[x]][fn[x]] for x in range(n))]

    return MonadicContainer.tabulate(base, ident, sigma, lambda s, f, x: (x, fns[s][x]),
                                     f"state:{n}")


def list_container(fuel: int) -> Container:
    """Lengths 0..fuel; length 1 (the unit) is always kept."""
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    top = max(fuel, 1)
    return Container(tuple(str(i) for i in range(top + 1)), tuple(range(top + 1)), fuel=fuel)


def list_monadic(fuel: int) -> MonadicContainer:
    """Lists of length ≤ fuel with concatenation; σ past the bound is deferred."""
    def sigma(n, f):
        return sum(f)

    def pr(n, f, p):
        # block i covers [f0 + ... + f(i-1), f0 + ... + fi)
        start = 0
        for i, size in enumerate(f):
            if p < start + size:
                return (i, p - start)
            start += size
        raise ValueError(p)

    return MonadicContainer.tabulate(list_container(fuel), 1, sigma, pr, f"list:{fuel}")


def unit_monadic() -> MonadicContainer:
    return MonadicContainer.tabulate(Container(("*",), (1,)), 0, lambda s, f: 0,
                                     lambda s, f, p: (0, 0), "unit")


def tail_morphism(fuel: int) -> ContainerMorphism:
    """Tail of a list: the empty list goes to inl ⋆, n+1 to inr n, reindexing by +1."""
    L = list_container(fuel)
    fuel = L.n_shapes - 1
    target = Container(("inl*",) + tuple(f"inr {n}" for n in range(fuel)), (0,) + tuple(range(fuel)))
    return ContainerMorphism(L, target, tuple(range(fuel + 1)),
                             tuple(tuple(p + 1 for p in range(target.positions[n])) for n in range(fuel + 1)))


# -- directed containers -------------------------------------------------------------


def writer_directed(k: int) -> DirectedContainer:
    """A ◁ const ⊤."""
    base = Container(tuple(str(a) for a in range(k)), (1,) * k)
    return DirectedContainer(base, (0,) * k, tuple((s,) for s in range(k)),
                             tuple(((0,),) for _ in range(k)), f"writer-dir:{k}")


def reader_directed(A: Monoid) -> DirectedContainer:
    """⊤ ◁ const A: o = e, s ↓ a = ⋆, a ⊕ a' = a a'."""
    base = Container(("*",), (A.size,))
    return DirectedContainer(base, (A.e,), ((0,) * A.size,),
                             (tuple(tuple(A.mul(a, b) for b in A.elements()) for a in A.elements()),),
                             f"reader-dir:{A.name or A.size}")


def unit_directed() -> DirectedContainer:
    return DirectedContainer(Container(("*",), (1,)), (0,), ((0,),), (((0,),),), "unit-dir")


# -- law fixtures -----------------------------------------------------------------


def exception_law(E: int, M: MonadicContainer):
    """Exceptions distribute over any monadic container M (slot1 exception, slot2 M)."""
    from .laws import LawKind, law_from_functions

    return law_from_functions(
        LawKind.MND_MND, exception(E), M,
        lambda s, f: f[0] if s == 0 else M.iota,
        lambda s, f, q: s,
        lambda s, f, q, p: 0,
        lambda s, f, q, p: q)


def reader_law(M: MonadicContainer, k: int):
    """Any monadic container M (slot1) distributes over reader:k (slot2)."""
    from .laws import LawKind, law_from_functions

    return law_from_functions(LawKind.MND_MND, M, reader(k),
                              lambda s, f: 0, lambda s, f, a: s,
                              lambda s, f, a, p: p, lambda s, f, a, p: a)


def writer_reader_mixed_law(k_A: int, k_B: int):
    """Writer-directed A (slot1) with reader-monadic B (slot2)."""
    from .laws import LawKind, law_from_functions

    return law_from_functions(LawKind.MND_DIR, writer_directed(k_A), reader(k_B),
                              lambda a, f: 0, lambda a, f, b: a,
                              lambda a, f, b, p: 0, lambda a, f, b, p: b)


# -- matching pairs of monoid actions -------------------------------------------------


def opposite(A: Monoid) -> Monoid:
    return Monoid(A.size, A.e, tuple(tuple(A.mul(b, a) for b in A.elements()) for a in A.elements()),
                  f"{A.name}^op" if A.name else "")


def matching_pair_problems(A: Monoid, B: Monoid, alpha, beta) -> list[str]:
    """Action axioms for α : A×B→A, β : A×B→B (α a b written alpha[a][b])."""
    out = []
    for a in A.elements():
        for b in B.elements():
            if not (0 <= alpha[a][b] < A.size and 0 <= beta[a][b] < B.size):
                return [f"alpha/beta entry at ({a}, {b}) out of range"]
    eA, eB, ma, mb = A.e, B.e, A.mul, B.mul
    for a in A.elements():
        for b in B.elements():
            if beta[eA][b] != b or alpha[eA][b] != eA:
                out.append(f"unit of A does not act trivially at b={b}")
            if beta[a][eB] != eB or alpha[a][eB] != a:
                out.append(f"unit of B does not act trivially at a={a}")
            for a2 in A.elements():
                if beta[ma(a, a2)][b] != beta[a][beta[a2][b]]:
                    out.append(f"beta is not an action at ({a}, {a2}, {b})")
                if alpha[ma(a, a2)][b] != ma(alpha[a][beta[a2][b]], alpha[a2][b]):
                    out.append(f"alpha does not match beta at ({a}, {a2}, {b})")
            for b2 in B.elements():
                if beta[a][mb(b, b2)] != mb(beta[a][b], beta[alpha[a][b]][b2]):
                    out.append(f"beta does not match alpha at ({a}, {b}, {b2})")
                if alpha[a][mb(b, b2)] != alpha[alpha[a][b]][b2]:
                    out.append(f"alpha is not an action at ({a}, {b}, {b2})")
    return out


@dataclass(frozen=True)
class MatchingPair:
    A: Monoid
    B: Monoid
    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(map(tuple, self.alpha)))
        object.__setattr__(self, "beta", tuple(map(tuple, self.beta)))
        problems = matching_pair_problems(self.A, self.B, self.alpha, self.beta)
        if problems:
            raise ValueError("not a matching pair: " + problems[0])


def _action_tables(n_rows: int, n_cols: int, size: int):
    for flat in itertools.product(range(size), repeat=n_rows * n_cols):
        yield tuple(flat[i * n_cols:(i + 1) * n_cols] for i in range(n_rows))


def matching_pairs(A: Monoid, B: Monoid) -> list[MatchingPair]:
    """Brute force over every (α, β) table pair."""
    found = []
    for alpha in _action_tables(A.size, B.size, A.size):
        for beta in _action_tables(A.size, B.size, B.size):
            if not matching_pair_problems(A, B, alpha, beta):
                found.append(MatchingPair(A, B, alpha, beta))
    return found


def law_from_matching_pair(mp: MatchingPair):
    """Writer A in slot1, writer B in slot2: u a b = (β(a, b), α(a, b))."""
    from .laws import LawKind, law_from_functions

    return law_from_functions(LawKind.MND_MND, writer(mp.A), writer(mp.B),
                              lambda a, f: mp.beta[a][f[0]], lambda a, f, q: mp.alpha[a][f[0]],
                              lambda a, f, q, p: 0, lambda a, f, q, p: 0)


def monoid_of_writer(M: MonadicContainer) -> Monoid:
    C = M.base
    if M.base.fueled or any(n != 1 for n in C.positions):
        raise ValueError(f"{M.name or 'container'} is not writer-shaped")
    n = C.n_shapes
    return Monoid(n, M.iota, tuple(tuple(M.sigma(a, (b,)) for b in range(n)) for a in range(n)))


def matching_pair_from_law(L) -> MatchingPair:
    from .laws import LawKind

    if L.kind is not LawKind.MND_MND:
        raise ValueError("matching pairs come from monad-monad laws")
    A, B = monoid_of_writer(L.slot1), monoid_of_writer(L.slot2)
    alpha = tuple(tuple(L.u2(a, (b,), 0) for b in B.elements()) for a in A.elements())
    beta = tuple(tuple(L.u1(a, (b,)) for b in B.elements()) for a in A.elements())
    return MatchingPair(A, B, alpha, beta)


def zappa_szep(mp: MatchingPair) -> Monoid:
    """Monoid of the composite writer container; element b·|A| + a stands for (b, a)."""
    from .compose import composite_from_law

    CC = composite_from_law(law_from_matching_pair(mp))
    return monoid_of_writer(CC.composite)


def dir_mnd_law_from_matching_pair(mp: MatchingPair):
    """Writer-monadic op(A) in slot1, reader-directed B in slot2: u2 = α, v2 = β."""
    from .laws import LawKind, law_from_functions

    return law_from_functions(LawKind.DIR_MND, writer(opposite(mp.A)), reader_directed(mp.B),
                              lambda s, f: 0, lambda s, f, b: mp.alpha[s][b],
                              lambda s, f, b, p: 0, lambda s, f, b, p: mp.beta[s][b])


def matching_pair_from_dir_mnd_law(L) -> MatchingPair:
    from .laws import LawKind

    if L.kind is not LawKind.DIR_MND or L.T.n_shapes != 1:
        raise ValueError("expected a writer-monadic / reader-directed law")
    A = opposite(monoid_of_writer(L.slot1))
    D = L.slot2
    B = Monoid(D.pos(0), D.o[0], D.oplus[0])
    alpha = tuple(tuple(L.u2(a, (0,), b) for b in B.elements()) for a in A.elements())
    beta = tuple(tuple(L.v2(a, (0,), b, 0) for b in B.elements()) for a in A.elements())
    return MatchingPair(A, B, alpha, beta)


# -- functional monoid actions ---------------------------------------------------------


def functional_action_problems(A: Monoid, B: Monoid, alpha: dict) -> list[str]:
    """``alpha[f][a]`` for f : A -> B given as a tuple."""
    out = []
    ma, mb = A.mul, B.mul
    fns = list(itertools.product(B.elements(), repeat=A.size))
    for f in fns:
        act = alpha[f]
        if act[A.e] != A.e:
            out.append(f"alpha f e != e at f={f}")
        for a in A.elements():
            for a2 in A.elements():
                shifted = tuple(f[ma(act[a], x)] for x in A.elements())
                if act[ma(a, a2)] != ma(act[a], alpha[shifted][a2]):
                    out.append(f"alpha is not multiplicative at f={f}, a={a}, a'={a2}")
        for g in fns:
            fg = tuple(mb(f[x], g[x]) for x in A.elements())
            gf = tuple(g[act[x]] for x in A.elements())
            for a in A.elements():
                if alpha[fg][a] != act[alpha[gf][a]]:
                    out.append(f"alpha does not respect products at f={f}, g={g}, a={a}")
    const_e = (B.e,) * A.size
    for a in A.elements():
        if alpha[const_e][a] != a:
            out.append(f"alpha (const e) {a} != {a}")
    return out


@dataclass(frozen=True)
class FunctionalAction:
    A: Monoid
    B: Monoid
    alpha: dict = field(hash=False)

    def __post_init__(self):
        problems = functional_action_problems(self.A, self.B, self.alpha)
        if problems:
            raise ValueError("not a functional action: " + problems[0])


def functional_actions(A: Monoid, B: Monoid) -> list[FunctionalAction]:
    fns = list(itertools.product(B.elements(), repeat=A.size))
    found = []
    for rows in itertools.product(itertools.product(A.elements(), repeat=A.size), repeat=len(fns)):
        alpha = dict(zip(fns, rows))
        if not functional_action_problems(A, B, alpha):
            found.append(FunctionalAction(A, B, alpha))
    return found


def mixed_law_from_functional_action(fa: FunctionalAction):
    """Reader-directed A in slot1, writer-monadic B in slot2; u1 s f = f e."""
    from .laws import LawKind, law_from_functions

    e = fa.A.e
    return law_from_functions(LawKind.MND_DIR, reader_directed(fa.A), writer(fa.B),
                              lambda s, f: f[e], lambda s, f, q: 0,
                              lambda s, f, q, a: fa.alpha[f][a], lambda s, f, q, a: 0)


def functional_action_from_mixed_law(L) -> FunctionalAction:
    from .laws import LawKind

    if L.kind is not LawKind.MND_DIR or L.S.n_shapes != 1:
        raise ValueError("expected a reader-directed / writer-monadic law")
    D = L.slot1
    A = Monoid(D.pos(0), D.o[0], D.oplus[0])
    B = monoid_of_writer(L.slot2)
    alpha = {f: tuple(L.v1(0, f, 0, a) for a in A.elements())
             for f in itertools.product(B.elements(), repeat=A.size)}
    return FunctionalAction(A, B, alpha)


# -- refinement-type universes ----------------------------------------------------------


def mk_predicate_universe(M: MonadicContainer) -> MonadicContainer:
    """Shapes (s, p) with p a true/false predicate on Pos(s); built from the exception law."""
    from .compose import composite_from_law
    from .monadic import check_sigma_universe

    verdict = check_sigma_universe(M)
    if not verdict:
        raise ValueError("not a Σ-universe: " + verdict.failures[0])
    CC = composite_from_law(exception_law(1, M))
    C = CC.composite
    return MonadicContainer(C.base, C.iota, C.sigma_table, C.pr_table, f"pred({M.name})")


def embed_shape(U: MonadicContainer, s: int) -> int:
    """The code (s, always true) of an original shape inside a predicate universe."""
    C = U.base
    return C.encode(s, (0,) * C.outer.positions[s])
