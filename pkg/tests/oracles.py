"""Independent reference implementations used as test oracles.

Nothing here imports the tabulated machinery except ``Ext`` for encoding:
monads are the textbook ones on plain Python values, and the laws and
products are written out by hand.
"""

from __future__ import annotations

import itertools

from contlaws.container import Ext

# -- textbook monads, each with encode/decode to container extensions -------------


class ExceptionMonad:
    def __init__(self, E):
        self.E = E

    def unit(self, x):
        return ("ok", x)

    def join(self, m):
        return m[1] if m[0] == "ok" else m

    def fmap(self, fn, m):
        return ("ok", fn(m[1])) if m[0] == "ok" else m

    def encode(self, m, enc=lambda x: x):
        return Ext(0, (enc(m[1]),)) if m[0] == "ok" else Ext(1 + m[1], ())

    def decode(self, e, dec=lambda x: x):
        return ("ok", dec(e.fill[0])) if e.shape == 0 else ("err", e.shape - 1)

    def values(self, xs):
        return [("ok", x) for x in xs] + [("err", e) for e in range(self.E)]


class WriterMonad:
    """(w, x) with w in Z_n, or a monoid given by a table."""

    def __init__(self, n, e=0, table=None):
        self.n, self.e = n, e
        self.table = table or [[(a + b) % n for b in range(n)] for a in range(n)]

    def unit(self, x):
        return (self.e, x)

    def join(self, m):
        w, (w2, x) = m
        return (self.table[w][w2], x)

    def fmap(self, fn, m):
        return (m[0], fn(m[1]))

    def encode(self, m, enc=lambda x: x):
        return Ext(m[0], (enc(m[1]),))

    def decode(self, e, dec=lambda x: x):
        return (e.shape, dec(e.fill[0]))

    def values(self, xs):
        return [(w, x) for w in range(self.n) for x in xs]


class ReaderMonad:
    """Functions from range(k), as tuples."""

    def __init__(self, k):
        self.k = k

    def unit(self, x):
        return tuple(x for _ in range(self.k))

    def join(self, m):
        return tuple(m[a][a] for a in range(self.k))

    def fmap(self, fn, m):
        return tuple(fn(x) for x in m)

    def encode(self, m, enc=lambda x: x):
        return Ext(0, tuple(enc(x) for x in m))

    def decode(self, e, dec=lambda x: x):
        return tuple(dec(x) for x in e.fill)

    def values(self, xs):
        return list(itertools.product(xs, repeat=self.k))


class StateMonad:
    """s -> (s', x) as a tuple of pairs; shape order is lexicographic on s'."""

    def __init__(self, n):
        self.n = n
        self.fns = list(itertools.product(range(n), repeat=n))

    def unit(self, x):
        return tuple((s, x) for s in range(self.n))

    def join(self, m):
        out = []
        for s in range(self.n):
            s1, inner = m[s]
            out.append(inner[s1])
        return tuple(out)

    def fmap(self, fn, m):
        return tuple((s1, fn(x)) for s1, x in m)

    def encode(self, m, enc=lambda x: x):
        return Ext(self.fns.index(tuple(s1 for s1, _ in m)), tuple(enc(x) for _, x in m))

    def decode(self, e, dec=lambda x: x):
        return tuple(zip(self.fns[e.shape], (dec(x) for x in e.fill)))


class ListMonad:
    def unit(self, x):
        return [x]

    def join(self, m):
        return [x for xs in m for x in xs]

    def fmap(self, fn, m):
        return [fn(x) for x in m]

    def encode(self, m, enc=lambda x: x):
        return Ext(len(m), tuple(enc(x) for x in m))

    def decode(self, e, dec=lambda x: x):
        return [dec(x) for x in e.fill]


# -- hand-written distributive laws ------------------------------------------------


def exception_over(outer):
    """E + M X -> M (E + X)."""
    def gamma(m):
        if m[0] == "ok":
            return outer.fmap(lambda x: ("ok", x), m[1])
        return outer.unit(m)
    return gamma


def writer_over_reader(k):
    """W (R X) -> R (W X)."""
    def gamma(m):
        w, r = m
        return tuple((w, r[a]) for a in range(k))
    return gamma


# -- monoid constructions ---------------------------------------------------------


def zappa_szep_table(A_table, B_table, eA, eB, alpha, beta):
    """(b, a)(b', a') = (b·β(a, b'), α(a, b')·a'); element b·|A| + a."""
    nA, nB = len(A_table), len(B_table)
    table = [[0] * (nA * nB) for _ in range(nA * nB)]
    for b, a, b2, a2 in itertools.product(range(nB), range(nA), range(nB), range(nA)):
        nb = B_table[b][beta[a][b2]]
        na = A_table[alpha[a][b2]][a2]
        table[b * nA + a][b2 * nA + a2] = nb * nA + na
    return table, eB * nA + eA


def is_monoid(table, e):
    n = len(table)
    return (all(table[e][a] == a == table[a][e] for a in range(n))
            and all(table[table[a][b]][c] == table[a][table[b][c]]
                    for a, b, c in itertools.product(range(n), repeat=3)))


def all_monoid_tables(n):
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        for e in range(n):
            if is_monoid(t, e):
                out.append((t, e))
    return out


# -- predicate-universe formulas ------------------------------------------------------

TRUE, FALSE = 0, 1


def predicate_sigma(U, s, f, g1, g2):
    """σ (s, f) g for the refinement universe over U (g1, g2 indexed by position p)."""
    iota = U.iota
    h = tuple(g1[p] if f[p] == TRUE else iota for p in range(U.pos(s)))
    out = U.sigma(s, h)
    pr = U.pr(s, h)
    pred = tuple(g2[p1][p2] if f[p1] == TRUE else FALSE for p1, p2 in pr)
    return out, pred


def list_split(f, p):
    """Index of the block containing flat position p of the concatenation, and the offset."""
    flat = [(i, j) for i, n in enumerate(f) for j in range(n)]
    return flat[p]


def matching_pair_count(A_table, eA, B_table, eB):
    """(α, β) such that the Zappa–Szép table on B×A is a monoid with unit (eB, eA)."""
    nA, nB = len(A_table), len(B_table)
    count = 0
    for af in itertools.product(range(nA), repeat=nA * nB):
        alpha = [af[a * nB:(a + 1) * nB] for a in range(nA)]
        for bf in itertools.product(range(nB), repeat=nA * nB):
            beta = [bf[a * nB:(a + 1) * nB] for a in range(nA)]
            table, e = zappa_szep_table(A_table, B_table, eA, eB, alpha, beta)
            if is_monoid(table, e):
                count += 1
    return count


def functional_action_count(A_table, eA, B_table, eB):
    """α : (A -> B) -> A -> A satisfying the four functional-action equations."""
    nA, nB = len(A_table), len(B_table)
    fns = list(itertools.product(range(nB), repeat=nA))
    idx = {f: i for i, f in enumerate(fns)}
    count = 0
    for flat in itertools.product(range(nA), repeat=nA * len(fns)):
        def act(f, a):
            return flat[idx[f] * nA + a]
        ok = all(act(f, eA) == eA for f in fns)
        ok = ok and all(act((eB,) * nA, a) == a for a in range(nA))
        ok = ok and all(
            act(f, A_table[a][a2]) == A_table[act(f, a)][act(tuple(f[A_table[act(f, a)][x]] for x in range(nA)), a2)]
            for f in fns for a in range(nA) for a2 in range(nA))
        ok = ok and all(
            act(tuple(B_table[f[x]][g[x]] for x in range(nA)), a)
            == act(f, act(tuple(g[act(f, x)] for x in range(nA)), a))
            for f in fns for g in fns for a in range(nA))
        if ok:
            count += 1
    return count
