"""Containers, their morphisms, composition and extension on finite sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, NamedTuple, Sequence

from .kernel import DepTable, iter_dep_maps, pair_index


class OutOfFuel(Exception):
    """An operation needed a shape beyond the fuel bound."""


class UnsupportedOperation(Exception):
    pass


@dataclass(frozen=True)
class Container:
    """Shapes ``0..n-1`` with labels, and a position count per shape.

    ``fuel`` is set when the container is a truncation of an infinite one;
    shapes are then only those enumerated up to the fuel bound.
    """

    labels: tuple[str, ...]
    positions: tuple[int, ...]
    fuel: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "positions", tuple(self.positions))
        if len(self.labels) != len(self.positions):
            raise ValueError("one position count per shape is required")
        if any(n < 0 for n in self.positions):
            raise ValueError("position counts must be non-negative")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("shape labels must be distinct")

    @property
    def n_shapes(self) -> int:
        return len(self.labels)

    @property
    def fueled(self) -> bool:
        return self.fuel is not None

    def pos(self, s: int) -> int:
        return self.positions[s]

    def shape_of(self, label: str) -> int:
        return self.labels.index(label)

    def families(self, s: int, n: int) -> Iterator[tuple[int, ...]]:
        """All maps from the positions of ``s`` into ``range(n)``."""
        return iter_dep_maps([n] * self.positions[s])

    def profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.positions))


@dataclass(frozen=True)
class CompositeContainer(Container):
    """``outer ∘ inner``: shapes are pairs (s, f) with f : Pos(s) -> inner shapes."""

    outer: Container | None = field(default=None, compare=False, repr=False)
    inner: Container | None = field(default=None, compare=False, repr=False)
    pairs: tuple[tuple[int, tuple[int, ...]], ...] = field(default=(), compare=False, repr=False)

    def decode(self, shape: int) -> tuple[int, tuple[int, ...]]:
        return self.pairs[shape]

    def encode(self, s: int, f: Sequence[int]) -> int:
        return self._index[(s, tuple(f))]

    def position_pairs(self, shape: int) -> list[tuple[int, int]]:
        s, f = self.pairs[shape]
        return pair_index([self.inner.positions[t] for t in f])

    def position_index(self, shape: int, p: int, q: int) -> int:
        return self._pos_index[shape][(p, q)]

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "_index", {pf: i for i, pf in enumerate(self.pairs)})
        object.__setattr__(self, "_pos_index", [
            {pq: k for k, pq in enumerate(self.position_pairs(i))}
            for i in range(len(self.pairs))])


def compose_containers(outer: Container, inner: Container) -> CompositeContainer:
    if outer.fueled:
        raise UnsupportedOperation("composition with a fueled outer container")
    pairs, labels, positions = [], [], []
    for s in range(outer.n_shapes):
        for f in outer.families(s, inner.n_shapes):
            pairs.append((s, f))
            labels.append(f"({outer.labels[s]}, [{', '.join(inner.labels[t] for t in f)}])")
            positions.append(sum(inner.positions[t] for t in f))
    return CompositeContainer(tuple(labels), tuple(positions), inner.fuel,
                              outer=outer, inner=inner, pairs=tuple(pairs))


UNIT = Container(("*",), (1,))


class Ext(NamedTuple):
    """An element ``(shape, fill)`` of a container extension."""

    shape: int
    fill: tuple

    def __repr__(self):
        return f"Ext({self.shape}, {self.fill!r})"


def check_ext(C: Container, e: Ext, x_size: int | None = None) -> None:
    if not isinstance(e, Ext) or not 0 <= e.shape < C.n_shapes:
        raise ValueError(f"{e!r} is not an element of the container")
    if len(e.fill) != C.positions[e.shape]:
        raise ValueError(
            f"fill of length {len(e.fill)} for shape {e.shape} "
            f"with {C.positions[e.shape]} positions")
    if x_size is not None and not all(
            isinstance(x, int) and 0 <= x < x_size for x in e.fill):
        raise ValueError(f"fill {e.fill} does not lie in a set of size {x_size}")


def enumerate_ext(C: Container, values: Sequence[Any]) -> Iterator[Ext]:
    """Every element of the extension of ``C`` over ``values``."""
    for s in range(C.n_shapes):
        for fill in itertools.product(values, repeat=C.positions[s]):
            yield Ext(s, fill)


def count_ext(C: Container, n: int) -> int:
    return sum(n ** p for p in C.positions)


def ext_map(C: Container, h: DepTable | Sequence[int], e: Ext) -> Ext:
    h = tuple(h)
    check_ext(C, e, len(h))
    return Ext(e.shape, tuple(h[x] for x in e.fill))


def fmap(C: Container, fn: Callable[[Any], Any], e: Ext) -> Ext:
    """Functor action with an arbitrary Python function (nested elements)."""
    return Ext(e.shape, tuple(fn(x) for x in e.fill))


@dataclass(frozen=True)
class ContainerMorphism:
    source: Container
    target: Container
    shape_map: tuple[int, ...]
    # per source shape s: positions of u(s) -> positions of s
    position_maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        src, tgt = self.source, self.target
        if len(self.shape_map) != src.n_shapes or len(self.position_maps) != src.n_shapes:
            raise ValueError("morphism tables must cover every source shape")
        for s, (u, f) in enumerate(zip(self.shape_map, self.position_maps)):
            if not 0 <= u < tgt.n_shapes:
                raise ValueError(f"shape {s} maps outside the target")
            if len(f) != tgt.positions[u]:
                raise ValueError(f"position map of shape {s} has wrong length")
            if any(not 0 <= p < src.positions[s] for p in f):
                raise ValueError(f"position map of shape {s} leaves Pos({s})")

    @classmethod
    def identity(cls, C: Container) -> "ContainerMorphism":
        return cls(C, C, tuple(range(C.n_shapes)),
                   tuple(tuple(range(n)) for n in C.positions))


def interpret_morphism(m: ContainerMorphism, e: Ext) -> Ext:
    check_ext(m.source, e)
    f = m.position_maps[e.shape]
    return Ext(m.shape_map[e.shape], tuple(e.fill[p] for p in f))


# -- nested elements with symbolic leaves -------------------------------------
#
# Natural transformations between container functors act on an element by
# reshaping and reindexing its leaves, so laws between them can be decided
# on elements whose leaves are pairwise distinct.

LEAF = object()


def enumerate_nested(containers: Sequence[Container], values: Sequence[Any]) -> list:
    """Elements of C1(C2(...Ck(values))) (outermost first)."""
    level = list(values)
    for C in reversed(containers):
        level = list(enumerate_ext(C, level))
    return level


def generic_elements(containers: Sequence[Container]) -> Iterator[tuple[Any, int]]:
    """One element per shape of the nested functor, leaves numbered 0..n-1."""
    for e in enumerate_nested(containers, [LEAF]):
        yield number_leaves(e)


def number_leaves(e) -> tuple[Any, int]:
    counter = itertools.count()

    def go(x):
        if isinstance(x, Ext):
            return Ext(x.shape, tuple(go(y) for y in x.fill))
        return next(counter)

    out = go(e)
    return out, next(counter)


def map_leaves(e, fn: Callable[[Any], Any]):
    if isinstance(e, Ext):
        return Ext(e.shape, tuple(map_leaves(y, fn) for y in e.fill))
    return fn(e)


def leaves(e) -> list:
    if isinstance(e, Ext):
        return [x for y in e.fill for x in leaves(y)]
    return [e]


def skeleton(e):
    return map_leaves(e, lambda _: None)
