"""Deciding equalities of natural transformations between container functors.

Both sides of every law checked here are built from container morphisms, so
on an element they only reshape the skeleton and reindex the leaves.  For a
fixed skeleton with ``n`` leaves the law therefore holds for all ``|X|**n``
fills iff it holds on the fill with pairwise distinct leaves, except that a
pure leaf permutation is invisible when ``|X| <= 1``.  Counts reported are
the number of concrete elements covered at each set size.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

from .container import leaves, map_leaves, skeleton
from .report import EquationResult


def check_natural_law(result: EquationResult, generic: Iterable[tuple[Any, int]],
                      lhs: Callable[[Any], Any], rhs: Callable[[Any], Any],
                      sizes: Sequence[int]) -> None:
    for e, n in generic:
        left, right = lhs(e), rhs(e)
        if left == right:
            result.checked += sum(k ** n for k in sizes)
            continue
        same_shape = skeleton(left) == skeleton(right)
        for k in sizes:
            count = k ** n
            result.checked += count
            if count == 0 or (same_shape and k < 2) or result.counterexample is not None:
                continue
            fill = [0] * n
            if same_shape:
                a = next(x for x, y in zip(leaves(left), leaves(right)) if x != y)
                fill[a] = 1
            concrete = map_leaves(e, fill.__getitem__)
            cl, cr = lhs(concrete), rhs(concrete)
            assert cl != cr, "generic counterexample did not specialise"
            result.counterexample = {"X": k, "element": concrete, "lhs": cl, "rhs": cr}
