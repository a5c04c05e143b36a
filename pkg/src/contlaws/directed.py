"""Directed containers (o, ↓, ⊕) and their five laws."""

from __future__ import annotations

from dataclasses import dataclass, field

from .container import Container
from .report import EquationReport, Instance, run_instances

DIRECTED_EQUATIONS = (
    "down-unit",    # s ↓ o = s
    "down-mul",     # s ↓ (p ⊕ p') = (s ↓ p) ↓ p'
    "oplus-unit-right",  # p ⊕ o = p
    "oplus-unit-left",   # o ⊕ p = p
    "oplus-assoc",
)


@dataclass(frozen=True)
class DirectedContainer:
    """``o[s]``, ``down[s][p]`` and ``oplus[s][p][p']`` with p' in Pos(s ↓ p)."""

    base: Container
    o: tuple[int, ...]
    down: tuple[tuple[int, ...], ...]
    oplus: tuple[tuple[tuple[int, ...], ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        C = self.base
        if C.fueled:
            raise ValueError("directed containers must be finite")
        if len(self.o) != C.n_shapes or len(self.down) != C.n_shapes or len(self.oplus) != C.n_shapes:
            raise ValueError("directed tables must cover every shape")
        for s in range(C.n_shapes):
            n = C.positions[s]
            if not 0 <= self.o[s] < n:
                raise ValueError(f"o[{s}] = {self.o[s]} is not a position of shape {s}")
            if len(self.down[s]) != n or len(self.oplus[s]) != n:
                raise ValueError(f"down/oplus rows of shape {s} have the wrong length")
            for p in range(n):
                t = self.down[s][p]
                if not 0 <= t < C.n_shapes:
                    raise ValueError(f"down[{s}][{p}] = {t} is not a shape")
                row = self.oplus[s][p]
                if len(row) != C.positions[t]:
                    raise ValueError(f"oplus[{s}][{p}] must have {C.positions[t]} entries")
                if any(not 0 <= x < n for x in row):
                    raise ValueError(f"oplus[{s}][{p}] leaves Pos({s})")

    @property
    def n_shapes(self) -> int:
        return self.base.n_shapes

    def pos(self, s: int) -> int:
        return self.base.positions[s]


def check_directed(D: DirectedContainer, jobs: int = 1) -> EquationReport:
    o, down, oplus = D.o, D.down, D.oplus

    def per_shape(s):
        def run(rec):
            unit_ok = rec.eq("down-unit", down[s][o[s]], s)
            for p in range(D.pos(s)):
                rec.eq("oplus-unit-left", oplus[s][o[s]][p], p, p=p) if unit_ok \
                    else rec.block("oplus-unit-left")
            for p in range(D.pos(s)):
                t = down[s][p]
                rec.eq("oplus-unit-right", oplus[s][p][o[t]], p, p=p)
                for p2 in range(D.pos(t)):
                    q = oplus[s][p][p2]
                    mul_ok = rec.eq("down-mul", down[s][q], down[t][p2], p=p, p2=p2)
                    for p3 in range(D.pos(down[t][p2])):
                        if not mul_ok:
                            rec.block("oplus-assoc")
                            continue
                        rec.eq("oplus-assoc", oplus[s][q][p3],
                               oplus[s][p][oplus[t][p2][p3]], p=p, p2=p2, p3=p3)
        return Instance(DIRECTED_EQUATIONS, {"s": s}, run)

    return run_instances(f"directed {D.name}".strip(), DIRECTED_EQUATIONS,
                         [per_shape(s) for s in range(D.n_shapes)], jobs)
