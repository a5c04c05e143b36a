"""Equation reports and the instance runner shared by every checker."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Sequence

from .container import OutOfFuel


class Status(str, Enum):
    VERIFIED = "Verified"
    BOUNDED = "BoundedVerified"
    REFUTED = "Refuted"


class Blocked(Exception):
    """A dependent lookup left its index range (governing equation failed)."""


@dataclass
class EquationResult:
    name: str
    checked: int = 0
    deferred: int = 0
    blocked: int = 0
    counterexample: dict | None = None
    note: str = ""

    @property
    def status(self) -> Status:
        if self.counterexample is not None:
            return Status.REFUTED
        if self.deferred:
            return Status.BOUNDED
        return Status.VERIFIED

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status.value, "checked": self.checked,
             "deferred": self.deferred, "blocked": self.blocked}
        if self.counterexample is not None:
            d["counterexample"] = _jsonable(self.counterexample)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class EquationReport:
    title: str
    results: list[EquationResult] = field(default_factory=list)

    @property
    def status(self) -> Status:
        st = [r.status for r in self.results]
        if Status.REFUTED in st:
            return Status.REFUTED
        if Status.BOUNDED in st:
            return Status.BOUNDED
        return Status.VERIFIED

    @property
    def ok(self) -> bool:
        return self.status is not Status.REFUTED

    def __getitem__(self, name: str) -> EquationResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [r.name for r in self.results]

    def refuted(self) -> list[str]:
        return [r.name for r in self.results if r.status is Status.REFUTED]

    def first_refuted(self) -> EquationResult | None:
        for r in self.results:
            if r.status is Status.REFUTED:
                return r
        return None

    def summary(self) -> str:
        good = sum(r.status is not Status.REFUTED for r in self.results)
        return f"{self.title}: {self.status.value} {good}/{len(self.results)}"

    def to_dict(self) -> dict:
        return {"title": self.title, "status": self.status.value,
                "equations": [r.to_dict() for r in self.results]}

    def to_text(self) -> str:
        lines = [self.summary()]
        for r in self.results:
            line = (f"  {r.name:<18} {r.status.value:<16} checked={r.checked}"
                    f" deferred={r.deferred} blocked={r.blocked}")
            if r.note:
                line += f"  ({r.note})"
            lines.append(line)
            if r.counterexample is not None:
                lines.append(f"    counterexample: {_jsonable(r.counterexample)}")
        return "\n".join(lines)


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        if hasattr(x, "_fields"):
            return {k: _jsonable(v) for k, v in zip(x._fields, x)}
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return repr(x)


class Recorder:
    """Collects the verdicts of one instance, keyed by equation name."""

    def __init__(self, bindings: dict):
        self.bindings = bindings
        self.checked: dict[str, int] = {}
        self.blocked: dict[str, int] = {}
        self.failures: dict[str, dict] = {}

    def eq(self, name: str, lhs, rhs, **inner) -> bool:
        self.checked[name] = self.checked.get(name, 0) + 1
        if lhs == rhs:
            return True
        if name not in self.failures:
            self.failures[name] = {**self.bindings, **inner, "lhs": lhs, "rhs": rhs}
        return False

    def block(self, name: str) -> None:
        self.blocked[name] = self.blocked.get(name, 0) + 1


@dataclass
class Instance:
    """A bundle of equation instances sharing outer bindings.

    ``fn(rec)`` evaluates every covered equation, reporting through ``rec``.
    """

    names: tuple[str, ...]
    bindings: dict
    fn: Callable[[Recorder], None]


def evaluate(inst: Instance) -> tuple[Recorder, bool]:
    rec = Recorder(inst.bindings)
    try:
        inst.fn(rec)
    except OutOfFuel:
        return rec, True
    except (Blocked, IndexError):
        for n in inst.names:
            if n not in rec.checked and n not in rec.blocked:
                rec.block(n)
    return rec, False


def run_instances(title: str, names: Sequence[str], instances: Iterable[Instance],
                  jobs: int = 1, notes: dict[str, str] | None = None) -> EquationReport:
    results = {n: EquationResult(n, note=(notes or {}).get(n, "")) for n in names}
    instances = list(instances)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(evaluate, instances))
    else:
        outcomes = [evaluate(i) for i in instances]
    for inst, (rec, deferred) in zip(instances, outcomes):
        for n, c in rec.checked.items():
            results[n].checked += c
        for n, c in rec.blocked.items():
            results[n].blocked += c
        for n, cx in rec.failures.items():
            if results[n].counterexample is None:
                results[n].counterexample = cx
        if deferred:
            for n in inst.names:
                results[n].deferred += 1
    return EquationReport(title, [results[n] for n in names])
