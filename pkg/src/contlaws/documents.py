"""JSON documents for containers, structures, laws and composites; builtin references."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from typing import Any

from . import zoo
from .compose import CompatibleComposite
from .container import Container, compose_containers
from .directed import DirectedContainer
from .laws import DistLawData, LawKind, law_rows
from .monadic import MonadicContainer

LAW_KINDS = tuple(k.value for k in LawKind)
KINDS = ("container", "monadic", "directed", "composite") + LAW_KINDS


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"at {path}: {message}")
        self.path = path
        self.message = message


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any

    def __eq__(self, other):
        if not isinstance(other, Document) or self.kind != other.kind:
            return False
        a, b = self.payload, other.payload
        if isinstance(a, DistLawData):
            return a.same_tables(b) and a.slot1 == b.slot1 and a.slot2 == b.slot2
        if isinstance(a, CompatibleComposite):
            return (a.composite == b.composite and a.outer == b.outer and a.inner == b.inner)
        return a == b

    __hash__ = None


# -- builtin references ---------------------------------------------------------------

_BUILTIN = re.compile(r"^(exception|writer|reader|state|list|maybe|writer-dir|reader-dir|unit|unit-dir)(?::(.+))?$")


def load_monoid(ref: str) -> zoo.Monoid:
    m = re.fullmatch(r"z(\d+)", ref)
    if m:
        return zoo.cyclic(int(m.group(1)))
    if ref == "trivial":
        return zoo.trivial_monoid()
    if not os.path.exists(ref):
        raise DocumentError("$", f"unknown monoid {ref!r} (use zN or a JSON file)")
    with open(ref, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        return zoo.Monoid(data["size"], data["unit"], data["table"], os.path.basename(ref))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError("$", f"bad monoid file: {exc}") from None


def builtin(ref: str, fuel: int = 3):
    """Structure named by a builtin reference such as ``writer:z2`` or ``list:4``."""
    m = _BUILTIN.match(ref)
    if not m:
        raise DocumentError("$", f"unknown builtin {ref!r}")
    name, arg = m.groups()

    def num():
        if arg is None or not arg.isdigit():
            raise DocumentError("$", f"{name} needs a non-negative integer parameter")
        return int(arg)

    if name == "exception":
        return zoo.exception(num())
    if name == "writer":
        return zoo.writer(load_monoid(arg or ""))
    if name == "reader":
        return zoo.reader(num())
    if name == "state":
        return zoo.state(num())
    if name == "list":
        return zoo.list_monadic(fuel if arg is None else num())
    if name == "maybe":
        return zoo.maybe()
    if name == "writer-dir":
        return zoo.writer_directed(num())
    if name == "reader-dir":
        return zoo.reader_directed(load_monoid(arg or ""))
    if name == "unit":
        return zoo.unit_monadic()
    return zoo.unit_directed()


def resolve(ref: str, fuel: int = 3):
    """A builtin reference or the path of a document file."""
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return parse_document(fh.read()).payload
    return builtin(ref, fuel)


def _builtin_name(obj):
    """The builtin reference reproducing ``obj`` exactly, if any."""
    name = getattr(obj, "name", "")
    if not name:
        return None
    try:
        other = builtin(name)
    except (DocumentError, ValueError):
        return None
    return name if type(other) is type(obj) and other == obj else None


# -- printing ------------------------------------------------------------------------


def _container_json(C: Container) -> dict:
    out = {"shapes": list(C.labels), "positions": list(C.positions)}
    if C.fueled:
        out["fuel"] = C.fuel
    return out


def _sigma_rows(M: MonadicContainer) -> tuple[list, list]:
    sigma, pr = [], []
    for s in range(M.n_shapes):
        for f in M.base.families(s, M.n_shapes):
            out = M.sigma_table[(s, f)]
            sigma.append({"s": s, "f": list(f), "out": out})
            if out is not None:
                for p, pair in enumerate(M.pr_table[(s, f)]):
                    pr.append({"s": s, "f": list(f), "p": p, "out": list(pair)})
    return sigma, pr


def _slot_json(obj):
    ref = _builtin_name(obj)
    if ref is not None:
        return ref
    return to_json(Document("monadic" if isinstance(obj, MonadicContainer) else "directed", obj))


def to_json(doc: Document) -> dict:
    x = doc.payload
    if doc.kind == "container":
        return {"kind": "container", **_container_json(x)}
    if doc.kind == "monadic":
        sigma, pr = _sigma_rows(x)
        out = {"kind": "monadic", **_container_json(x.base), "iota": x.iota, "sigma": sigma, "pr": pr}
        if x.name:
            out["name"] = x.name
        return out
    if doc.kind == "directed":
        out = {"kind": "directed", **_container_json(x.base), "o": list(x.o),
               "down": [list(r) for r in x.down], "oplus": [[list(r) for r in row] for row in x.oplus]}
        if x.name:
            out["name"] = x.name
        return out
    if doc.kind == "composite":
        sigma, pr = _sigma_rows(x.composite)
        return {"kind": "composite", "inner": _slot_json(x.inner), "outer": _slot_json(x.outer),
                "iota": x.composite.iota, "sigma": sigma, "pr": pr}
    L = x
    out = {"kind": L.kind.value, "inner": _slot_json(L.slot1), "outer": _slot_json(L.slot2),
           "u1": [], "u2": [], "v1": [], "v2": []}
    for s, f in L.rows():
        key = (s, f)
        out["u1"].append({"s": s, "f": list(f), "out": L.u1_table[key]})
        for q, b in enumerate(L.u2_table[key]):
            out["u2"].append({"s": s, "f": list(f), "q": q, "out": b})
            if b is None:
                continue
            for p in range(L.S.positions[b]):
                out["v1"].append({"s": s, "f": list(f), "q": q, "p": p, "out": L.v1_table[key][q][p]})
                out["v2"].append({"s": s, "f": list(f), "q": q, "p": p, "out": L.v2_table[key][q][p]})
    return out


def dump_rows(obj: dict) -> str:
    """JSON with one table row per line, so documents diff cleanly."""
    compact = lambda v: json.dumps(v, ensure_ascii=False, separators=(", ", ": "))
    lines = []
    for key, value in obj.items():
        if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            rows = ",\n".join("  " + compact(v) for v in value)
            lines.append(f"{compact(key)}: [\n{rows}\n ]")
        elif isinstance(value, dict):
            lines.append(f"{compact(key)}: " + dump_rows(value).replace("\n", "\n "))
        else:
            lines.append(f"{compact(key)}: {compact(value)}")
    return "{\n " + ",\n ".join(lines) + "\n}"


def print_document(doc: Document) -> str:
    return dump_rows(to_json(doc)) + "\n"


def document_of(obj) -> Document:
    if isinstance(obj, DistLawData):
        return Document(obj.kind.value, obj)
    if isinstance(obj, CompatibleComposite):
        return Document("composite", obj)
    if isinstance(obj, MonadicContainer):
        return Document("monadic", obj)
    if isinstance(obj, DirectedContainer):
        return Document("directed", obj)
    if isinstance(obj, Container):
        return Document("container", obj)
    raise TypeError(f"no document kind for {type(obj).__name__}")


# -- parsing -------------------------------------------------------------------------


def _want(cond: bool, path: str, message: str):
    if not cond:
        raise DocumentError(path, message)


def _int(x, path, lo=0, hi=None, what="index"):
    _want(isinstance(x, int) and not isinstance(x, bool), path, f"expected an integer {what}")
    _want(x >= lo and (hi is None or x < hi), path,
          f"{what} {x} out of range [{lo}, {hi})" if hi is not None else f"{what} {x} is negative")
    return x


def _list(x, path, length=None):
    _want(isinstance(x, list), path, "expected a list")
    if length is not None:
        _want(len(x) == length, path, f"expected {length} entries, got {len(x)}")
    return x


def _field(obj, key, path):
    _want(isinstance(obj, dict), path, "expected an object")
    _want(key in obj, path, f"missing field {key!r}")
    return obj[key]


def _parse_container(d, path) -> Container:
    labels = _list(_field(d, "shapes", path), f"{path}.shapes")
    for i, lab in enumerate(labels):
        _want(isinstance(lab, str), f"{path}.shapes[{i}]", "shape labels are strings")
    _want(len(set(labels)) == len(labels), f"{path}.shapes", "shape labels must be distinct")
    pos = _list(_field(d, "positions", path), f"{path}.positions", len(labels))
    for i, n in enumerate(pos):
        _int(n, f"{path}.positions[{i}]", what="position count")
    fuel = d.get("fuel")
    if fuel is not None:
        _int(fuel, f"{path}.fuel", what="fuel")
    return Container(tuple(labels), tuple(pos), fuel)


def _family(row, path, C: Container, n_targets: int, s: int) -> tuple:
    f = _list(_field(row, "f", path), f"{path}.f", C.positions[s])
    return tuple(_int(x, f"{path}.f[{i}]", hi=n_targets, what="shape") for i, x in enumerate(f))


def _parse_sigma_pr(d, path, C: Container):
    n = C.n_shapes
    sig, prs = {}, {}
    for i, row in enumerate(_list(_field(d, "sigma", path), f"{path}.sigma")):
        rp = f"{path}.sigma[{i}]"
        s = _int(_field(row, "s", rp), f"{rp}.s", hi=n, what="shape")
        f = _family(row, rp, C, n, s)
        _want((s, f) not in sig, rp, "duplicate row")
        out = _field(row, "out", rp)
        if out is None:
            _want(C.fueled, f"{rp}.out", "null is only allowed beyond the fuel bound")
        else:
            _int(out, f"{rp}.out", hi=n, what="shape")
        sig[(s, f)] = out
    for s in range(n):
        for f in C.families(s, n):
            _want((s, f) in sig, f"{path}.sigma", f"missing row s={s} f={list(f)}")
    rows: dict = {}
    for i, row in enumerate(_list(_field(d, "pr", path), f"{path}.pr")):
        rp = f"{path}.pr[{i}]"
        s = _int(_field(row, "s", rp), f"{rp}.s", hi=n, what="shape")
        f = _family(row, rp, C, n, s)
        out = sig.get((s, f))
        _want(out is not None, rp, "pr row for a sigma row that is undefined")
        p = _int(_field(row, "p", rp), f"{rp}.p", hi=C.positions[out], what="position")
        pair = _list(_field(row, "out", rp), f"{rp}.out", 2)
        p1 = _int(pair[0], f"{rp}.out[0]", hi=C.positions[s], what="position")
        _int(pair[1], f"{rp}.out[1]", hi=C.positions[f[p1]], what="position")
        _want(p not in rows.setdefault((s, f), {}), rp, "duplicate row")
        rows[(s, f)][p] = tuple(pair)
    for (s, f), out in sig.items():
        if out is None:
            continue
        got = rows.get((s, f), {})
        _want(len(got) == C.positions[out], f"{path}.pr", f"missing rows for s={s} f={list(f)}")
        prs[(s, f)] = tuple(got[p] for p in range(C.positions[out]))
    return sig, prs


def _parse_monadic(d, path, C: Container | None = None) -> MonadicContainer:
    if C is None:
        C = _parse_container(d, path)
    iota = _int(_field(d, "iota", path), f"{path}.iota", hi=C.n_shapes, what="shape")
    sig, prs = _parse_sigma_pr(d, path, C)
    try:
        return MonadicContainer(C, iota, sig, prs, d.get("name", ""))
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _parse_directed(d, path) -> DirectedContainer:
    C = _parse_container(d, path)
    n = C.n_shapes
    o = _list(_field(d, "o", path), f"{path}.o", n)
    down = _list(_field(d, "down", path), f"{path}.down", n)
    oplus = _list(_field(d, "oplus", path), f"{path}.oplus", n)
    for s in range(n):
        _int(o[s], f"{path}.o[{s}]", hi=C.positions[s], what="position")
        _list(down[s], f"{path}.down[{s}]", C.positions[s])
        _list(oplus[s], f"{path}.oplus[{s}]", C.positions[s])
        for p in range(C.positions[s]):
            t = _int(down[s][p], f"{path}.down[{s}][{p}]", hi=n, what="shape")
            row = _list(oplus[s][p], f"{path}.oplus[{s}][{p}]", C.positions[t])
            for k, x in enumerate(row):
                _int(x, f"{path}.oplus[{s}][{p}][{k}]", hi=C.positions[s], what="position")
    try:
        return DirectedContainer(C, tuple(o), tuple(map(tuple, down)),
                                 tuple(tuple(map(tuple, r)) for r in oplus), d.get("name", ""))
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _parse_slot(x, path):
    if isinstance(x, str):
        try:
            return builtin(x)
        except ValueError as exc:
            raise DocumentError(path, str(exc).split(": ", 1)[-1]) from None
    kind = _field(x, "kind", path)
    _want(kind in ("monadic", "directed"), f"{path}.kind", "slots must be monadic or directed")
    return _parse_monadic(x, path) if kind == "monadic" else _parse_directed(x, path)


def _parse_law(d, path, kind: LawKind) -> DistLawData:
    S1 = _parse_slot(_field(d, "inner", path), f"{path}.inner")
    S2 = _parse_slot(_field(d, "outer", path), f"{path}.outer")
    S, T = S1.base, S2.base
    U1, U2, V1, V2 = {}, {}, {}, {}
    for i, row in enumerate(_list(_field(d, "u1", path), f"{path}.u1")):
        rp = f"{path}.u1[{i}]"
        s = _int(_field(row, "s", rp), f"{rp}.s", hi=S.n_shapes, what="shape")
        f = _family(row, rp, S, T.n_shapes, s)
        _want((s, f) not in U1, rp, "duplicate row")
        U1[(s, f)] = _int(_field(row, "out", rp), f"{rp}.out", hi=T.n_shapes, what="shape")
    for s, f in law_rows(S, T):
        _want((s, f) in U1, f"{path}.u1", f"missing row s={s} f={list(f)}")
        U2[(s, f)] = [None] * T.positions[U1[(s, f)]]
    for i, row in enumerate(_list(_field(d, "u2", path), f"{path}.u2")):
        rp = f"{path}.u2[{i}]"
        s = _int(_field(row, "s", rp), f"{rp}.s", hi=S.n_shapes, what="shape")
        f = _family(row, rp, S, T.n_shapes, s)
        q = _int(_field(row, "q", rp), f"{rp}.q", hi=len(U2[(s, f)]), what="position")
        out = _field(row, "out", rp)
        if out is None:
            _want(S.fueled, f"{rp}.out", "null is only allowed beyond the fuel bound")
        else:
            _int(out, f"{rp}.out", hi=S.n_shapes, what="shape")
        U2[(s, f)][q] = out
    vt = {}
    for name in ("v1", "v2"):
        table = {}
        for i, row in enumerate(_list(_field(d, name, path), f"{path}.{name}")):
            rp = f"{path}.{name}[{i}]"
            s = _int(_field(row, "s", rp), f"{rp}.s", hi=S.n_shapes, what="shape")
            f = _family(row, rp, S, T.n_shapes, s)
            q = _int(_field(row, "q", rp), f"{rp}.q", hi=len(U2[(s, f)]), what="position")
            b = U2[(s, f)][q]
            _want(b is not None, rp, "row for an undefined u2 entry")
            p = _int(_field(row, "p", rp), f"{rp}.p", hi=S.positions[b], what="position")
            out = _field(row, "out", rp)
            if name == "v1":
                _int(out, f"{rp}.out", hi=S.positions[s], what="position")
            else:
                a = vt["v1"].get((s, f, q, p))
                _want(a is not None, rp, "v2 row without a matching v1 row")
                _int(out, f"{rp}.out", hi=T.positions[f[a]], what="position")
            table[(s, f, q, p)] = out
        vt[name] = table
    for s, f in law_rows(S, T):
        rows1, rows2 = [], []
        for q, b in enumerate(U2[(s, f)]):
            n = 0 if b is None else S.positions[b]
            for name in ("v1", "v2"):
                for p in range(n):
                    _want((s, f, q, p) in vt[name], f"{path}.{name}",
                          f"missing row s={s} f={list(f)} q={q} p={p}")
            rows1.append(tuple(vt["v1"][(s, f, q, p)] for p in range(n)))
            rows2.append(tuple(vt["v2"][(s, f, q, p)] for p in range(n)))
        V1[(s, f)], V2[(s, f)] = tuple(rows1), tuple(rows2)
        U2[(s, f)] = tuple(U2[(s, f)])
    try:
        return DistLawData(kind, S1, S2, U1, U2, V1, V2)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _parse_composite(d, path) -> CompatibleComposite:
    inner = _parse_slot(_field(d, "inner", path), f"{path}.inner")
    outer = _parse_slot(_field(d, "outer", path), f"{path}.outer")
    _want(isinstance(inner, MonadicContainer) and isinstance(outer, MonadicContainer), path,
          "composite slots must be monadic")
    C = compose_containers(outer.base, inner.base)
    M = _parse_monadic(d, path, C)
    try:
        return CompatibleComposite(M, outer, inner, "user")
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def parse_document(text: str) -> Document:
    """Validated document, or DocumentError naming the first violation by path."""
    stripped = text.strip()
    if stripped and not stripped.startswith(("{", "[")) and _BUILTIN.match(stripped):
        obj = builtin(stripped)
        return document_of(obj)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"malformed JSON: {exc.msg} (line {exc.lineno})") from None
    kind = _field(data, "kind", "$")
    _want(kind in KINDS, "$.kind", f"unknown kind {kind!r}")
    if kind == "container":
        return Document(kind, _parse_container(data, "$"))
    if kind == "monadic":
        return Document(kind, _parse_monadic(data, "$"))
    if kind == "directed":
        return Document(kind, _parse_directed(data, "$"))
    if kind == "composite":
        return Document(kind, _parse_composite(data, "$"))
    return Document(kind, _parse_law(data, "$", LawKind(kind)))
