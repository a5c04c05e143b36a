"""Command-line front end.

Slots are positional: ``--inner`` is the (S, P) slot of a law and ``--outer``
the (T, Q) slot; a monad-monad law composes to a monad on outer ∘ inner.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .compose import check_compatible, composite_from_law, law_from_composite
from .directed import DirectedContainer, check_directed
from .documents import DocumentError, document_of, print_document, resolve
from .laws import DistLawData, LawKind, beck_oracle, check_law
from .monadic import MonadicContainer, check_monadic, monad_laws_oracle
from .report import EquationReport
from .search import (Applicable, BoundedSat, BoundedUnsat, BudgetExceeded, SearchProblem,
                     assignment_to_law, check_left_zero, nogo_certificate, refute_bounded, search_laws)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_sizes(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError:
        raise UsageError(f"bad --sizes value {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--fuel", type=int, default=3, help="bound for list containers (default 3)")
    common.add_argument("--sizes", default="0..3", help="set sizes for oracles, e.g. 0..3")
    common.add_argument("--budget", type=int, default=10 ** 7, help="search node limit")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for checking")

    p = _Parser(prog="contlaws", description="Check and search container distributive laws.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="run an axiom or law checker")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--monadic")
    g.add_argument("--directed")
    g.add_argument("--law")
    g.add_argument("--composite")

    o = sub.add_parser("oracle", parents=[common], help="check the interpreted monad laws")
    g = o.add_mutually_exclusive_group(required=True)
    g.add_argument("--monadic")
    g.add_argument("--law")

    for name, helptext in (("search", "enumerate every law"), ("refute", "bounded refutation under fuel"),
                           ("nogo", "too-many-constants certificate")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--inner", required=True, help="slot (S, P): builtin ref or document file")
        s.add_argument("--outer", required=True, help="slot (T, Q): builtin ref or document file")
        if name != "nogo":
            s.add_argument("--kind", choices=[k.value for k in LawKind], default="mnd-mnd")

    s = sub.add_parser("compose", parents=[common], help="composite from a law")
    s.add_argument("--law", required=True)
    s.add_argument("--output", help="also write the composite document to this file")
    s = sub.add_parser("extract-law", parents=[common], help="law from a compatible composite")
    s.add_argument("--composite", required=True)
    s = sub.add_parser("zoo", parents=[common], help="print a builtin structure as a document")
    s.add_argument("ref")
    return p


def _load(ref, fuel, want=None):
    try:
        obj = resolve(ref, fuel)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if want is not None and not isinstance(obj, want):
        raise UsageError(f"{ref} is not a {want.__name__}")
    return obj


def _report_out(report: EquationReport, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps({**(extra or {}), **report.to_dict()}, ensure_ascii=False)
    return report.to_text()


def _cmd_check(a, out):
    if a.monadic:
        report = check_monadic(_load(a.monadic, a.fuel, MonadicContainer), a.jobs)
    elif a.directed:
        report = check_directed(_load(a.directed, a.fuel, DirectedContainer), a.jobs)
    elif a.law:
        report = check_law(_load(a.law, a.fuel, DistLawData), a.jobs)
    else:
        CC = _load(a.composite, a.fuel)
        if not hasattr(CC, "composite"):
            raise UsageError(f"{a.composite} is not a composite document")
        report = check_compatible(CC, a.jobs)
    out.append(_report_out(report, a.format))
    return EXIT_OK if report.ok else EXIT_REFUTED


def _cmd_oracle(a, out):
    sizes = parse_sizes(a.sizes)
    if a.monadic:
        report = monad_laws_oracle(_load(a.monadic, a.fuel, MonadicContainer), sizes)
    else:
        report = beck_oracle(_load(a.law, a.fuel, DistLawData), sizes)
    out.append(_report_out(report, a.format))
    return EXIT_OK if report.ok else EXIT_REFUTED


def _problem(a):
    inner, outer = _load(a.inner, a.fuel), _load(a.outer, a.fuel)
    try:
        return SearchProblem(inner, outer, LawKind(getattr(a, "kind", "mnd-mnd")), a.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _verdict_json(v) -> dict:
    d = {"verdict": v.name, "nodes": v.nodes}
    if isinstance(v, BoundedUnsat):
        d.update(fuel=v.fuel, instances=v.instances)
    if isinstance(v, BoundedSat):
        d["fuel"] = v.fuel
    if isinstance(v, BudgetExceeded):
        d["found"] = v.found
    return d


def _cmd_search(a, out):
    problem = _problem(a)
    try:
        v = search_laws(problem)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if isinstance(v, BudgetExceeded):
        out.append(json.dumps(_verdict_json(v)) if a.format == "json"
                   else f"BudgetExceeded after {v.nodes} nodes ({v.found} laws so far)")
        return EXIT_BUDGET
    docs = [json.loads(print_document(document_of(L))) for L in v.laws]
    if a.format == "json":
        out.append(json.dumps({**_verdict_json(v), "count": len(v.laws), "laws": docs}, ensure_ascii=False))
    else:
        out.append(f"Complete: {len(v.laws)} law(s) of kind {problem.kind.value}")
        for i, L in enumerate(v.laws):
            out.append(f"-- law {i}")
            out.append(print_document(document_of(L)).rstrip())
    return EXIT_OK


def _refute(problem):
    v = refute_bounded(problem)
    return v


def _cmd_refute(a, out):
    problem = _problem(a)
    v = _refute(problem)
    if a.format == "json":
        d = _verdict_json(v)
        if isinstance(v, BoundedSat):
            d["law"] = json.loads(print_document(document_of(assignment_to_law(problem, v.assignment))))
        out.append(json.dumps(d, ensure_ascii=False))
    elif isinstance(v, BoundedUnsat):
        out.append(f"BoundedUnsat: no law on the fragment within fuel {v.fuel} "
                   f"({v.instances} instance groups, {v.nodes} nodes)")
    elif isinstance(v, BoundedSat):
        out.append(f"BoundedSat: consistent partial law within fuel {v.fuel} ({v.nodes} nodes)")
        out.append(print_document(document_of(assignment_to_law(problem, v.assignment))).rstrip())
    else:
        out.append(f"BudgetExceeded after {v.nodes} nodes")
    return {BoundedUnsat: EXIT_REFUTED, BoundedSat: EXIT_OK}.get(type(v), EXIT_BUDGET)


def _cmd_nogo(a, out):
    inner, outer = _load(a.inner, a.fuel, MonadicContainer), _load(a.outer, a.fuel, MonadicContainer)
    cert = nogo_certificate(inner, outer)
    cross = _refute(SearchProblem(inner, outer, LawKind.MND_MND, a.budget))
    zeros = check_left_zero(outer)
    d = {"certificate": cert.name, "cross_check": _verdict_json(cross), "left_zero": zeros.status.value}
    if isinstance(cert, Applicable):
        d.update(witness={"s": cert.witness[0], "f": list(cert.witness[1])},
                 positions=list(cert.positions), constants=list(cert.constants))
    else:
        d["reason"] = cert.reason
    consistent = not (isinstance(cert, Applicable) and isinstance(cross, BoundedSat))
    d["consistent"] = consistent
    if a.format == "json":
        out.append(json.dumps(d, ensure_ascii=False))
    else:
        if isinstance(cert, Applicable):
            out.append(f"Applicable: S3 witness s={cert.witness[0]} f={list(cert.witness[1])}, "
                       f"positions {list(cert.positions)}, constants {list(cert.constants)}")
        else:
            out.append(f"NotApplicable: {cert.reason}")
        out.append(f"cross-check: {cross.name} ({cross.nodes} nodes)")
        out.append(f"left zeros of outer: {zeros.status.value}")
    if isinstance(cross, BudgetExceeded):
        return EXIT_BUDGET
    return EXIT_OK if consistent else EXIT_REFUTED


def _cmd_compose(a, out):
    L = _load(a.law, a.fuel, DistLawData)
    try:
        CC = composite_from_law(L)
    except ValueError as exc:
        out.append(f"rejected: {exc}")
        return EXIT_REFUTED
    report = check_compatible(CC, a.jobs)
    if a.output:
        with open(a.output, "w", encoding="utf-8") as fh:
            fh.write(print_document(document_of(CC)))
    if a.format == "json":
        out.append(json.dumps({"composite": json.loads(print_document(document_of(CC))),
                               "report": report.to_dict()}, ensure_ascii=False))
    else:
        out.append(print_document(document_of(CC)).rstrip())
        out.append(report.to_text())
    return EXIT_OK if report.ok else EXIT_REFUTED


def _cmd_extract(a, out):
    CC = _load(a.composite, a.fuel)
    if not hasattr(CC, "composite"):
        raise UsageError(f"{a.composite} is not a composite document")
    try:
        L = law_from_composite(CC)
    except ValueError as exc:
        out.append(f"rejected: {exc}")
        return EXIT_REFUTED
    out.append(print_document(document_of(L)).rstrip())
    return EXIT_OK


def _cmd_zoo(a, out):
    obj = _load(a.ref, a.fuel)
    out.append(print_document(document_of(obj)).rstrip())
    return EXIT_OK


COMMANDS = {"check": _cmd_check, "oracle": _cmd_oracle, "search": _cmd_search, "refute": _cmd_refute,
            "nogo": _cmd_nogo, "compose": _cmd_compose, "extract-law": _cmd_extract, "zoo": _cmd_zoo}


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Exit status and report text for one invocation."""
    out: list[str] = []
    try:
        args = build_parser().parse_args(list(argv))
        status = COMMANDS[args.command](args, out)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except DocumentError as exc:
        return EXIT_USAGE, f"document error {exc}"
    return status, "\n".join(out)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(x in ("-h", "--help") for x in argv) or not argv:
        try:
            build_parser().parse_args(list(argv) or ["--help"])
        except SystemExit as exc:
            return int(exc.code or 0)
    status, text = run_command(argv)
    stream = sys.stderr if status == EXIT_USAGE else sys.stdout
    if text:
        print(text, file=stream)
    return status
