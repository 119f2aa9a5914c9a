"""JSON document formats and DOT emission.

Setup:     {"group": {"order", "names", "table"}, "ideals": {"count", "action"}}
Cocycle:   {"model": "valuation", "values": n x n x r ints}
           {"model": "qix", "values": 2 x 2 element strings}
Witness:   {"model": "valuation-witness", "values": n x r ints}
           {"model": "qix-witness", "values": 2 element strings}

All emitted documents go through :func:`dumps`, which is canonical: one
top-level key per line, values written compactly, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .classify import ClassificationReport, GraphOfF
from .cohomology import CoboundaryWitness, make_witness
from .errors import ParseError, SetupMismatch, ValidationError
from .groups import GaloisSetup, example_setup, validate_setup
from .qix import ExactCocycle, QiRatFunc, format_element, parse_element, validate_exact_cocycle
from .valuation import ValCocycle, validate_cocycle

MAX_GROUP_ORDER = 64


class GroupTooLarge(ValidationError):
    pass


def dumps(doc: dict) -> str:
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in doc.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def load(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def setup_from_doc(doc: Any) -> GaloisSetup:
    if not isinstance(doc, dict):
        raise ParseError("setup document must be a JSON object")
    order = doc.get("group", {}).get("order") if isinstance(doc.get("group"), dict) else None
    if isinstance(order, int) and order > MAX_GROUP_ORDER:
        raise GroupTooLarge(f"group order {order} exceeds {MAX_GROUP_ORDER}")
    return validate_setup(doc)


def setup_to_doc(setup: GaloisSetup) -> dict:
    return setup.to_dict()


def _model(doc: Any, allowed: tuple[str, ...]) -> str:
    if not isinstance(doc, dict) or "model" not in doc or "values" not in doc:
        raise ParseError("document needs 'model' and 'values'")
    model = doc["model"]
    if model not in allowed:
        raise ParseError(f"model {model!r} not one of {', '.join(allowed)}")
    return model


def _is_example(setup: GaloisSetup) -> bool:
    ex = example_setup()
    return setup.group.table == ex.group.table and setup.ideals.perms == ex.ideals.perms


def cocycle_from_doc(doc: Any, setup: GaloisSetup) -> ValCocycle | ExactCocycle:
    model = _model(doc, ("valuation", "qix"))
    values = doc["values"]
    if not isinstance(values, list):
        raise ParseError("'values' must be an array")
    if model == "valuation":
        return validate_cocycle(values, setup)
    if not _is_example(setup):
        raise SetupMismatch("qix cocycles live on the two-ideal C2 example setup")
    if any(not isinstance(a, str) for row in values if isinstance(row, list) for a in row):
        raise ParseError("qix values must be strings")
    return validate_exact_cocycle(values)


def cocycle_to_doc(f: ValCocycle | ExactCocycle) -> dict:
    if isinstance(f, ExactCocycle):
        return {"model": "qix", "values": f.to_strings()}
    return {"model": "valuation", "values": f.to_lists()}


def witness_from_doc(doc: Any, setup: GaloisSetup) -> CoboundaryWitness | tuple[QiRatFunc, QiRatFunc]:
    model = _model(doc, ("valuation-witness", "qix-witness"))
    values = doc["values"]
    if model == "valuation-witness":
        if not isinstance(values, list) or any(
            not isinstance(v, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in v)
            for v in values
        ):
            raise ParseError("valuation witness values must be an n x r integer array")
        return make_witness(setup, values)
    if not isinstance(values, list) or len(values) != 2 or any(not isinstance(a, str) for a in values):
        raise ParseError("qix witness values must be two element strings")
    return tuple(parse_element(a) for a in values)


def witness_to_doc(w: CoboundaryWitness | tuple) -> dict:
    if isinstance(w, CoboundaryWitness):
        return {"model": "valuation-witness", "values": w.to_lists()}
    return {"model": "qix-witness", "values": [format_element(a) for a in w]}


def report_to_doc(report: ClassificationReport) -> dict:
    return report.to_dict()


def graph_to_dot(graph: GraphOfF, setup: GaloisSetup) -> str:
    """Hasse diagram of the graph of f; edges point from smaller to larger coset."""
    names = setup.group.names
    lines = ["digraph graph_of_f {", "  rankdir=BT;", "  node [shape=box];"]
    for i, coset in enumerate(graph.cosets):
        rep = names[coset[0]]
        label = "H" if coset[0] == 0 else f"{rep}H"
        members = ",".join(names[g] for g in coset)
        extra = ", style=bold, peripheries=2" if i == 0 else ""
        lines.append(f'  c{i} [label="{label}", tooltip="{{{members}}}"{extra}];')
    for a, b in graph.hasse:
        lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary_text(report: ClassificationReport) -> str:
    names = report.setup.group.names
    d = report.to_dict()
    yes = {True: "yes", False: "no"}
    out = [
        f"H = {{{', '.join(names[g] for g in report.H.members)}}}",
        "graph of f: "
        + (
            ", ".join(f"{d['graph']['labels'][a]} < {d['graph']['labels'][b]}" for a, b in report.graph.hasse)
            or d["graph"]["labels"][0] + " (single coset)"
        ),
        f"azumaya:    {yes[report.azumaya]}",
        f"hereditary: {yes[report.hereditary]}",
        f"maximal:    {yes[report.maximal]}",
    ]
    hw = report.hereditary_witness
    if hw is not None:
        out.append(
            f"  f({names[hw.tau]}, {names[hw.tau]}^-1) has exponent {hw.exponent} at ideal {hw.ideal}"
        )
    mw = d["witnesses"]["maximal"]
    if mw is not None and mw["kind"] == "coset":
        coset = ", ".join(names[g] for g in mw["coset"])
        out.append(f"  right coset {{{coset}}} of D_M{mw['ideal']} has no g with f(g, g^-1) a unit at M{mw['ideal']}")
    out.append("radical I_tau exponents: " + "; ".join(
        f"{names[t]}:{tuple(v)}" for t, v in enumerate(report.radical.iexps)
    ))
    out.append("localizations: " + ", ".join(
        f"M{lv.ideal}:{'maximal' if lv.maximal else 'not maximal'}" for lv in report.localizations
    ))
    out.append("cross checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in report.cross_checks.items()))
    return "\n".join(out) + "\n"
