"""Command line interface.

Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 sampling cap
exhausted, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import documents as docs
from .classify import classify, graph_of_f
from .cohomology import coboundary_of, is_cohomologous_K_valuation, sample_cocycles, sub_tables
from .errors import CrossOrderError, SetupMismatch
from .groups import example_setup
from .qix import (
    ExactCocycle,
    QiPoly,
    QiRatFunc,
    build_example,
    format_element,
    to_valuation_model,
    verify_coboundary_exact,
    ONE,
    I,
)
from .valuation import ValCocycle


def _display(a: QiRatFunc) -> str:
    # grammar spells the unit imaginary coefficient "1i"; humans write "i"
    return re.sub(r"(?<![\d/])1i", "i", format_element(a))


def _load_pair(setup_path: str, cocycle_path: str):
    setup = docs.setup_from_doc(docs.load(setup_path))
    f = docs.cocycle_from_doc(docs.load(cocycle_path), setup)
    return setup, f


def _valuation(f: ValCocycle | ExactCocycle) -> ValCocycle:
    return to_valuation_model(f) if isinstance(f, ExactCocycle) else f


def cmd_validate(args) -> int:
    setup, f = _load_pair(args.setup, args.cocycle)
    kind = "exact" if isinstance(f, ExactCocycle) else "valuation"
    print(f"ok: group of order {setup.n} on {setup.r} ideals, {kind} cocycle")
    return 0


def cmd_classify(args) -> int:
    _, f = _load_pair(args.setup, args.cocycle)
    report = classify(_valuation(f))
    if args.json:
        sys.stdout.write(docs.dumps(docs.report_to_doc(report)))
    else:
        sys.stdout.write(docs.summary_text(report))
    return 0


def cmd_graph(args) -> int:
    _, f = _load_pair(args.setup, args.cocycle)
    v = _valuation(f)
    graph = graph_of_f(v)
    if args.dot:
        sys.stdout.write(docs.graph_to_dot(graph, v.setup))
    else:
        names = v.setup.group.names
        for i, coset in enumerate(graph.cosets):
            up = [graph.cosets[b][0] for a, b in graph.hasse if a == i]
            print(f"{names[coset[0]]}H covered by: {', '.join(names[g] + 'H' for g in up) or '-'}")
    return 0


def _example_doc(which: str) -> tuple[ExactCocycle, ValCocycle, dict]:
    ex = build_example(which)
    v = to_valuation_model(ex)
    report = classify(v)
    return ex, v, {
        "cocycle": which,
        "exact": ex.to_strings(),
        "valuation": v.to_lists(),
        "report": docs.report_to_doc(report),
    }


def cmd_example(args) -> int:
    which = ["f1", "f2"] if args.which == "pair" else [args.which]
    results = {w: _example_doc(w) for w in which}
    out: dict = {}
    text: list[str] = []
    for w, (ex, v, doc) in results.items():
        out[w] = doc
        text.append(f"== {w} ==")
        names = v.setup.group.names
        for s in range(2):
            for t in range(2):
                text.append(f"  {w}({names[s]},{names[t]}) = {_display(ex.vals[s][t])}  valuations {list(v.vals[s][t])}")
        text.append(docs.summary_text(classify(v)).rstrip())
    if args.which == "pair":
        f1, v1, _ = results["f1"]
        f2, v2, _ = results["f2"]
        c_sigma = QiRatFunc.make(QiPoly.make([I, ONE]))
        ok = verify_coboundary_exact(f1, f2, (QiRatFunc.of(1), c_sigma))
        w = is_cohomologous_K_valuation(v1, v2)
        out["pair"] = {
            "exact_witness": [format_element(QiRatFunc.of(1)), format_element(c_sigma)],
            "exact_verified": ok,
            "valuation_witness": None if w is None else w.to_lists(),
            "graphs_identical": out["f1"]["report"]["graph"] == out["f2"]["report"]["graph"],
        }
        text.append("== pair ==")
        if ok:
            text.append(f"~_K witness verified: c_sigma = {_display(c_sigma)}")
        else:
            text.append("~_K witness FAILED")
        text.append(f"valuation solver witness: {None if w is None else w.to_lists()}")
        text.append(f"graphs identical: {out['pair']['graphs_identical']}")
    if args.json:
        sys.stdout.write(docs.dumps(out))
    else:
        print("\n".join(text))
    return 0


def cmd_cohom(args) -> int:
    setup = docs.setup_from_doc(docs.load(args.setup))
    f = docs.cocycle_from_doc(docs.load(args.f), setup)
    g = docs.cocycle_from_doc(docs.load(args.g), setup)
    if type(f) is not type(g):
        raise SetupMismatch("both cocycles must use the same model")
    if args.solve:
        w = is_cohomologous_K_valuation(_valuation(f), _valuation(g))
        if w is None:
            print("infeasible")
            return 0
        text = docs.dumps(docs.witness_to_doc(w))
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        return 0
    wit = docs.witness_from_doc(docs.load(args.check), setup)
    if isinstance(wit, tuple):
        if not isinstance(f, ExactCocycle):
            raise SetupMismatch("an exact witness needs qix cocycles")
        ok = verify_coboundary_exact(f, g, wit)
    else:
        fv, gv = _valuation(f), _valuation(g)
        ok = coboundary_of(wit) == sub_tables(gv.vals, fv.vals)
    print("true" if ok else "false")
    return 0


def cmd_sample(args) -> int:
    setup = docs.setup_from_doc(docs.load(args.setup))
    found = sample_cocycles(setup, args.max_val, args.count, args.seed)
    texts = [docs.dumps(docs.cocycle_to_doc(f)) for f in found]
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, text in enumerate(texts):
            (out / f"cocycle_{i:03d}.json").write_text(text)
        print(f"wrote {len(texts)} cocycles to {out}")
    else:
        sys.stdout.write("".join(texts))
    return 0


def cmd_dump_example_setup(args) -> int:
    sys.stdout.write(docs.dumps(docs.setup_to_doc(example_setup())))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="crossorder",
        description="Decide whether crossed-product orders over a DVR are Azumaya, hereditary or maximal.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def pair(sp):
        sp.add_argument("setup", help="setup document (JSON)")
        sp.add_argument("cocycle", help="cocycle document (JSON)")

    sp = sub.add_parser("validate", help="validate a setup and cocycle")
    pair(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("classify", help="full classification report")
    pair(sp)
    sp.add_argument("--json", action="store_true", help="emit the JSON report")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("graph", help="the graph of f")
    pair(sp)
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("example", help="run the exact Q(i)(x) example")
    sp.add_argument("which", choices=["f1", "f2", "pair"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("cohom", help="solve for or check a coboundary witness")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--solve", action="store_true", help="find a valuation witness for g - f")
    mode.add_argument("--check", metavar="WITNESS", help="verify a witness document")
    sp.add_argument("setup")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("-o", "--output", help="write the witness here instead of stdout")
    sp.set_defaults(func=cmd_cohom)

    sp = sub.add_parser("sample", help="seeded sample of valid valuation cocycles")
    sp.add_argument("setup")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-val", type=int, default=1)
    sp.add_argument("--out-dir", help="write one document per file here")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("example-setup", help="print the two-ideal C2 setup document")
    sp.set_defaults(func=cmd_dump_example_setup)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CrossOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
