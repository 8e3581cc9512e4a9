"""Command line entry point: ``twdecomp <command> ...``.

Graphs are read as graph6 or edge lists from a file or standard input and
reports are written as JSON.  Exit codes: 0 success, 1 verification failure,
2 input error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from .budget import Budget, BudgetExhausted, resolve
from .codecs import FORMATS, read_graph, write_graph
from .detect import (UNKNOWN, detect_biclique, detect_clique, detect_hole, detect_isk4, detect_line_wall,
                     detect_unique_chord_cycle, detect_wall, detect_wheel, is_t_clean)
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import GraphInputError
from .harness import LEMMAS, OK, PIPELINES, verify_lemma
from .prime import CLASSES, prime_decompose
from .recognize import (complete_bipartite_sides, embeds_in_fixed_host, is_series_parallel,
                        is_strongly_2bipartite, recognize_basic_isk4, recognize_basic_unique_chord,
                        recognize_line_of_chordless_subcubic)
from .width import rankwidth_exact, treewidth_exact

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
SCHEMA = 1

PATTERNS = ("isk4", "wheel", "unique-chord", "hole", "clique", "biclique", "wall", "line-wall", "t-clean")
THEOREMS = ("isk4", "unique-chord", "series-parallel", "line-subcubic", "complete-bipartite",
            "strongly-2-bipartite", "petersen", "heawood")


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _read(args):
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.input}: {exc.strerror}") from None
    fmt = None if args.format == "auto" else args.format
    return read_graph(data, fmt)


def _budget(args) -> Budget:
    base = resolve(None)
    return Budget(args.budget_nodes or base.nodes, args.budget_seconds or base.seconds)


def cmd_treewidth(args) -> int:
    res = treewidth_exact(_read(args), _budget(args))
    out = {"tw": res.width}
    if args.witness:
        out["decomposition"] = res.decomposition.to_json()
    _emit(out)
    return EXIT_OK


def cmd_rankwidth(args) -> int:
    res = rankwidth_exact(_read(args), _budget(args))
    out = {"rw": res.width}
    if args.witness:
        out["decomposition"] = res.decomposition.to_json()
    _emit(out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    trace = prime_decompose(_read(args), CLASSES[args.cls], _budget(args), args.one_cutsets_only)
    _emit({"schema": SCHEMA, **trace.to_json()})
    return EXIT_OK if trace.complete else EXIT_BUDGET


def cmd_detect(args) -> int:
    g, b, t = _read(args), _budget(args), args.t
    if args.pattern == "t-clean":
        rep = is_t_clean(g, t, b)
        _emit(rep.to_json())
        return EXIT_BUDGET if rep.clean is None else EXIT_OK
    run = {
        "isk4": lambda: detect_isk4(g, b),
        "wheel": lambda: detect_wheel(g, b, triangle_holes=args.triangle_holes),
        "unique-chord": lambda: detect_unique_chord_cycle(g, b),
        "hole": lambda: detect_hole(g, 3 if args.triangle_holes else 4, b),
        "clique": lambda: detect_clique(g, t, b),
        "biclique": lambda: detect_biclique(g, t, b),
        "wall": lambda: detect_wall(g, t, b),
        "line-wall": lambda: detect_line_wall(g, t, b),
    }[args.pattern]
    det = run()
    _emit(det.to_json())
    return EXIT_BUDGET if det.status == UNKNOWN else EXIT_OK


def cmd_recognize(args) -> int:
    g, b = _read(args), _budget(args)
    th = args.theorem
    if th == "isk4":
        out = recognize_basic_isk4(g, b).to_json()
    elif th == "unique-chord":
        out = recognize_basic_unique_chord(g, b).to_json()
    elif th == "series-parallel":
        ok, td = is_series_parallel(g, b)
        out = {"match": ok, "decomposition": td.to_json() if td else None}
    elif th == "line-subcubic":
        label = recognize_line_of_chordless_subcubic(g, b)
        out = {"match": label is not None, **(label.to_json() if label else {})}
    elif th == "complete-bipartite":
        sides = complete_bipartite_sides(g)
        out = {"match": sides is not None, "sides": sides}
    elif th == "strongly-2-bipartite":
        bip = is_strongly_2bipartite(g)
        out = {"match": bip is not None, "bipartition": bip}
    else:
        phi = embeds_in_fixed_host(g, th, b)
        out = {"match": phi is not None, "embedding": phi}
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(LEMMAS) if args.lemma == "all" else [args.lemma]
    reports = [verify_lemma(n, args.trials, args.seed, _budget(args)) for n in names]
    _emit({"schema": SCHEMA, "reports": [r.to_json() for r in reports]})
    if any(r.unknown for r in reports) and all(r.passed + r.unknown == r.trials for r in reports):
        return EXIT_BUDGET
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise GraphInputError(f"parameter {text!r} is not key=value")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def cmd_generate(args) -> int:
    params = dict(_param(p) for p in args.param)
    g = generate(GeneratorSpec(args.family, params, args.seed))
    out_fmt = "graph6" if args.format == "auto" else args.format
    sys.stdout.buffer.write(write_graph(g, out_fmt))
    return EXIT_OK


def cmd_pipeline(args) -> int:
    rep = PIPELINES[args.which](_read(args), args.t, _budget(args))
    _emit({"schema": SCHEMA, **rep.to_json()})
    if rep.verdict == "unknown":
        return EXIT_BUDGET
    return EXIT_OK if rep.verdict == OK else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twdecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_, choice=None):
        sp = sub.add_parser(name, help=help_)
        if choice is not None:
            sp.add_argument(choice[0], choices=choice[1])
        sp.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=("auto",) + FORMATS, default="auto")
        sp.add_argument("--budget-nodes", type=int, default=None)
        sp.add_argument("--budget-seconds", type=float, default=None)
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("treewidth", cmd_treewidth, "exact treewidth")
    sp.add_argument("--witness", action="store_true", help="include the tree decomposition")
    sp = graph_cmd("rankwidth", cmd_rankwidth, "exact rankwidth")
    sp.add_argument("--witness", action="store_true", help="include the rank decomposition")
    sp = graph_cmd("decompose", cmd_decompose, "prime decomposition trace")
    sp.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="all-graphs")
    sp.add_argument("--one-cutsets-only", action="store_true")
    sp = graph_cmd("detect", cmd_detect, "search for an induced pattern", ("pattern", PATTERNS))
    sp.add_argument("--t", type=int, default=3)
    sp.add_argument("--triangle-holes", action="store_true", help="let holes have length 3")
    graph_cmd("recognize", cmd_recognize, "basic-class recognition", ("theorem", THEOREMS))
    sp = graph_cmd("pipeline", cmd_pipeline, "bounded-treewidth pipeline", ("which", sorted(PIPELINES)))
    sp.add_argument("--t", type=int, default=3)

    sp = sub.add_parser("verify", help="run a lemma property suite")
    sp.add_argument("lemma", choices=sorted(LEMMAS) + ["all"])
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget-nodes", type=int, default=None)
    sp.add_argument("--budget-seconds", type=float, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a generated graph")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("--param", action="append", default=[], help="key=value, value parsed as JSON")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("auto",) + FORMATS, default="auto")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        _emit({"error": "budget", "message": str(exc), "lower": exc.lower, "upper": exc.upper})
        return EXIT_BUDGET
    except (GraphInputError, ValueError) as exc:
        _emit({"error": "input", "message": str(exc)})
        return EXIT_INPUT


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
