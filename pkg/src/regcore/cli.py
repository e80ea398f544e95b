"""Command-line front end.

stdout carries only JSON; human-readable logs go to stderr behind --verbose.
Exit codes: 0 nonempty / success, 1 empty, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata, engine, problems, reps
from .encoding import decode, decode_red_blue, normalize
from .graphs import Graph, graph_from_json, graph_to_json, red_blue_from_json, red_blue_to_json
from .regex import compile_regex


def _log(args, message: str):
    if args.verbose:
        print(message, file=sys.stderr)


def _load_automaton(args) -> automata.Nfa:
    if args.regex is not None:
        return compile_regex(args.regex)
    return automata.load_nfa(args.automaton)


def _emit(args, obj) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_source_args(sub, problem_required=True):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--regex", help="automaton as a regular expression")
    group.add_argument("--automaton", help="automaton as a JSON file")
    sub.add_argument("--problem", required=problem_required)
    sub.add_argument("--emit-reps", metavar="PATH",
                     help="write the representative function as JSON")
    sub.add_argument("--max-search", type=int, default=1 << 21,
                     help="configuration budget for the core search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regcore",
        description="Decide whether a regular language of encoded graph "
                    "instances contains a positive one.")
    parser.add_argument("--verbose", action="store_true",
                        help="progress logs on stderr")
    parser.add_argument("--output", metavar="PATH",
                        help="write the JSON result to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="run the full decision")
    _add_source_args(p_decide)

    p_core = sub.add_parser("core", help="compute the finite core")
    _add_source_args(p_core)

    p_decode = sub.add_parser("decode", help="decode a word from stdin")
    p_decode.add_argument("--red-blue", action="store_true")

    p_solve = sub.add_parser("solve", help="solve a graph JSON from stdin")
    p_solve.add_argument("--problem", required=True)

    sub.add_parser("list-problems", help="print the problem registry")
    return parser


def _rep_for(args, m):
    spec = problems.by_name(args.problem)
    norm = normalize(m)
    if automata.is_empty(norm):
        return spec, norm, None, None
    ts = reps.token_sets(norm)
    rep = engine.choose_rep(norm, spec, ts)
    return spec, norm, ts, rep


def _cmd_decide(args) -> int:
    m = _load_automaton(args)
    spec = problems.by_name(args.problem)
    if args.emit_reps:
        _, norm, _, rep = _rep_for(args, m)
        with open(args.emit_reps, "w", encoding="utf-8") as fh:
            json.dump(rep.to_json() if rep else {}, fh, indent=2, sort_keys=True)
    decision = engine.decide(m, spec, max_nodes=args.max_search)
    _log(args, f"decision: {decision.answer} "
               f"(examined {decision.stats.core_size} instances)")
    _emit(args, decision.to_json())
    return 0 if decision.answer == "nonempty" else 1


def _cmd_core(args) -> int:
    m = _load_automaton(args)
    spec, norm, ts, rep = _rep_for(args, m)
    if rep is None:
        _emit(args, [])
        return 0
    if args.emit_reps:
        with open(args.emit_reps, "w", encoding="utf-8") as fh:
            json.dump(rep.to_json(), fh, indent=2, sort_keys=True)
    core = reps.finite_core(norm, rep, red_blue=spec.red_blue,
                            max_nodes=args.max_search)
    out = []
    for inst in core.instances:
        g, k = inst.instance
        gjson = (graph_to_json(g, k) if isinstance(g, Graph)
                 else red_blue_to_json(g, k))
        out.append({"graph": gjson, "k": k,
                    "witness": "".join(t.word for t in inst.word_tokens)})
    _emit(args, out)
    return 0


def _cmd_decode(args) -> int:
    word = sys.stdin.read().strip()
    if args.red_blue:
        g, k = decode_red_blue(word)
        _emit(args, red_blue_to_json(g, k))
    else:
        g, k = decode(word)
        _emit(args, graph_to_json(g, k))
    return 0


def _cmd_solve(args) -> int:
    spec = problems.by_name(args.problem)
    obj = json.loads(sys.stdin.read())
    k = obj.get("k", 0)
    if spec.red_blue:
        instance = (red_blue_from_json(obj), k)
    else:
        instance = (graph_from_json(obj), k)
    verdict = problems.solve(spec, instance)
    _emit(args, {"positive": verdict.positive,
                 "certificate": verdict.certificate})
    return 0


def _cmd_list_problems(args) -> int:
    rows = []
    for spec in problems.registry():
        rows.append({
            "name": spec.name,
            "case": spec.case.value if spec.case else None,
            "param_role": spec.param_role.value if spec.param_role else None,
            "supported": spec.supported,
            "reason": spec.reason,
        })
    _emit(args, rows)
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "core": _cmd_core,
    "decode": _cmd_decode,
    "solve": _cmd_solve,
    "list-problems": _cmd_list_problems,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BrokenPipeError:
        raise
    except Exception as exc:  # uniform error contract
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
