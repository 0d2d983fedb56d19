"""Command-line front end.

Exit codes: 0 yes / success, 1 no, 2 input error, 3 undecided at the
vertex cap (``equiv`` only).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import bench
from .automorphisms import AutWitness
from .graph import build_graph, has_cut_vertex, has_isolated_edge, is_complete, to_dot, vertex_label
from .minimization import greedy_minimize, is_minimal, is_strictly_minimal
from .orbits import (DEFAULT_CAP, BudgetExceeded, blocking_check, bounded_orbit_enumerate,
                     is_primitive, orbit_sorted, same_orbit)
from .words import (Word, WordError, canonical_cyclic, free_reduce, parse_letters,
                    sample_cyclically_reduced, sample_freely_reduced, stream)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


def _word(args, text: str) -> Word:
    return free_reduce(parse_letters(text, args.rank), args.rank)


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_reduce(args) -> int:
    w = _word(args, args.word)
    c = canonical_cyclic(w)
    _emit(args, str(w), {"word": str(w), "length": len(w), "cyclic": str(c)})
    return EXIT_YES


def cmd_graph(args) -> int:
    w = _word(args, args.word)
    g = build_graph(w, include_external=args.external)
    if args.dot:
        sys.stdout.write(to_dot(g))
        return EXIT_YES
    edges = [[vertex_label(u), vertex_label(v), m] for u, v, m in g.edges()]
    info = {"word": str(w), "edges": edges, "complete": is_complete(g),
            "cut_vertex": has_cut_vertex(g), "isolated_edge": has_isolated_edge(g)}
    lines = [" ".join(f"{u}-{v}" + (f"x{m}" if m > 1 else "") for u, v, m in edges) or "(no edges)",
             f"complete={info['complete']} cut_vertex={info['cut_vertex']} "
             f"isolated_edge={info['isolated_edge']}"]
    _emit(args, "\n".join(lines), info)
    return EXIT_YES


def cmd_primitive(args) -> int:
    w = _word(args, args.word)
    primitive, stats = is_primitive(w)
    info = {"word": str(w), "primitive": primitive, "filter_conclusive": stats.filter_conclusive,
            "filter_letters": stats.filter_letters, "trim_steps": stats.trim_steps,
            "work": stats.total_work}
    _emit(args, f"{'primitive' if primitive else 'not primitive'} "
                f"(filter letters {stats.filter_letters}, work {stats.total_work})", info)
    return EXIT_YES if primitive else EXIT_NO


def cmd_equiv(args) -> int:
    u, v = _word(args, args.u), _word(args, args.v)
    verdict = same_orbit(u, v, cap=args.cap)
    label = {True: "equivalent", False: "not equivalent", None: "undecided at cap"}[verdict.equivalent]
    info = {"u": str(u), "v": str(v), "equivalent": verdict.equivalent, "stage": verdict.path.value,
            "witness": str(verdict.witness) if verdict.witness is not None else None,
            "work": asdict(verdict.stats)}
    text = f"{label} [{verdict.path.value}]"
    if verdict.witness is not None:
        text += f"\nwitness: {verdict.witness}"
    _emit(args, text, info)
    if verdict.equivalent is None:
        return EXIT_UNDECIDED
    return EXIT_YES if verdict.equivalent else EXIT_NO


def cmd_minimize(args) -> int:
    res = greedy_minimize(_word(args, args.word))
    _emit(args, f"{res.minimal}\nrounds: {res.rounds}\nwitness: {res.witness}",
          {"minimal": str(res.minimal), "rounds": res.rounds, "witness": str(res.witness)})
    return EXIT_YES


def cmd_sm(args) -> int:
    c = canonical_cyclic(_word(args, args.word))
    minimal = is_minimal(c)
    sm = minimal and is_strictly_minimal(c)
    _emit(args, f"{c}: minimal={minimal} strictly_minimal={sm}",
          {"cyclic": str(c), "minimal": minimal, "strictly_minimal": sm})
    return EXIT_YES


def cmd_orbit_enum(args) -> int:
    try:
        words = orbit_sorted(bounded_orbit_enumerate(_word(args, args.word), args.max_len,
                                                     budget=args.budget))
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    for w in words:
        print(json.dumps(str(w)) if args.format == "json" else w)
    return EXIT_YES


def cmd_blocking(args) -> int:
    u, pattern = _word(args, args.u), _word(args, args.pattern)
    verdict = blocking_check(u, pattern, args.max_len)
    info = {"blocked": verdict.blocked, "bound": verdict.bound,
            "found": str(verdict.found) if verdict.found is not None else None}
    _emit(args, str(verdict), info)
    return EXIT_YES


def cmd_bench(args) -> int:
    if args.self_test and not bench.sampler_self_test(args.rank, args.seed):
        print("sampler self-test failed", file=sys.stderr)
        return EXIT_NO
    if args.task == "orbit-census":
        seeds = [_word(args, s) for s in args.words.split(",")]
        rows = bench.orbit_census(seeds, args.max_len)
        if args.format == "json":
            print(json.dumps([asdict(r) for r in rows]))
        else:
            sys.stdout.write(bench.census_to_csv(rows))
        return EXIT_YES
    cfg = bench.BenchConfig(rank=args.rank, lengths=args.lengths, samples=args.samples,
                            seed=args.seed, task=args.task, timing=args.timing,
                            workers=args.workers)
    records = bench.run_bench(cfg)
    if args.format == "json":
        print(json.dumps([{k: v for k, v in asdict(r).items() if k != "works"} for r in records]))
    else:
        sys.stdout.write(bench.records_to_csv(records))
    return EXIT_YES


def cmd_sample(args) -> int:
    for i in range(args.count):
        rng = stream(args.seed, args.length, i)
        if args.cyclic:
            w = sample_cyclically_reduced(args.rank, args.length, rng)
        else:
            w = sample_freely_reduced(args.rank, args.length, rng)
        print(json.dumps(str(w)) if args.format == "json" else w)
    return EXIT_YES


def _lengths(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whitehead",
                                description="Whitehead problem tools for free groups.")
    p.add_argument("--rank", "-r", type=int, default=2, help="rank of the free group (default 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="freely reduce a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("graph", help="Whitehead graph of a word")
    s.add_argument("word")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--external", action="store_true")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("primitive", help="primitivity test")
    s.add_argument("word")
    s.set_defaults(func=cmd_primitive)

    s = sub.add_parser("equiv", help="automorphic equivalence")
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("minimize", help="greedy minimisation")
    s.add_argument("word")
    s.set_defaults(func=cmd_minimize)

    s = sub.add_parser("sm", help="strict minimality test")
    s.add_argument("word")
    s.set_defaults(func=cmd_sm)

    s = sub.add_parser("orbit-enum", help="orbit members up to a length")
    s.add_argument("word")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_orbit_enum)

    s = sub.add_parser("blocking", help="bounded search for a pattern in an orbit")
    s.add_argument("u")
    s.add_argument("pattern")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_blocking)

    s = sub.add_parser("bench", help="average-case benchmarks")
    s.add_argument("task", choices=bench.TASKS)
    s.add_argument("--lengths", type=_lengths, default=[100, 1000])
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--timing", action="store_true", help="also record wall time")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--self-test", action="store_true",
                   help="check sampler frequencies on tiny lengths first")
    s.add_argument("--words", default="a", help="comma-separated seed words (orbit-census)")
    s.add_argument("--max-len", type=int, default=6)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("sample", help="draw uniform random words")
    s.add_argument("--length", "-n", type=int, required=True)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--cyclic", action="store_true")
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
