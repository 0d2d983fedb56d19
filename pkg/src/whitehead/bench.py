"""Benchmark harness for the average-case experiments.

Work is counted in abstract units (letters read, moves scored, level-graph
vertices), so the numbers are machine independent.  Every sample draws
from its own generator keyed by (seed, n, sample index); results do not
depend on iteration order or on the number of workers.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

import numpy as np

from .minimization import Work, is_strictly_minimal
from .orbits import (Stage, bounded_orbit_enumerate, is_primitive, level_graph, same_orbit)
from .words import (Word, check_rank, cyclic_trim, letters_of,
                    sample_ball, sample_cyclically_reduced, sample_freely_reduced, stream)

TASKS = ("primitivity", "equivalence", "trim", "sm-fraction", "orbit-census")
CSV_HEADER = ("task", "r", "n", "samples", "mean_work", "p95_work",
              "filter_conclusive_fraction", "mean_wall_ns", "seed")


@dataclass
class BenchConfig:
    rank: int
    lengths: list[int]
    samples: int
    seed: int = 0
    task: str = "primitivity"
    timing: bool = False
    workers: int = 1

    def __post_init__(self):
        check_rank(self.rank)
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if list(self.lengths) != sorted(self.lengths):
            raise ValueError("lengths must be ascending")
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}")


@dataclass
class BenchRecord:
    task: str
    r: int
    n: int
    samples: int
    mean_work: float
    p95_work: float
    filter_conclusive_fraction: float
    mean_wall_ns: float | None
    seed: int
    works: list[int] = field(default_factory=list, repr=False)


# Each sample function returns (work, conclusive flag).

def _primitivity_sample(rank, n, seed, i):
    w = sample_cyclically_reduced(rank, n, stream(seed, n, i))
    res = is_primitive(w)
    return res.stats.total_work, res.stats.filter_conclusive


def _equivalence_sample(rank, n, seed, i):
    rng = stream(seed, n, i)
    u = sample_freely_reduced(rank, n, rng)
    v = sample_ball(rank, n, rng)
    verdict = same_orbit(u, v)
    return verdict.stats.total, verdict.path is Stage.FAST_SM


def _trim_sample(rank, n, seed, i):
    steps = cyclic_trim(sample_freely_reduced(rank, n, stream(seed, n, i))).steps
    return steps, steps == 0


def _sm_sample(rank, n, seed, i):
    w = sample_cyclically_reduced(rank, n, stream(seed, n, i))
    work = Work()
    sm = is_strictly_minimal(w, work)
    return work.total, sm


_SAMPLERS = {
    "primitivity": _primitivity_sample,
    "equivalence": _equivalence_sample,
    "trim": _trim_sample,
    "sm-fraction": _sm_sample,
}


def _run_chunk(args):
    task, rank, n, seed, indices, timing = args
    fn = _SAMPLERS[task]
    out = []
    for i in indices:
        t0 = time.perf_counter_ns() if timing else 0
        work, flag = fn(rank, n, seed, i)
        dt = time.perf_counter_ns() - t0 if timing else 0
        out.append((work, flag, dt))
    return out


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    if cfg.task not in _SAMPLERS:
        raise ValueError(f"task {cfg.task!r} is not a sampling benchmark")
    records = []
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for n in cfg.lengths:
            chunks = np.array_split(np.arange(cfg.samples), max(1, cfg.workers * 4))
            jobs = [(cfg.task, cfg.rank, n, cfg.seed, c.tolist(), cfg.timing)
                    for c in chunks if len(c)]
            results = pool.map(_run_chunk, jobs) if pool else map(_run_chunk, jobs)
            rows = [row for chunk in results for row in chunk]
            works = np.array([r[0] for r in rows], dtype=np.int64)
            records.append(BenchRecord(
                task=cfg.task, r=cfg.rank, n=n, samples=len(rows),
                mean_work=float(works.mean()),
                p95_work=float(np.percentile(works, 95)),
                filter_conclusive_fraction=sum(r[1] for r in rows) / len(rows),
                mean_wall_ns=float(np.mean([r[2] for r in rows])) if cfg.timing else None,
                seed=cfg.seed,
                works=works.tolist(),
            ))
    finally:
        if pool:
            pool.shutdown()
    return records


def bench_primitivity(cfg: BenchConfig) -> list[BenchRecord]:
    return run_bench(_with_task(cfg, "primitivity"))


def bench_equivalence(cfg: BenchConfig) -> list[BenchRecord]:
    return run_bench(_with_task(cfg, "equivalence"))


def bench_trim(cfg: BenchConfig) -> list[BenchRecord]:
    return run_bench(_with_task(cfg, "trim"))


def bench_sm_fraction(cfg: BenchConfig) -> list[BenchRecord]:
    return run_bench(_with_task(cfg, "sm-fraction"))


def _with_task(cfg: BenchConfig, task: str) -> BenchConfig:
    if cfg.task == task:
        return cfg
    d = asdict(cfg)
    d["task"] = task
    return BenchConfig(**d)


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        wall = "NA" if r.mean_wall_ns is None else f"{r.mean_wall_ns:.0f}"
        w.writerow([r.task, r.r, r.n, r.samples, f"{r.mean_work:.6f}", f"{r.p95_work:.6f}",
                    f"{r.filter_conclusive_fraction:.6f}", wall, r.seed])
    return buf.getvalue()


@dataclass
class CensusRow:
    word: str
    max_len: int
    count: int
    level_size: int


def orbit_census(seeds: list[Word], max_len: int) -> list[CensusRow]:
    """Cumulative counts |CA(w) ∩ {length <= l}| for l up to max_len, per seed word."""
    rows = []
    for w in seeds:
        orbit = bounded_orbit_enumerate(w, max_len)
        lengths = [len(x) for x in orbit]
        lo = min(lengths)
        level = len(level_graph(min(orbit, key=len)))
        for ell in range(lo, max_len + 1):
            rows.append(CensusRow(str(w), ell, sum(1 for x in lengths if x <= ell), level))
    return rows


def census_to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("word", "max_len", "count", "level_size"))
    for r in rows:
        w.writerow((r.word, r.max_len, r.count, r.level_size))
    return buf.getvalue()


def exact_trim_expectation(rank: int, n: int) -> float:
    """Mean trim steps over all freely reduced words of length n (enumeration)."""
    total = count = 0
    for letters in product(letters_of(rank), repeat=n):
        if any(p == -q for p, q in zip(letters, letters[1:])):
            continue
        total += cyclic_trim(Word._trusted(letters, rank)).steps
        count += 1
    return total / count


def sampler_self_test(rank: int, seed: int = 0, draws: int = 20000, z: float = 5.0) -> bool:
    """Compare empirical sampler frequencies with exhaustive enumeration on
    tiny lengths; True when every frequency is within ``z`` binomial sigmas."""
    checks = (
        (2, lambda rng: sample_freely_reduced(rank, 2, rng), False),
        (3, lambda rng: sample_cyclically_reduced(rank, 3, rng), True),
    )
    for k, (n, draw, cyclic) in enumerate(checks):
        support = [letters for letters in product(letters_of(rank), repeat=n)
                   if not any(p == -q for p, q in zip(letters, letters[1:]))
                   and not (cyclic and letters[0] == -letters[-1])]
        rng = stream(seed, 0, k)
        counts = dict.fromkeys(support, 0)
        for _ in range(draws):
            letters = draw(rng).letters
            if letters not in counts:
                return False
            counts[letters] += 1
        p = 1 / len(support)
        sigma = (draws * p * (1 - p)) ** 0.5
        if any(abs(c - draws * p) > z * sigma for c in counts.values()):
            return False
    return True
