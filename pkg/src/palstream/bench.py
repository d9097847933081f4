"""Instrumented end-to-end runs over generated inputs.

Wall times and structural counters from these runs are what the benchmark
CLI and the directional complexity checks consume: loop totals against the
linear bound, child probes against alphabet size, wall time against input
length.
"""

from __future__ import annotations

import gc
import random
import time
from dataclasses import dataclass

from . import oracle
from .detector import DetectorSummary, PalindromeDetector
from .selftest import REFERENCE_WORD
from .ukkonen import ChildStorageMode

__all__ = ["GENERATORS", "BenchConfig", "BenchMeasurement", "make_input",
           "run_one", "run_config"]

GENERATORS = ("random", "abx", "uniform_a", "paper_example")


@dataclass
class BenchConfig:
    """One benchmark request: a generator swept over sizes at one mode."""

    generator: str
    sigma: int = 2
    sizes: tuple[int, ...] = (1000,)
    mode: ChildStorageMode = ChildStorageMode.ORDERED
    repetitions: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}; "
                             f"choose from {', '.join(GENERATORS)}")
        if not self.sizes:
            raise ValueError("at least one size is required")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError("sizes must be strictly increasing")
        if any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.generator == "random" and self.sigma < 1:
            raise ValueError("random generator needs sigma >= 1")
        if self.generator == "abx" and self.sigma < 3:
            raise ValueError("abx generator needs sigma >= 3")


@dataclass
class BenchMeasurement:
    """Aggregated result for one (generator, size, mode) configuration."""

    generator: str
    sigma: int
    n: int
    mode: str
    repetitions: int
    seed: int
    wall_best: float
    wall_mean: float
    symbols_per_sec: float
    manacher_loop_iters: int
    manacher_loop_bound: int
    nodes: int
    leaves: int
    child_probes: int
    suffix_link_hops: int
    distinct_count: int

    def as_dict(self) -> dict:
        return {
            "gen": self.generator,
            "sigma": self.sigma,
            "n": self.n,
            "mode": self.mode,
            "reps": self.repetitions,
            "seed": self.seed,
            "wall_best": self.wall_best,
            "wall_mean": self.wall_mean,
            "symbols_per_sec": self.symbols_per_sec,
            "manacher_loop_iters": self.manacher_loop_iters,
            "manacher_loop_bound": self.manacher_loop_bound,
            "nodes": self.nodes,
            "leaves": self.leaves,
            "child_probes": self.child_probes,
            "suffix_link_hops": self.suffix_link_hops,
            "distinct_count": self.distinct_count,
        }


def make_input(generator: str, sigma: int, n: int, seed: int):
    """Deterministic input for one run; identical arguments give identical
    symbol sequences.  Token generators emit ints so any alphabet size works."""
    if generator == "uniform_a":
        return "a" * n
    if generator == "paper_example":
        return REFERENCE_WORD
    rng = random.Random(seed)
    if generator == "random":
        return [rng.randrange(sigma) for _ in range(n)]
    if generator == "abx":
        xs = [rng.randrange(2, sigma) for _ in range((n + 2) // 3)]
        return oracle.gen_abx(0, 1, xs)[:n]
    raise ValueError(f"unknown generator {generator!r}")


def run_one(symbols, mode: ChildStorageMode) -> tuple[float, DetectorSummary]:
    """Time one full pass of the detector over ``symbols`` (GC paused)."""
    detector = PalindromeDetector(mode)
    push = detector.push
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        for c in symbols:
            push(c)
        elapsed = time.perf_counter() - start
    finally:
        if gc_was_enabled:
            gc.enable()
    return elapsed, detector.finish()


def run_config(cfg: BenchConfig) -> list[BenchMeasurement]:
    """Run one configuration per size, aggregating repetitions.

    Each repetition derives its own input seed.  The loop totals of every
    repetition are checked against the 4n bound on the spot; a violation is
    an engine bug, not a measurement artifact, and raises.
    """
    cfg.validate()
    sizes = cfg.sizes
    if cfg.generator == "paper_example":
        sizes = (len(REFERENCE_WORD),)
    results = []
    for n in sizes:
        times = []
        first_summary: DetectorSummary | None = None
        for rep in range(cfg.repetitions):
            symbols = make_input(cfg.generator, cfg.sigma, n,
                                 cfg.seed * 1_000_003 + rep)
            elapsed, summary = run_one(symbols, cfg.mode)
            if summary.manacher_loop_total > 4 * n:
                raise RuntimeError(
                    f"loop bound violated: {summary.manacher_loop_total} > {4 * n} "
                    f"(gen={cfg.generator}, n={n}, rep={rep})")
            times.append(elapsed)
            if first_summary is None:
                first_summary = summary
        best = min(times)
        assert first_summary is not None
        counters = first_summary.tree
        results.append(BenchMeasurement(
            generator=cfg.generator,
            sigma=cfg.sigma,
            n=n,
            mode=cfg.mode.value,
            repetitions=cfg.repetitions,
            seed=cfg.seed,
            wall_best=best,
            wall_mean=sum(times) / len(times),
            symbols_per_sec=n / best if best > 0 else float("inf"),
            manacher_loop_iters=first_summary.manacher_loop_total,
            manacher_loop_bound=4 * n,
            nodes=counters.nodes,
            leaves=counters.leaves,
            child_probes=counters.child_probes,
            suffix_link_hops=counters.suffix_link_hops,
            distinct_count=first_summary.distinct_count,
        ))
    return results
