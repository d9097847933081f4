"""Built-in verification: a worked reference example with known-good output,
plus a bounded exhaustive comparison against the brute-force oracles."""

from __future__ import annotations

from itertools import product
from typing import Callable, Sequence

from . import oracle
from .detector import PalindromeDetector
from .ukkonen import ChildStorageMode

__all__ = [
    "REFERENCE_WORD",
    "golden_example_failures",
    "oracle_failures",
    "exhaustive_sweep",
    "run",
]

# Hand-checked reference trace for one word; every row below was derived by
# stepping the definitions by hand and is frozen here verbatim.
REFERENCE_WORD = "abadaadcaa"
REFERENCE_MAX_PAL_ODD = (1, 1, 3, 1, 3, 1, 1, 1, 1, 1)
REFERENCE_MAX_PAL_EVEN = (0, 0, 0, 0, 0, 2, 4, 0, 0, 2)
REFERENCE_MAX_PAL = (1, 1, 3, 1, 3, 2, 4, 1, 1, 2)
REFERENCE_MIN_UNIQUE = (1, 1, 2, 1, 2, 2, 3, 1, 2, 3)
REFERENCE_SPANS = ((1, 1), (2, 2), (1, 3), (4, 4), (3, 5),
                   (5, 6), (4, 7), (8, 8), None, None)


def golden_example_failures(
    mode: ChildStorageMode | str = ChildStorageMode.ORDERED,
) -> list[str]:
    """Run the reference word and diff every row against the frozen trace."""
    det = PalindromeDetector(mode)
    problems = []
    for step, c in enumerate(REFERENCE_WORD):
        report = det.push(c)
        expected = {
            "max_pal_odd": REFERENCE_MAX_PAL_ODD[step],
            "max_pal_even": REFERENCE_MAX_PAL_EVEN[step],
            "max_pal": REFERENCE_MAX_PAL[step],
            "min_unique_suff": REFERENCE_MIN_UNIQUE[step],
            "new_palindrome": REFERENCE_SPANS[step],
        }
        for name, want in expected.items():
            got = getattr(report, name)
            if got != want:
                problems.append(
                    f"step {step + 1}: {name} = {got!r}, expected {want!r}")
    return problems


def oracle_failures(
    w: Sequence,
    mode: ChildStorageMode | str = ChildStorageMode.ORDERED,
) -> list[str]:
    """Compare every per-step field of the detector against the brute-force
    oracles on one input, plus the end-of-run counter bounds.

    Returns human-readable mismatch descriptions; empty means the input
    passed.
    """
    problems = []
    spans = oracle.naive_distinct_subpalindromes(w)
    first_end: dict[int, tuple[int, int]] = {}
    for span in spans.values():
        if span[1] in first_end:
            problems.append(f"{w!r}: two palindromes first ending at {span[1]}")
        first_end[span[1]] = span

    det = PalindromeDetector(mode)
    count = 0
    for k in range(1, len(w) + 1):
        report = det.push(w[k - 1])
        prefix = w[:k]
        span = first_end.get(k)
        if span is not None:
            count += 1
        odd = oracle.naive_max_suffix_palindrome(prefix, 0)
        even = oracle.naive_max_suffix_palindrome(prefix, 1)
        checks = (
            ("max_pal_odd", odd, report.max_pal_odd),
            ("max_pal_even", even, report.max_pal_even),
            ("max_pal", max(odd, even), report.max_pal),
            ("min_unique_suff", oracle.naive_min_unique_suffix(prefix),
             report.min_unique_suff),
            ("new_palindrome", span, report.new_palindrome),
            ("closure_len", len(oracle.naive_palindromic_closure(prefix)),
             report.closure_len),
            ("distinct_count", count, report.distinct_count),
        )
        for name, want, got in checks:
            if want != got:
                problems.append(
                    f"{w!r} step {k}: {name} = {got!r}, oracle says {want!r}")
        if report.distinct_count > k:
            problems.append(f"{w!r} step {k}: distinct_count exceeds prefix length")

    summary = det.finish()
    n = len(w)
    if summary.manacher_loop_total > 4 * n:
        problems.append(
            f"{w!r}: manacher loop total {summary.manacher_loop_total} > 4n = {4 * n}")
    if n and summary.tree.nodes > 2 * n:
        problems.append(f"{w!r}: {summary.tree.nodes} tree nodes > 2n = {2 * n}")
    return problems


def exhaustive_sweep(
    alphabet: str = "ab",
    max_len: int = 12,
    mode: ChildStorageMode | str = ChildStorageMode.ORDERED,
    progress: Callable[[str], None] | None = None,
) -> tuple[str, list[str]] | None:
    """Check every string over ``alphabet`` up to ``max_len`` symbols.

    Stops at the first failing string, returning it with its mismatch list;
    None means the whole sweep passed.
    """
    for length in range(1, max_len + 1):
        if progress is not None:
            progress(f"  sweeping length {length} over {alphabet!r} ...")
        for letters in product(alphabet, repeat=length):
            w = "".join(letters)
            problems = oracle_failures(w, mode)
            if problems:
                return w, problems
    return None


def run(echo: Callable[[str], None] = print) -> bool:
    """Full self-check: golden example (both storage modes), then the
    exhaustive two-letter sweep.  Prints one line per stage."""
    ok = True
    for mode in (ChildStorageMode.ORDERED, ChildStorageMode.UNORDERED):
        problems = golden_example_failures(mode)
        if problems:
            ok = False
            echo(f"FAIL reference example ({mode.value}): {problems[0]}")
        else:
            echo(f"ok   reference example ({mode.value})")
    failure = exhaustive_sweep("ab", 12)
    if failure is not None:
        ok = False
        w, problems = failure
        echo(f"FAIL oracle sweep: counterexample {w!r}")
        for p in problems[:5]:
            echo(f"     {p}")
    else:
        echo("ok   oracle sweep (every 2-letter string up to length 12)")
    return ok
