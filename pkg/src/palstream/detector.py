"""Per-symbol palindrome bookkeeping over a stream.

Combines both suffix-palindrome parities with shortest-unique-suffix queries:
a step reveals a new palindrome exactly when the maximal palindromic suffix
is at least as long as the shortest suffix never seen before.  Every distinct
palindromic substring of the stream is reported exactly once, at the step
where it first becomes a suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .manacher import OnlineManacher
from .ukkonen import ChildStorageMode, OnlineSuffixTree, PerfCounters

__all__ = ["StepReport", "DetectorSummary", "PalindromeDetector"]


@dataclass(frozen=True, slots=True)
class StepReport:
    """Everything known about the stream right after one symbol."""

    n: int  # symbols consumed so far
    max_pal_odd: int
    max_pal_even: int
    max_pal: int  # max of the two parities
    min_unique_suff: int
    new_palindrome: tuple[int, int] | None  # 1-based inclusive span, or None
    closure_len: int  # length of the palindromic closure of the prefix
    distinct_count: int  # distinct non-empty palindromes seen so far


@dataclass(frozen=True, slots=True)
class DetectorSummary:
    """Snapshot of totals; taking one leaves the detector usable."""

    n: int
    distinct_count: int
    manacher_loop_odd: int
    manacher_loop_even: int
    tree: PerfCounters

    @property
    def manacher_loop_total(self) -> int:
        return self.manacher_loop_odd + self.manacher_loop_even


class PalindromeDetector:
    """Streams symbols through the palindrome trackers and the suffix tree.

    Symbols may be any hashable, equality-comparable objects; ordered
    child-storage mode additionally needs them totally ordered.  Independent
    detectors share no state; a single detector is single-writer.
    """

    def __init__(self, mode: ChildStorageMode | str = ChildStorageMode.ORDERED) -> None:
        self._odd = OnlineManacher(0)
        self._even = OnlineManacher(1)
        self._tree = OnlineSuffixTree(mode)
        self._n = 0
        self._distinct = 0

    @property
    def mode(self) -> ChildStorageMode:
        return self._tree.mode

    @property
    def n(self) -> int:
        return self._n

    @property
    def distinct_count(self) -> int:
        return self._distinct

    def push(self, c) -> StepReport:
        """Consume one symbol and report the state of the extended stream.

        All three substructures absorb the symbol before anything is queried.
        """
        self._odd.add_letter(c)
        self._even.add_letter(c)
        self._tree.add_letter(c)
        self._n = n = self._n + 1
        odd = self._odd.max_pal()
        even = self._even.max_pal()
        longest = odd if odd >= even else even
        unique = self._tree.min_unique_suff()
        span = None
        if longest >= unique:
            span = (n - longest + 1, n)
            self._distinct += 1
        return StepReport(
            n=n,
            max_pal_odd=odd,
            max_pal_even=even,
            max_pal=longest,
            min_unique_suff=unique,
            new_palindrome=span,
            closure_len=2 * n - longest,
            distinct_count=self._distinct,
        )

    def feed(self, symbols: Iterable) -> Iterator[StepReport]:
        """Push every symbol in order, yielding one report per symbol."""
        for c in symbols:
            yield self.push(c)

    def finish(self) -> DetectorSummary:
        """Pure snapshot of the totals; the detector stays usable."""
        return DetectorSummary(
            n=self._n,
            distinct_count=self._distinct,
            manacher_loop_odd=self._odd.loop_iterations,
            manacher_loop_even=self._even.loop_iterations,
            tree=self._tree.counters(),
        )
