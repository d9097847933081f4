"""Brute-force reference implementations used as ground truth in tests.

Everything here favors directness over speed: palindromicity by literal
reversal, substring search by scanning every position.  Inputs are strings or
any sliceable sequences of hashable symbols; tests keep them short enough
that cubic time does not matter.
"""

from __future__ import annotations

from typing import Sequence

__all__ = [
    "is_palindrome",
    "naive_distinct_subpalindromes",
    "naive_max_suffix_palindrome",
    "naive_min_unique_suffix",
    "naive_palindromic_closure",
    "gen_abx",
]


def is_palindrome(s: Sequence) -> bool:
    """True iff s equals its own reversal (the empty sequence counts)."""
    return s == s[::-1]


def naive_distinct_subpalindromes(w: Sequence) -> dict:
    """Map each distinct non-empty palindromic substring of w to the 1-based
    inclusive (start, end) span of its first (leftmost) occurrence.

    Strings key by substring, other sequences by tuple of symbols.
    """
    found: dict = {}
    n = len(w)
    as_str = isinstance(w, str)
    for start in range(n):
        for end in range(start, n):
            sub = w[start:end + 1]
            if is_palindrome(sub):
                key = sub if as_str else tuple(sub)
                if key not in found:
                    found[key] = (start + 1, end + 1)
    return found


def naive_max_suffix_palindrome(w: Sequence, parity: int | None = None) -> int:
    """Length of the longest palindromic suffix of w.

    parity 0 keeps odd lengths only, parity 1 keeps even lengths (the empty
    suffix counts, so the result may be 0), None places no restriction.
    """
    n = len(w)
    for length in range(n, -1, -1):
        # parity 0 tracks odd lengths, 1 tracks even: skip the opposite bit
        if parity is not None and length % 2 == parity:
            continue
        if is_palindrome(w[n - length:]):
            return length
    raise ValueError("no palindromic suffix of the requested parity (empty input?)")


def naive_min_unique_suffix(w: Sequence) -> int:
    """Length of the shortest suffix of w occurring exactly once in w,
    counting overlapping occurrences.  Well defined for non-empty w because
    the whole string always occurs exactly once."""
    n = len(w)
    if n == 0:
        raise ValueError("empty input has no non-empty suffix")
    for length in range(1, n + 1):
        suffix = w[n - length:]
        occurrences = 0
        for at in range(n - length + 1):
            if w[at:at + length] == suffix:
                occurrences += 1
                if occurrences > 1:
                    break
        if occurrences == 1:
            return length
    raise AssertionError("unreachable: the full string occurs exactly once")


def naive_palindromic_closure(w: Sequence) -> Sequence:
    """Shortest palindrome having w as a prefix.

    Split w = u·v with v the maximal palindromic suffix; the closure is
    u·v·reverse(u).  Returns the same sequence type it was given.
    """
    if is_palindrome(w):
        return w
    v = naive_max_suffix_palindrome(w)
    u = w[:len(w) - v]
    return w + u[::-1]


def gen_abx(a, b, xs: Sequence):
    """Concatenate a·b·x for every x in xs.

    Such strings contain no palindromic substring longer than one symbol,
    which makes them adversarial inputs: every step can at most reveal a new
    single-letter palindrome.  Requires a != b and every x distinct from
    both.  Returns a string when all symbols are strings, a list otherwise.
    """
    if a == b:
        raise ValueError("a and b must differ")
    out = []
    all_str = isinstance(a, str) and isinstance(b, str)
    for x in xs:
        if x == a or x == b:
            raise ValueError(f"separator symbol {x!r} collides with {a!r}/{b!r}")
        all_str = all_str and isinstance(x, str)
        out.extend((a, b, x))
    if all_str:
        return "".join(out)
    return out
