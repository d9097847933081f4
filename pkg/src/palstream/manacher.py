"""Incremental maximal suffix-palindrome tracking (online Manacher).

One instance tracks a single palindrome parity; two instances together give
the maximal palindromic suffix of a growing symbol sequence after every
appended symbol, in amortized constant time per symbol.
"""

from __future__ import annotations

__all__ = ["SENTINEL", "OnlineManacher"]


class _Sentinel:
    """Out-of-band boundary value; compares unequal to every input symbol."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "SENTINEL"


#: Reserved boundary symbol stored at position 1 of the internal text.
#: Never valid as input to :meth:`OnlineManacher.add_letter`.
SENTINEL = _Sentinel()


class OnlineManacher:
    """Maintains the maximal odd or even palindromic suffix of a growing text.

    ``delta`` selects the parity: 0 tracks odd-length palindromes, 1 tracks
    even-length ones.  Symbols may be any objects supporting equality.

    Internal arrays are 1-based (index 0 is padding) and the text starts with
    the boundary sentinel, so an odd palindrome centered at position ``j``
    with radius ``r`` spans ``text[j-r .. j+r]`` and an even one spans
    ``text[j-r+1 .. j+r]``.  For every center left of the current center
    ``rad`` holds the final maximal radius of that parity.

    Single-writer: one mutator at a time; queries must not overlap a mutation.
    """

    __slots__ = ("delta", "_text", "_rad", "_i", "_n", "_loop_iters")

    def __init__(self, delta: int) -> None:
        if delta not in (0, 1):
            raise ValueError(f"parity must be 0 (odd) or 1 (even), got {delta!r}")
        self.delta = delta
        self._text: list = [None, SENTINEL]  # 1-based; slot 0 unused
        self._rad = [0, 0, 0]  # zero-filled; kept addressable through n + 1
        self._n = 1
        self._i = 2  # makes the first add_letter skip the loop cleanly
        self._loop_iters = 0

    def add_letter(self, c: object) -> None:
        """Append one symbol and re-establish the suffix-palindrome center.

        The candidate center only moves rightward; each inner-loop pass either
        finishes the update or advances it, which is what keeps the total loop
        work over any n symbols bounded by a small multiple of n.
        """
        if c is SENTINEL:
            raise ValueError("SENTINEL is reserved and cannot be added as input")
        text, rad, delta = self._text, self._rad, self.delta
        n, i = self._n, self._i
        s = i - rad[i] + delta  # start of the maximal suffix-palindrome so far
        text.append(c)  # text[n + 1] = c
        rad.append(0)  # keeps index n + 2 valid for the next call
        iters = 0
        while i + rad[i] <= n:
            iters += 1
            r = rad[s + n - i - delta]  # mirrored center inside the suffix-palindrome
            if r > n - i:
                r = n - i
            rad[i] = r
            if i + r == n and text[i - r - 1 + delta] == c:
                rad[i] = r + 1  # the suffix-palindrome extends over c
                break
            i += 1
        self._i = i
        self._n = n + 1
        self._loop_iters += iters

    def max_pal(self) -> int:
        """Length of the maximal tracked-parity palindromic suffix.

        Only meaningful once at least one symbol has been added; querying the
        pristine structure is a misuse and raises.
        """
        if self._n < 2:
            raise RuntimeError("max_pal() queried before any symbol was added")
        return 2 * self._rad[self._i] + 1 - self.delta

    @property
    def loop_iterations(self) -> int:
        """Total inner-loop passes since construction (monotone)."""
        return self._loop_iters

    @property
    def size(self) -> int:
        """Number of input symbols consumed (sentinel excluded)."""
        return self._n - 1

    @property
    def center(self) -> int:
        """Text position of the current suffix-palindrome center candidate."""
        return self._i

    def radii(self) -> tuple[int, ...]:
        """Radii for text positions 1..n (position 1 is the sentinel).

        Entries at or right of :attr:`center` are work in progress; everything
        left of it is final.
        """
        return tuple(self._rad[1:self._n + 1])
