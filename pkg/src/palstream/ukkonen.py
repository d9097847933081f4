"""Online suffix tree (Ukkonen's construction) with depth-annotated nodes.

The tree grows one symbol at a time and, after every symbol, can report the
length of the shortest suffix that occurs exactly once in the text so far.
That value is read directly off the active point: the active point always
spells the longest suffix occurring at least twice, so one symbol more is the
shortest unique suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = ["ChildStorageMode", "PerfCounters", "Node", "OnlineSuffixTree"]


class ChildStorageMode(str, Enum):
    """How the children of a node are stored and searched."""

    #: Sorted list + binary search; symbols need a total order.
    ORDERED = "ordered"
    #: Flat list + linear scan; symbols only need equality.
    UNORDERED = "unordered"


@dataclass(frozen=True, slots=True)
class PerfCounters:
    """Monotone structural totals, used to check the linear-size bounds."""

    nodes: int  # explicit nodes, root included
    leaves: int
    suffix_link_hops: int
    child_probes: int  # symbol comparisons spent locating children


class Node:
    """Suffix tree node.

    The incoming edge is labelled by ``text[start..end]`` (0-based inclusive);
    ``end is None`` marks an open leaf edge that always reaches the current
    text end.  The root has no incoming edge (``start is None``).  ``depth``
    is the length of the string the node stands for; leaves keep ``None``
    because their string grows with the text.
    """

    __slots__ = ("id", "start", "end", "suffix_link", "depth",
                 "child_symbols", "child_nodes")

    def __init__(self, node_id: int, start: int | None, end: int | None,
                 depth: int | None) -> None:
        self.id = node_id
        self.start = start
        self.end = end
        self.suffix_link: Node | None = None
        self.depth = depth
        self.child_symbols: list = []
        self.child_nodes: list[Node] = []

    def is_leaf(self) -> bool:
        return self.start is not None and self.end is None


class OnlineSuffixTree:
    """Implicit suffix tree over a growing symbol sequence.

    After each :meth:`add_letter` the tree is the compressed trie of all
    suffixes of the text consumed so far.  Edge labels are position pairs into
    the shared text, never copied strings.  No terminator symbol is ever
    appended; queries run against the implicit tree.

    Single-writer: one mutator at a time; queries must not overlap a mutation.
    """

    def __init__(self, mode: ChildStorageMode | str = ChildStorageMode.ORDERED) -> None:
        self.mode = ChildStorageMode(mode)
        self.text: list = []
        self._next_id = 0
        self.root = self._new_node(None, None, depth=0)
        # Active point: the longest suffix of the text that occurs at least
        # twice is active_node's string plus active_length symbols starting
        # at text[active_edge].
        self.active_node = self.root
        self.active_edge = 0
        self.active_length = 0
        self.remainder = 0  # suffixes not yet ending at a leaf
        self._leaves = 0
        self._slink_hops = 0
        self._probes = 0

    # -- node/child plumbing -------------------------------------------------

    def _new_node(self, start: int | None, end: int | None,
                  depth: int | None) -> Node:
        node = Node(self._next_id, start, end, depth)
        self._next_id += 1
        return node

    def _locate(self, node: Node, sym) -> tuple[int, Node | None]:
        """Find ``sym`` among ``node``'s children: (slot, child or None).

        Probe counting mirrors the comparison cost of the storage mode: one
        per binary-search step plus a final equality test when ordered, one
        per element touched by the linear scan when unordered.  The unordered
        scan itself runs through ``list.index`` so the count is arithmetic,
        not a Python-level loop.
        """
        syms = node.child_symbols
        if self.mode is ChildStorageMode.ORDERED:
            lo, hi = 0, len(syms)
            probes = 1
            while lo < hi:
                probes += 1
                mid = (lo + hi) // 2
                if syms[mid] < sym:
                    lo = mid + 1
                else:
                    hi = mid
            self._probes += probes
            if lo < len(syms) and syms[lo] == sym:
                return lo, node.child_nodes[lo]
            return lo, None
        try:
            slot = syms.index(sym)
        except ValueError:
            self._probes += len(syms)
            return len(syms), None
        self._probes += slot + 1
        return slot, node.child_nodes[slot]

    def _insert_child(self, node: Node, slot: int, sym, child: Node) -> None:
        node.child_symbols.insert(slot, sym)
        node.child_nodes.insert(slot, child)

    def _attach(self, node: Node, sym, child: Node) -> None:
        slot, existing = self._locate(node, sym)
        if existing is not None:
            raise AssertionError("duplicate edge symbol on one node")
        self._insert_child(node, slot, sym, child)

    # -- construction ----------------------------------------------------------

    def add_letter(self, c) -> None:
        """Extend the text by one symbol and run one construction phase.

        Repeatedly inserts the pending suffixes: a suffix that cannot be
        extended gets a new leaf (splitting an edge when the divergence is
        mid-edge), then the active point moves to the next shorter suffix via
        a suffix link or a re-anchored root edge.  As soon as the new symbol
        is already present below the active point, every shorter suffix is
        present too and the phase stops.
        """
        self.text.append(c)
        text = self.text
        pos = len(text) - 1
        self.remainder += 1
        last_internal: Node | None = None
        while self.remainder > 0:
            if self.active_length == 0:
                self.active_edge = pos
            slot, child = self._locate(self.active_node, text[self.active_edge])
            if child is None:
                # Pending suffix ends exactly at active_node: grow a leaf.
                leaf = self._new_node(pos, None, depth=None)
                self._leaves += 1
                self._insert_child(self.active_node, slot, text[self.active_edge], leaf)
                if last_internal is not None:
                    last_internal.suffix_link = self.active_node
                    last_internal = None
            else:
                edge_end = child.end if child.end is not None else pos
                edge_len = edge_end - child.start + 1
                if self.active_length >= edge_len:
                    # Skip-count walk-down; retry the same suffix below child.
                    self.active_node = child
                    self.active_edge += edge_len
                    self.active_length -= edge_len
                    continue
                if text[child.start + self.active_length] == c:
                    # Suffix already present: advance the active point, stop.
                    self.active_length += 1
                    if last_internal is not None:
                        last_internal.suffix_link = self.active_node
                        last_internal = None
                    break
                # Mid-edge divergence: split and hang a new leaf.
                split = self._new_node(child.start, child.start + self.active_length - 1,
                                       depth=self.active_node.depth + self.active_length)
                self.active_node.child_nodes[slot] = split
                child.start += self.active_length
                self._attach(split, text[child.start], child)
                leaf = self._new_node(pos, None, depth=None)
                self._leaves += 1
                self._attach(split, c, leaf)
                if last_internal is not None:
                    last_internal.suffix_link = split
                last_internal = split
            self.remainder -= 1
            if self.active_node is self.root and self.active_length > 0:
                self.active_length -= 1
                self.active_edge = pos - self.remainder + 1
            elif self.active_node is not self.root:
                self.active_node = self.active_node.suffix_link or self.root
                self._slink_hops += 1
        self._canonicalize(pos)
        assert self._next_id <= 2 * len(text)  # linear-size bound

    def _canonicalize(self, pos: int) -> None:
        # Keep 0 <= active_length < |active edge|, descending when the edge
        # is fully consumed, so depth + active_length is read off a vertex.
        while self.active_length > 0:
            _, child = self._locate(self.active_node, self.text[self.active_edge])
            edge_end = child.end if child.end is not None else pos
            edge_len = edge_end - child.start + 1
            if self.active_length < edge_len:
                break
            self.active_node = child
            self.active_edge += edge_len
            self.active_length -= edge_len

    # -- queries ---------------------------------------------------------------

    def min_unique_suff(self) -> int:
        """Length of the shortest suffix occurring exactly once in the text.

        One more symbol than the longest suffix occurring at least twice,
        which is what the active point spells.  Raises on an empty text.
        """
        if not self.text:
            raise RuntimeError("min_unique_suff() queried on an empty text")
        return self.active_node.depth + self.active_length + 1

    @property
    def node_count(self) -> int:
        """Explicit nodes created so far, root included."""
        return self._next_id

    def counters(self) -> PerfCounters:
        return PerfCounters(nodes=self._next_id, leaves=self._leaves,
                            suffix_link_hops=self._slink_hops,
                            child_probes=self._probes)

    def dump(self) -> str:
        """Adjacency listing for debugging and golden tests.

        One line per node in creation order: ``id parent start end depth
        slink`` with 1-based inclusive label positions; ``-`` stands for an
        absent field (root label, open leaf end, missing suffix link).
        """
        n = len(self.text)
        rows: dict[int, str] = {}
        stack: list[tuple[Node, Node | None, int]] = [(self.root, None, 0)]
        while stack:
            node, parent, parent_depth = stack.pop()
            if node.start is None:
                start = end = "-"
                depth = node.depth
            elif node.end is None:
                start, end = node.start + 1, "-"
                depth = parent_depth + (n - node.start)
            else:
                start, end = node.start + 1, node.end + 1
                depth = node.depth
            slink = node.suffix_link.id if node.suffix_link is not None else "-"
            pid = parent.id if parent is not None else "-"
            rows[node.id] = f"{node.id} {pid} {start} {end} {depth} {slink}"
            for child in node.child_nodes:
                stack.append((child, node, depth))
        return "\n".join(rows[i] for i in sorted(rows))
