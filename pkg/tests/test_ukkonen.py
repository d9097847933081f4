"""Tests for the online suffix tree and its shortest-unique-suffix queries."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palstream import ChildStorageMode, OnlineSuffixTree
from palstream.oracle import naive_min_unique_suffix

REFERENCE_WORD = "abadaadcaa"
EXPECTED_MIN_UNIQUE = [1, 1, 2, 1, 2, 2, 3, 1, 2, 3]

# hand-built tree for "aab": the first two symbols share the root edge that
# the third phase splits, leaving one internal node linked back to the root
EXPECTED_DUMP_AAB = "\n".join([
    "0 - - - 0 -",
    "1 2 2 - 3 -",
    "2 0 1 1 1 0",
    "3 2 3 - 2 -",
    "4 0 3 - 1 -",
])


def build(w, mode=ChildStorageMode.ORDERED):
    tree = OnlineSuffixTree(mode)
    values = []
    for c in w:
        tree.add_letter(c)
        values.append(tree.min_unique_suff())
    return tree, values


def all_strings(alphabet, max_len):
    for length in range(1, max_len + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)


def spell_from_root(tree, pattern):
    """True iff pattern labels a root-to-(node or mid-edge) path."""
    node = tree.root
    i = 0
    end_of_text = len(tree.text) - 1
    while i < len(pattern):
        try:
            slot = node.child_symbols.index(pattern[i])
        except ValueError:
            return False
        child = node.child_nodes[slot]
        end = child.end if child.end is not None else end_of_text
        for at in range(child.start, end + 1):
            if i == len(pattern):
                return True
            if tree.text[at] != pattern[i]:
                return False
            i += 1
        node = child
    return True


def leaf_strings(tree):
    """Set of strings labelling root-to-leaf paths (leaf edges run to the
    text end)."""
    out = set()
    end_of_text = len(tree.text) - 1
    stack = [(tree.root, ())]
    while stack:
        node, prefix = stack.pop()
        if node.is_leaf():
            out.add(prefix)
            continue
        for child in node.child_nodes:
            end = child.end if child.end is not None else end_of_text
            label = tuple(tree.text[child.start:end + 1])
            stack.append((child, prefix + label))
    return out


class TestConstruction:
    def test_empty_tree_has_only_root(self):
        tree = OnlineSuffixTree()
        assert tree.node_count == 1
        assert tree.counters().leaves == 0

    def test_query_on_empty_raises(self):
        with pytest.raises(RuntimeError):
            OnlineSuffixTree().min_unique_suff()

    def test_single_symbol(self):
        tree, values = build("a")
        assert values == [1]
        assert tree.counters().leaves == 1

    def test_three_distinct_symbols_three_leaves(self):
        tree, _ = build("abc")
        assert tree.counters().leaves == 3

    def test_mode_accepts_plain_strings(self):
        assert OnlineSuffixTree("unordered").mode is ChildStorageMode.UNORDERED


class TestMinUniqueSuffix:
    def test_reference_word(self):
        _, values = build(REFERENCE_WORD)
        assert values == EXPECTED_MIN_UNIQUE

    def test_uniform(self):
        _, values = build("aaa")
        assert values == [1, 2, 3]

    def test_two_distinct(self):
        _, values = build("ab")
        assert values == [1, 1]

    def test_exhaustive_binary(self):
        for w in all_strings("ab", 10):
            _, values = build(w)
            expected = [naive_min_unique_suffix(w[:k])
                        for k in range(1, len(w) + 1)]
            assert values == expected, w

    def test_exhaustive_ternary(self):
        for w in all_strings("abc", 6):
            _, values = build(w)
            expected = [naive_min_unique_suffix(w[:k])
                        for k in range(1, len(w) + 1)]
            assert values == expected, w

    @settings(deadline=None)
    @given(st.text(alphabet="abc", min_size=1, max_size=60))
    def test_random_strings(self, w):
        _, values = build(w)
        expected = [naive_min_unique_suffix(w[:k])
                    for k in range(1, len(w) + 1)]
        assert values == expected

    @settings(deadline=None)
    @given(st.lists(st.integers(0, 4), min_size=1, max_size=40))
    def test_integer_symbols(self, symbols):
        _, values = build(symbols)
        expected = [naive_min_unique_suffix(symbols[:k])
                    for k in range(1, len(symbols) + 1)]
        assert values == expected


class TestStructure:
    def test_dump_golden(self):
        tree, _ = build("aab")
        assert tree.dump() == EXPECTED_DUMP_AAB

    def test_every_suffix_is_spelled(self):
        for w in all_strings("ab", 8):
            tree, _ = build(w)
            for start in range(len(w)):
                assert spell_from_root(tree, w[start:]), (w, start)

    def test_leaves_are_exactly_unique_suffixes(self):
        # a suffix reaches a leaf iff it occurs exactly once in the text
        for w in all_strings("ab", 8):
            tree, _ = build(w)
            unique = set()
            for start in range(len(w)):
                suffix = w[start:]
                occurrences = sum(
                    1 for at in range(len(w) - len(suffix) + 1)
                    if w[at:at + len(suffix)] == suffix)
                if occurrences == 1:
                    unique.add(tuple(suffix))
            assert leaf_strings(tree) == unique, w

    def test_edge_symbols_distinct_and_ordered(self):
        tree, _ = build("abaabbabaabab")
        stack = [tree.root]
        while stack:
            node = stack.pop()
            syms = node.child_symbols
            assert len(set(syms)) == len(syms)
            assert syms == sorted(syms)  # ordered mode keeps them sorted
            stack.extend(node.child_nodes)

    def test_internal_depths_and_suffix_links(self):
        for w in all_strings("ab", 9):
            tree, _ = build(w)
            end_of_text = len(tree.text) - 1
            stack = [(tree.root, 0, ())]
            strings = {(): tree.root}
            while stack:
                node, depth, path = stack.pop()
                for child in node.child_nodes:
                    end = child.end if child.end is not None else end_of_text
                    label = tuple(tree.text[child.start:end + 1])
                    child_path = path + label
                    if not child.is_leaf():
                        assert child.depth == depth + len(label), w
                        strings[child_path] = child
                    stack.append((child, depth + len(label), child_path))
            for path, node in strings.items():
                if node is tree.root:
                    continue
                # internal nodes link to their longest proper suffix
                assert node.suffix_link is not None, (w, path)
                assert node.suffix_link is strings[path[1:]], (w, path)


class TestBoundsAndCounters:
    def test_node_count_linear(self):
        rng = random.Random(9)
        for sigma in (1, 2, 4, 26):
            letters = "abcdefghijklmnopqrstuvwxyz"[:sigma]
            w = "".join(rng.choice(letters) for _ in range(2000))
            tree, _ = build(w)
            assert tree.node_count <= 2 * len(w)

    def test_counters_monotone(self):
        tree = OnlineSuffixTree()
        previous = tree.counters()
        for c in "abaabbbaabab":
            tree.add_letter(c)
            current = tree.counters()
            assert current.nodes >= previous.nodes
            assert current.leaves >= previous.leaves
            assert current.suffix_link_hops >= previous.suffix_link_hops
            assert current.child_probes >= previous.child_probes
            previous = current

    def test_unordered_probes_count_scan_length(self):
        # locating the last of k children costs k equality probes
        tree = OnlineSuffixTree(ChildStorageMode.UNORDERED)
        for c in "abcd":
            tree.add_letter(c)
        assert tree.counters().child_probes > 0


class TestModeEquivalence:
    def test_identical_answers_and_shape(self):
        rng = random.Random(13)
        for _ in range(30):
            w = "".join(rng.choice("abcd") for _ in range(rng.randint(1, 120)))
            t_ord, v_ord = build(w, ChildStorageMode.ORDERED)
            t_uno, v_uno = build(w, ChildStorageMode.UNORDERED)
            assert v_ord == v_uno
            assert t_ord.dump() == t_uno.dump()
