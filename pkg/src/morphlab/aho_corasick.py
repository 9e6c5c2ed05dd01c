"""Aho-Corasick dictionary matching over the image set of a morphism.

The automaton is the classic goto/failure/output construction.  On top of
the plain match stream it exposes the three scan artifacts used by the
interference decision:

* ``S``       -- for each text position, the source symbols whose image
                 occurs there;
* ``P_pref``  -- positions i such that the prefix ``w[1..i]`` is a proper
                 suffix of some image (computed with the automaton built
                 over the reversed images, scanning the reversed text);
* ``P_suf``   -- positions i such that the suffix ``w[i..n]`` is a proper
                 prefix of some image (computed by walking failure links
                 from the final state; a node qualifies iff it is not a
                 leaf, and the walk stops at the root).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import ErasingImageError
from .morphisms import Morphism
from .words import Word


class _Node:
    __slots__ = ("children", "fail", "goto", "outputs", "depth")

    def __init__(self, depth: int):
        self.children: dict[str, _Node] = {}
        self.fail: _Node | None = None
        self.goto: dict[str, _Node] = {}
        self.outputs: list[tuple[str, int]] = []  # (pattern id, pattern length)
        self.depth = depth

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class ScanResult:
    """Scan artifacts for a text ``w`` of length ``n`` under a morphism.

    ``s`` is sparse: only positions with at least one matching image appear.
    ``occ_total`` is the total number of image occurrences in ``w``.
    """

    s: dict[int, tuple[str, ...]]
    p_pref: frozenset[int]
    p_suf: frozenset[int]
    occ_total: int


class DictionaryMatcher:
    """Multi-pattern matcher over a fixed dictionary; immutable after build."""

    def __init__(self, patterns: Sequence[tuple[str, str]]):
        if not patterns:
            raise ValueError("pattern set must be nonempty")
        self._patterns = tuple(patterns)
        self._root = _Node(0)
        alphabet: set[str] = set()
        for text, pid in self._patterns:
            if not text:
                raise ErasingImageError(f"empty pattern for id {pid!r}")
            alphabet.update(text)
            node = self._root
            for ch in text:
                nxt = node.children.get(ch)
                if nxt is None:
                    nxt = _Node(node.depth + 1)
                    node.children[ch] = nxt
                node = nxt
            node.outputs.append((pid, len(text)))
        self._alphabet = tuple(sorted(alphabet))
        self._build_links()

    @classmethod
    def build(cls, patterns: Sequence[tuple[Word | str, str]]) -> "DictionaryMatcher":
        return cls([(str(p), pid) for p, pid in patterns])

    @classmethod
    def for_morphism(cls, phi: Morphism) -> "DictionaryMatcher":
        return cls([(img, c) for c, img in phi.images])

    def _build_links(self) -> None:
        root = self._root
        root.fail = root
        for ch in self._alphabet:
            child = root.children.get(ch)
            root.goto[ch] = child if child is not None else root
            if child is not None:
                child.fail = root
        queue = list(root.children.values())
        while queue:
            nxt: list[_Node] = []
            for node in queue:
                # own outputs plus everything reachable through the failure link
                node.outputs = node.outputs + node.fail.outputs
                for ch in self._alphabet:
                    child = node.children.get(ch)
                    if child is None:
                        node.goto[ch] = node.fail.goto[ch]
                    else:
                        child.fail = node.fail.goto[ch]
                        node.goto[ch] = child
                        nxt.append(child)
            queue = nxt

    @cached_property
    def reversed_matcher(self) -> "DictionaryMatcher":
        """Matcher over the reversed patterns (same ids)."""
        return DictionaryMatcher([(p[::-1], pid) for p, pid in self._patterns])

    # -- scanning -------------------------------------------------------------

    def matches(self, text: str) -> tuple[list[tuple[int, int, str]], "_Node"]:
        """All pattern occurrences as (0-based start, length, id), in order of
        increasing end position, plus the final automaton state."""
        root = self._root
        node = root
        out: list[tuple[int, int, str]] = []
        append = out.append
        for j, ch in enumerate(text):
            node = node.goto.get(ch, root)  # symbols outside the dictionary reset to root
            if node.outputs:
                for pid, length in node.outputs:
                    append((j + 1 - length, length, pid))
        return out, node

    def boundary_positions(self, final: "_Node", n: int) -> list[int]:
        """Failure-link walk from the final state: 1-based positions i such
        that ``text[i..n]`` is a proper prefix of some pattern."""
        res = []
        q = final
        while q.depth:
            if q.children:  # not a leaf
                res.append(n - q.depth + 1)
            q = q.fail
        return res


@lru_cache(maxsize=4096)
def matcher_for(phi: Morphism) -> DictionaryMatcher:
    """Cached per-morphism matcher over the image set."""
    return DictionaryMatcher.for_morphism(phi)


def build(patterns: Sequence[tuple[Word | str, str]]) -> DictionaryMatcher:
    return DictionaryMatcher.build(patterns)


def scan(matcher: DictionaryMatcher, phi: Morphism, w: Word | str) -> ScanResult:
    """Compute S(w), P_pref(w) and P_suf(w) for ``w`` under ``phi``."""
    text = str(w)
    n = len(text)
    fwd_matches, final_f = matcher.matches(text)
    rev = matcher.reversed_matcher
    _, final_r = rev.matches(text[::-1])

    s: dict[int, list[str]] = {}
    for start0, _length, pid in fwd_matches:
        s.setdefault(start0 + 1, []).append(pid)
    s_sorted = {pos: tuple(sorted(ids)) for pos, ids in sorted(s.items())}

    p_suf = frozenset(matcher.boundary_positions(final_f, n))
    p_pref = frozenset(n - j + 1 for j in rev.boundary_positions(final_r, n))
    return ScanResult(s_sorted, p_pref, p_suf, len(fwd_matches))
