"""Morphism representation, application/iteration and structural predicates.

A morphism is given by its images on single symbols and extends to words by
concatenation.  Injectivity here is the strong, free-monoid sense: phi(u) !=
phi(v) for all distinct source words u, v — equivalently, the image set is a
uniquely decodable code.  The decision procedure is the classical dangling-
suffix test (Sardinas–Patterson), run as a breadth-first search so that a
shortest witness pair can be reconstructed when the test fails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import AlphabetMismatchError
from .words import Alphabet, Word

#: Separator conventions of the textual morphism format, e.g. "a->ab;b->a".
#: An empty image is written "a->." with "." denoting the empty word.
_ARROW = "->"
_SEP = ";"
_EPSILON = "."


@dataclass(frozen=True)
class ImageSet:
    """Distinct images of a morphism plus the total image length ``m``.

    ``total_length`` sums ``|phi(c)|`` over all source symbols, so duplicate
    images still contribute once per symbol.
    """

    images: tuple[Word, ...]
    total_length: int


@dataclass(frozen=True)
class Morphism:
    """A total map from source symbols to image words over the target alphabet."""

    source: Alphabet
    target: Alphabet
    images: tuple[tuple[str, str], ...]  # (source symbol, image text), source order

    def __post_init__(self):
        given = [c for c, _ in self.images]
        if tuple(given) != self.source.symbols:
            raise ValueError(
                f"images must be given for exactly the source symbols {self.source.symbols!r}"
            )
        for c, img in self.images:
            if not set(img) <= self.target._symbol_set:
                raise ValueError(f"image of {c!r} uses symbols outside the target alphabet")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_map(
        cls,
        images: Mapping[str, str],
        source: Alphabet | None = None,
        target: Alphabet | None = None,
    ) -> "Morphism":
        if source is None:
            source = Alphabet(tuple(images))
        if target is None:
            chars = sorted(set("".join(images.values())))
            target = Alphabet(tuple(chars)) if chars else source
        return cls(source, target, tuple((c, images[c]) for c in source.symbols))

    @classmethod
    def parse(cls, spec: str, target: Alphabet | None = None) -> "Morphism":
        """Parse the textual format ``a->ab;b->a`` (whitespace ignored)."""
        compact = "".join(spec.split())
        images: dict[str, str] = {}
        order: list[str] = []
        for part in compact.split(_SEP):
            if not part:
                continue
            if _ARROW not in part:
                raise ValueError(f"malformed morphism rule {part!r}")
            sym, img = part.split(_ARROW, 1)
            if len(sym) != 1:
                raise ValueError(f"source symbol must be a single character, got {sym!r}")
            if sym in images:
                raise ValueError(f"duplicate rule for symbol {sym!r}")
            images[sym] = "" if img == _EPSILON else img
            order.append(sym)
        if not images:
            raise ValueError("empty morphism specification")
        source = Alphabet(tuple(order))
        return cls.from_map(images, source=source, target=target)

    def format(self) -> str:
        """Inverse of :meth:`parse`."""
        return _SEP.join(f"{c}{_ARROW}{img or _EPSILON}" for c, img in self.images)

    # -- basic accessors ------------------------------------------------------

    @cached_property
    def image_map(self) -> dict[str, str]:
        return dict(self.images)

    def image(self, c: str) -> Word:
        return Word(self.image_map[c], self.target)

    @cached_property
    def image_set(self) -> ImageSet:
        seen: list[Word] = []
        for _, img in self.images:
            w = Word(img, self.target)
            if w not in seen:
                seen.append(w)
        return ImageSet(tuple(seen), sum(len(img) for _, img in self.images))

    @cached_property
    def image_texts(self) -> tuple[str, ...]:
        """Distinct image texts, in source-symbol order of first appearance."""
        return tuple(w.text for w in self.image_set.images)

    @cached_property
    def proper_image_prefixes(self) -> frozenset[str]:
        """Nonempty proper prefixes of images."""
        return frozenset(img[:k] for img in self.image_texts for k in range(1, len(img)))

    @cached_property
    def proper_image_suffixes(self) -> frozenset[str]:
        """Nonempty proper suffixes of images."""
        return frozenset(img[k:] for img in self.image_texts for k in range(1, len(img)))

    # -- application ----------------------------------------------------------

    def apply_text(self, text: str) -> str:
        try:
            return "".join(map(self.image_map.__getitem__, text))
        except KeyError as exc:
            raise AlphabetMismatchError(f"symbol {exc.args[0]!r} has no image") from None

    def apply(self, u: Word) -> Word:
        return Word(self.apply_text(u.text), self.target)

    @cached_property
    def is_endomorphism(self) -> bool:
        """True when every image symbol has an image itself, so the morphism
        can be iterated."""
        return all(set(img) <= self.source._symbol_set for _, img in self.images)

    def iterate(self, u: Word, k: int) -> Word:
        if k < 0:
            raise ValueError("iteration count must be >= 0")
        if k == 0:
            return u
        if k >= 2 and not self.is_endomorphism:
            raise ValueError("iterating k >= 2 requires image symbols to map into the source")
        text = u.text
        for _ in range(k):
            text = self.apply_text(text)
        return Word(text, self.target)

    def reversal(self) -> "Morphism":
        """The morphism mapping each symbol to the reversal of its image."""
        return Morphism(self.source, self.target, tuple((c, img[::-1]) for c, img in self.images))

    # -- structural predicates ------------------------------------------------

    @cached_property
    def is_non_erasing(self) -> bool:
        return all(img for _, img in self.images)

    @cached_property
    def uniform_length(self) -> int | None:
        lengths = {len(img) for _, img in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    @cached_property
    def injectivity_witness(self) -> tuple[Word, Word] | None:
        """None when injective; otherwise a canonical pair of distinct source
        words with equal images (minimal total length, lexicographically
        smallest pair)."""
        pair = _injectivity_witness(self.image_map, self.source.symbols)
        if pair is None:
            return None
        u, v = pair
        return Word(u, self.source), Word(v, self.source)

    @cached_property
    def is_injective(self) -> bool:
        return self.injectivity_witness is None


def _injectivity_witness(
    images: Mapping[str, str], symbols: Iterable[str]
) -> tuple[str, str] | None:
    """BFS over dangling suffixes; returns a shortest-total-length witness
    pair of distinct source words with equal images, or None if injective.

    A state (s, ahead, behind) means images(ahead) == images(behind) + s and
    the words ahead/behind start with different symbols.  Appending a symbol
    to the behind side either consumes part of s, overshoots (the roles
    swap), or mismatches.
    """
    symbols = tuple(symbols)
    completions: list[tuple[str, str]] = []
    queue: deque[tuple[str, tuple[str, ...], tuple[str, ...]]] = deque()
    seen: set[str] = set()

    for c in symbols:
        for c2 in symbols:
            if c == c2:
                continue
            ic, ic2 = images[c], images[c2]
            if ic2.startswith(ic):
                rest = ic2[len(ic):]
                if not rest:
                    completions.append((c2, c))
                else:
                    queue.append((rest, (c2,), (c,)))
    if completions:
        return min((min(u, v), max(u, v)) for u, v in completions)

    while queue:
        level = len(queue)
        for _ in range(level):
            suffix, ahead, behind = queue.popleft()
            for c in symbols:
                t = images[c]
                if t == suffix:
                    completions.append(("".join(ahead), "".join(behind) + c))
                elif suffix.startswith(t):
                    state = suffix[len(t):]
                    if state not in seen:
                        seen.add(state)
                        queue.append((state, ahead, behind + (c,)))
                elif t.startswith(suffix):
                    state = t[len(suffix):]
                    if state not in seen:
                        seen.add(state)
                        queue.append((state, behind + (c,), ahead))
        if completions:
            return min((min(u, v), max(u, v)) for u, v in completions)
    return None


# -- function-style aliases ---------------------------------------------------

def apply(phi: Morphism, u: Word) -> Word:
    return phi.apply(u)


def iterate(phi: Morphism, u: Word, k: int) -> Word:
    return phi.iterate(u, k)


def is_injective(phi: Morphism) -> bool:
    return phi.is_injective


def reversal_morphism(phi: Morphism) -> Morphism:
    return phi.reversal()


def is_non_erasing(phi: Morphism) -> bool:
    return phi.is_non_erasing


def uniform_length(phi: Morphism) -> int | None:
    return phi.uniform_length


def parse_morphism(spec: str, target: Alphabet | None = None) -> Morphism:
    return Morphism.parse(spec, target=target)
