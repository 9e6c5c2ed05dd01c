"""Fibonacci and Thue-Morse word generators and the named morphisms.

Index conventions: F_1 = b, F_2 = a, F_i = F_{i-1} . F_{i-2}; tm_1 = a,
tm_i = tm_{i-1} . flip(tm_{i-1}).  Generation is by recursion (linear in the
output length); morphism iteration is kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .morphisms import Morphism
from .words import BINARY, Word, flip, occ_count, occurrences

#: Default index caps; f_30 = 832040 and 2^21 symbols are desk scale.
MAX_FIBONACCI_ORDER = 30
MAX_THUE_MORSE_ORDER = 22


@dataclass(frozen=True)
class NamedMorphism:
    name: str
    morphism: Morphism


def _named(name: str, spec: str) -> NamedMorphism:
    return NamedMorphism(name, Morphism.parse(spec))


NAMED_MORPHISMS: dict[str, NamedMorphism] = {
    nm.name: nm
    for nm in (
        _named("fibonacci", "a->ab;b->a"),
        _named("thue-morse", "a->ab;b->ba"),
        _named("variant-thue-morse", "a->abc;b->ac;c->b"),
        _named("mephisto-waltz", "a->aab;b->bba"),
        _named("thue-morse-morse", "a->abb;b->baa"),
        _named("last-nonzero-digit", "a->aba;b->abb"),
    )
}

FIBONACCI: Morphism = NAMED_MORPHISMS["fibonacci"].morphism
THUE_MORSE: Morphism = NAMED_MORPHISMS["thue-morse"].morphism


def _check_order(i: int, max_order: int, family: str) -> None:
    if i < 1:
        raise ValueError(f"{family} index must be >= 1, got {i}")
    if i > max_order:
        raise ValueError(f"{family} index {i} exceeds the cap {max_order}")


@lru_cache(maxsize=None)
def _fibonacci_text(i: int) -> str:
    if i == 1:
        return "b"
    if i == 2:
        return "a"
    return _fibonacci_text(i - 1) + _fibonacci_text(i - 2)


def fibonacci_word(i: int, max_order: int = MAX_FIBONACCI_ORDER) -> Word:
    """The Fibonacci word F_i over {a, b}."""
    _check_order(i, max_order, "Fibonacci")
    return Word(_fibonacci_text(i), BINARY)


def fibonacci_number(i: int) -> int:
    """f_i = |F_i|; f_1 = f_2 = 1."""
    if i < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {i}")
    a, b = 1, 1
    for _ in range(i - 2):
        a, b = b, a + b
    return b


@lru_cache(maxsize=None)
def _thue_morse_text(i: int) -> str:
    if i == 1:
        return "a"
    prev = _thue_morse_text(i - 1)
    return prev + flip(Word(prev, BINARY)).text


def thue_morse_word(i: int, max_order: int = MAX_THUE_MORSE_ORDER) -> Word:
    """The Thue-Morse word tm_i over {a, b}, |tm_i| = 2^(i-1)."""
    _check_order(i, max_order, "Thue-Morse")
    return Word(_thue_morse_text(i), BINARY)


def fibonacci_G(i: int) -> Word:
    """G_i = F_i with its last two symbols removed; defined for i >= 3."""
    if i < 3:
        raise ValueError(f"G_i requires i >= 3, got {i}")
    return Word(_fibonacci_text(i)[:-2], BINARY)


def fibonacci_delta(i: int) -> Word:
    """Delta_i = ba when i is even, ab when i is odd."""
    return Word("ba" if i % 2 == 0 else "ab", BINARY)


def fibonacci_alpha(i: int) -> Word:
    """alpha_i = a when i is even, b when i is odd."""
    return Word("a" if i % 2 == 0 else "b", BINARY)


def extensions(w: Word) -> set[Word]:
    """The four one-symbol flankings {a.w.a, a.w.b, b.w.a, b.w.b}."""
    if not w.alphabet.is_binary:
        raise ValueError("extensions are defined over a binary alphabet")
    a, b = w.alphabet.symbols
    return {Word(l + w.text + r, w.alphabet) for l in (a, b) for r in (a, b)}


@dataclass(frozen=True)
class StructuralReport:
    i_max: int
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures


def structural_checks(i_max: int) -> StructuralReport:
    """Check the classic Fibonacci-word facts for 3 <= i <= i_max:
    no aaa or bb factor, F_i = G_i . Delta_i, and for i >= 7 that G_{i-1}
    occurs in F_i exactly at positions 1 and f_{i-2} + 1."""
    if i_max < 7:
        raise ValueError(f"structural checks need i_max >= 7, got {i_max}")
    failures: list[str] = []
    aaa, bb = Word("aaa"), Word("bb")
    for i in range(3, i_max + 1):
        f_i = fibonacci_word(i)
        if occ_count(aaa, f_i):
            failures.append(f"aaa occurs in F_{i}")
        if occ_count(bb, f_i):
            failures.append(f"bb occurs in F_{i}")
        if (fibonacci_G(i) + fibonacci_delta(i)).text != f_i.text:
            failures.append(f"F_{i} != G_{i} . Delta_{i}")
        if i >= 7:
            got = tuple(occurrences(fibonacci_G(i - 1), f_i))
            want = (1, fibonacci_number(i - 2) + 1)
            if got != want:
                failures.append(f"Occ(G_{i - 1}, F_{i}) = {got}, expected {want}")
    return StructuralReport(i_max, tuple(failures))
