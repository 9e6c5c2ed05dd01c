"""Brute-force enumerators for image, interfered and circular factorizations.

These are the independent ground truth against which the linear-time
interference decision is certified.  Everything here works by direct
definition: candidate cuts are enumerated exhaustively and middles are
decomposed by a transparent prefix DP over the source symbols.  Costs are
exponential in principle, so enumerations carry an explicit budget and fail
loudly instead of truncating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceededError, NonInjectiveMorphismError
from .interference import INTERFERED_FACTORIZATION, InterferenceWitness
from .morphisms import Morphism
from .words import Word

#: Environment variable overriding the factorization-count budget.
BUDGET_ENV_VAR = "MORPHLAB_BUDGET"


@dataclass(frozen=True)
class EnumerationBudget:
    max_word_length: int = 64
    max_factorizations: int = 100_000


def default_budget() -> EnumerationBudget:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        return EnumerationBudget(max_factorizations=int(raw))
    return EnumerationBudget()


@dataclass(frozen=True)
class CircularFactorization:
    """w = q . r . p with p nonempty and p . q a single image (of
    ``split_symbol``); r is spelled as a sequence of source symbols."""

    q: str
    r_symbols: tuple[str, ...]
    p: str
    split_symbol: str


@dataclass(frozen=True)
class RecognizabilityDecision:
    recognizable: bool
    offending_rotation: Word | None = None
    factorization_count: int | None = None

    def __bool__(self) -> bool:
        return self.recognizable


def _check_budget(text: str, budget: EnumerationBudget) -> None:
    if len(text) > budget.max_word_length:
        raise BudgetExceededError(
            f"word length {len(text)} exceeds enumeration budget {budget.max_word_length}"
        )


def _decomposition_counts(text: str, images, start: int) -> list[int]:
    """counts[j] = number of symbol sequences spelling text[start:j]."""
    n = len(text)
    counts = [0] * (n + 1)
    counts[start] = 1
    for i in range(start, n + 1):
        c = counts[i]
        if c:
            for _sym, img in images:
                if img and text.startswith(img, i):
                    counts[i + len(img)] += c
    return counts


def _decompositions(text: str, images, start: int, end: int, memo) -> list[tuple[str, ...]]:
    """All symbol sequences spelling text[start:end]."""
    if start in memo:
        return memo[start]
    if start == end:
        memo[start] = [()]
        return memo[start]
    out: list[tuple[str, ...]] = []
    for sym, img in images:
        if img and start + len(img) <= end and text.startswith(img, start):
            for tail in _decompositions(text, images, start + len(img), end, memo):
                out.append((sym,) + tail)
    memo[start] = out
    return out


def count_image_factorizations(phi: Morphism, w: Word | str) -> int:
    text = str(w)
    return _decomposition_counts(text, phi.images, 0)[len(text)]


def enumerate_image_factorizations(
    phi: Morphism, w: Word | str, budget: EnumerationBudget | None = None
) -> list[tuple[str, ...]]:
    """All source-symbol sequences whose images concatenate to w.

    The empty word yields the single empty sequence.
    """
    budget = budget or default_budget()
    text = str(w)
    _check_budget(text, budget)
    total = count_image_factorizations(phi, text)
    if total > budget.max_factorizations:
        raise BudgetExceededError(f"{total} factorizations exceed the enumeration budget")
    return _decompositions(text, phi.images, 0, len(text), {})


def enumerate_interfered_factorizations(
    phi: Morphism, w: Word | str, budget: EnumerationBudget | None = None
) -> list[InterferenceWitness]:
    """All interfered factorizations x . y . z of w, by exhaustive cut
    enumeration over proper image suffixes x and proper image prefixes z."""
    budget = budget or default_budget()
    text = str(w)
    if not text:
        raise ValueError("interfered factorizations are defined for nonempty words")
    _check_budget(text, budget)
    n = len(text)
    x_cands = [""] + sorted(
        (s for s in phi.proper_image_suffixes if text.startswith(s)), key=len
    )
    z_cands = [""] + sorted(
        (p for p in phi.proper_image_prefixes if text.endswith(p)), key=len
    )
    out: list[InterferenceWitness] = []
    for x in x_cands:
        for z in z_cands:
            if not x and not z:
                continue
            if len(x) + len(z) > n:
                continue
            end = n - len(z)
            # memo is per (x, z): decompositions depend on the end position
            for y_symbols in _decompositions(text, phi.images, len(x), end, {}):
                out.append(
                    InterferenceWitness(
                        INTERFERED_FACTORIZATION,
                        x=x,
                        y_symbols=y_symbols,
                        z=z,
                        donor_x=_donor(phi, x, suffix=True),
                        donor_z=_donor(phi, z, suffix=False),
                    )
                )
                if len(out) > budget.max_factorizations:
                    raise BudgetExceededError(
                        "interfered factorization count exceeds the enumeration budget"
                    )
    return out


def _donor(phi: Morphism, part: str, *, suffix: bool) -> str | None:
    if not part:
        return None
    if suffix:
        return min(c for c, img in phi.images if len(img) > len(part) and img.endswith(part))
    return min(c for c, img in phi.images if len(img) > len(part) and img.startswith(part))


def _splits(phi: Morphism):
    """All (p, q, symbol) with p . q = phi(symbol) and p nonempty."""
    for c, img in phi.images:
        for k in range(1, len(img) + 1):
            yield img[:k], img[k:], c


def enumerate_circular_factorizations(
    phi: Morphism, w: Word | str, budget: EnumerationBudget | None = None
) -> list[CircularFactorization]:
    budget = budget or default_budget()
    text = str(w)
    if not text:
        raise ValueError("circular factorizations are defined for nonempty words")
    _check_budget(text, budget)
    n = len(text)
    out: list[CircularFactorization] = []
    for p, q, c in _splits(phi):
        if len(p) + len(q) > n:
            continue
        if not (text.startswith(q) and text.endswith(p)):
            continue
        memo: dict[int, list[tuple[str, ...]]] = {}
        for r_symbols in _decompositions(text, phi.images, len(q), n - len(p), memo):
            out.append(CircularFactorization(q, r_symbols, p, c))
            if len(out) > budget.max_factorizations:
                raise BudgetExceededError(
                    "circular factorization count exceeds the enumeration budget"
                )
    return out


def count_circular_factorizations(phi: Morphism, w: Word | str) -> int:
    """Number of circular factorizations, via counting DP (no
    materialization), so long rotations stay polynomial."""
    text = str(w)
    n = len(text)
    counts_from: dict[int, list[int]] = {}
    total = 0
    for p, q, c in _splits(phi):
        if len(p) + len(q) > n:
            continue
        if not (text.startswith(q) and text.endswith(p)):
            continue
        start = len(q)
        if start not in counts_from:
            counts_from[start] = _decomposition_counts(text, phi.images, start)
        total += counts_from[start][n - len(p)]
    return total


def is_recognizable_on(phi: Morphism, u: Word) -> RecognizabilityDecision:
    """phi is recognizable on {u} iff every rotation of phi(u) has exactly
    one circular factorization.  On failure, reports the first offending
    rotation (in shift order) and its count."""
    if not phi.is_injective:
        raise NonInjectiveMorphismError(
            "recognizability is defined for injective morphisms only",
            witness=phi.injectivity_witness,
        )
    if len(u) == 0:
        raise ValueError("recognizability is defined for nonempty words")
    text = phi.apply_text(u.text)
    for i in range(len(text)):
        rot = text[i:] + text[:i]
        count = count_circular_factorizations(phi, rot)
        if count != 1:
            return RecognizabilityDecision(False, Word(rot, phi.target), count)
    return RecognizabilityDecision(True)


def brute_force_is_interference_free(phi: Morphism, u: Word) -> bool:
    """Independent oracle for the interference decision: direct definition
    check by cut enumeration plus reachability, no automaton involved."""
    if not phi.is_injective:
        raise NonInjectiveMorphismError(
            "interference-freeness is defined for injective morphisms only",
            witness=phi.injectivity_witness,
        )
    if len(u) == 0:
        raise ValueError("interference-freeness is defined for nonempty words")
    text = phi.apply_text(u.text)
    n = len(text)

    # inner image factor: strict interior occurrence in a single image
    for _c, img in phi.images:
        limit = len(img) - n - 1
        pos = img.find(text, 1)
        if 0 < pos <= limit:
            return False

    images = [img for _c, img in phi.images]
    x_lens = {0} | {len(s) for s in phi.proper_image_suffixes if text.startswith(s)}
    z_lens = {0} | {len(p) for p in phi.proper_image_prefixes if text.endswith(p)}

    def reachable(starts):
        reach = bytearray(n + 1)
        for s in starts:
            reach[s] = 1
        for i in range(min(starts), n + 1):
            if reach[i]:
                for img in images:
                    if text.startswith(img, i):
                        reach[i + len(img)] = 1
        return reach

    reach_any = reachable(x_lens)
    if any(q and q <= n and reach_any[n - q] for q in z_lens):
        return False
    positive = {p for p in x_lens if p}
    if positive and reachable(positive)[n]:
        return False
    return True
