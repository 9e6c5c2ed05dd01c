"""Deciding interference-freeness of a morphism on a word.

An injective morphism phi interferes on u when phi(u) either

* admits an interfered image factorization x . y . z -- x a proper suffix of
  some image, y a concatenation of images, z a proper prefix of some image,
  with x . z nonempty -- or
* sits strictly inside a single image (touching neither end).

The decision runs two passes of a forward dynamic program over the match
stream of the Aho-Corasick automaton.  The first pass finds factorizations
with z nonempty; the mirrored pass (reversed images on the reversed text)
finds those with x nonempty.  The DP table C is indexed 0..n with C[j] = 1
iff the prefix w[1..j] splits as x . y; C[0] covers the x = y = empty base
case, positions in P_pref seed the nonempty-x cases, matches of images
propagate forward, and the word is factorizable iff C[j-1] holds for some
j in P_suf.  Instead of bits we propagate the minimal |x| that reaches each
position, which yields a canonical witness (smallest |x|, then leftmost
acceptance) by backtracking stored predecessors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aho_corasick import matcher_for
from .errors import ErasingImageError, NonInjectiveMorphismError
from .morphisms import Morphism
from .words import Word

_INF = 1 << 60

INTERFERED_FACTORIZATION = "interfered_factorization"
INNER_IMAGE_FACTOR = "inner_image_factor"


@dataclass(frozen=True)
class InterferenceWitness:
    """Evidence that phi is not interference-free on a word.

    For the factorization kind, ``x + phi(y_symbols) + z`` reassembles the
    image of the word; ``donor_x`` / ``donor_z`` name source symbols whose
    images contribute x and z.  For the inner kind, the image of the word
    occurs inside ``phi(host)`` starting at 1-based ``offset >= 2`` and
    ending strictly before the image's last position.
    """

    kind: str
    x: str = ""
    y_symbols: tuple[str, ...] = ()
    z: str = ""
    donor_x: str | None = None
    donor_z: str | None = None
    host: str | None = None
    offset: int | None = None

    def describe(self) -> str:
        if self.kind == INNER_IMAGE_FACTOR:
            return f"inner host={self.host} offset={self.offset}"
        y = "".join(self.y_symbols)
        return f"x={self.x or '.'} y={y or '.'} z={self.z or '.'}"


@dataclass(frozen=True)
class FactorizableTable:
    """Reachability table C[0..n]: C[j] = 1 iff w[1..j] = x . y."""

    bits: tuple[int, ...]


@dataclass(frozen=True)
class FactorizableResult:
    admits: bool
    x: str = ""
    y_symbols: tuple[str, ...] = ()
    z: str = ""
    table: FactorizableTable | None = None

    def __bool__(self) -> bool:
        return self.admits


@dataclass(frozen=True)
class InnerFactorResult:
    found: bool
    host: str | None = None
    offset: int | None = None  # 1-based start inside the host image

    def __bool__(self) -> bool:
        return self.found


@dataclass(frozen=True)
class InterferenceDecision:
    interference_free: bool
    witness: InterferenceWitness | None = None
    injectivity_overridden: bool = False

    def __bool__(self) -> bool:
        return self.interference_free


@dataclass(frozen=True)
class StrongInterferenceDecision:
    interference_free: bool
    failing_symbol: str | None = None
    witness: InterferenceWitness | None = None

    def __bool__(self) -> bool:
        return self.interference_free


def _require_injective(phi: Morphism, allow_non_injective: bool) -> bool:
    """Returns True when the injectivity precondition was overridden."""
    if phi.is_injective:
        return False
    if not allow_non_injective:
        raise NonInjectiveMorphismError(
            "interference-freeness is defined for injective morphisms only",
            witness=phi.injectivity_witness,
        )
    return True


def _min_seed_dp(n, matches, seeds, accepts):
    """Forward DP over the end-sorted match stream.

    ``seeds`` maps a table index to the |x| value it encodes; ``accepts`` are
    candidate 1-based positions j (acceptance needs table index j-1 set).
    Returns (j, minseed, parent) for the accepting j minimizing
    (|x|, j), or None.
    """
    minseed = [_INF] * (n + 1)
    parent: list[tuple[int, str] | None] = [None] * (n + 1)
    for idx, value in seeds.items():
        if value < minseed[idx]:
            minseed[idx] = value
    for p, length, sym in matches:
        v = minseed[p]
        if v < minseed[p + length]:
            minseed[p + length] = v
            parent[p + length] = (p, sym)
    best = None
    for j in sorted(accepts):
        v = minseed[j - 1]
        if v < _INF and (best is None or v < best[0]):
            best = (v, j)
    if best is None:
        return None
    return best[1], minseed, parent


def _backtrack(j, minseed, parent):
    """Recover (x length, y symbol sequence) for the acceptance at j."""
    pos = j - 1
    syms: list[str] = []
    while parent[pos] is not None:
        p, sym = parent[pos]
        syms.append(sym)
        pos = p
    syms.reverse()
    return pos, tuple(syms)


def _scan_artifacts(phi: Morphism, text: str):
    """Match streams and boundary sets for text and its mirror image."""
    n = len(text)
    fwd = matcher_for(phi)
    rev = fwd.reversed_matcher
    matches_f, final_f = fwd.matches(text)
    matches_r, final_r = rev.matches(text[::-1])
    p_suf = set(fwd.boundary_positions(final_f, n))
    p_pref = {n - j + 1 for j in rev.boundary_positions(final_r, n)}
    return matches_f, matches_r, p_pref, p_suf


def _suffix_donor(phi: Morphism, x: str) -> str | None:
    if not x:
        return None
    return min(c for c, img in phi.images if len(img) > len(x) and img.endswith(x))


def _prefix_donor(phi: Morphism, z: str) -> str | None:
    if not z:
        return None
    return min(c for c, img in phi.images if len(img) > len(z) and img.startswith(z))


def factorizable(phi: Morphism, w: Word | str) -> FactorizableResult:
    """True iff w = x . y . z with x a possibly-empty proper image suffix,
    y a concatenation of images and z a NONEMPTY proper image prefix."""
    if not phi.is_non_erasing:
        raise ErasingImageError("factorizable requires a non-erasing morphism")
    text = str(w)
    if not text:
        raise ValueError("factorizable is defined for nonempty words")
    n = len(text)
    matches_f, _, p_pref, p_suf = _scan_artifacts(phi, text)
    seeds = {0: 0}
    for i in p_pref:
        seeds[i] = i
    hit = _min_seed_dp(n, matches_f, seeds, p_suf)
    if hit is None:
        # still expose the reachability table for inspection
        minseed = [_INF] * (n + 1)
        for idx, value in seeds.items():
            minseed[idx] = value
        for p, length, sym in matches_f:
            if minseed[p] < _INF:
                minseed[p + length] = min(minseed[p + length], minseed[p])
        bits = tuple(1 if v < _INF else 0 for v in minseed)
        return FactorizableResult(False, table=FactorizableTable(bits))
    j, minseed, parent = hit
    xlen, y_symbols = _backtrack(j, minseed, parent)
    bits = tuple(1 if v < _INF else 0 for v in minseed)
    return FactorizableResult(
        True,
        x=text[:xlen],
        y_symbols=y_symbols,
        z=text[j - 1:],
        table=FactorizableTable(bits),
    )


def is_inner_image_factor(phi: Morphism, w: Word | str) -> InnerFactorResult:
    """True iff w occurs strictly inside some image, touching neither end."""
    text = str(w)
    if not text:
        raise ValueError("inner-factor check is defined for nonempty words")
    for c, img in phi.images:
        limit = len(img) - len(text) - 1  # last admissible 0-based start
        start = img.find(text, 1)
        if 0 < start <= limit:
            return InnerFactorResult(True, host=c, offset=start + 1)
    return InnerFactorResult(False)


def is_interference_free_on(
    phi: Morphism, u: Word, *, allow_non_injective: bool = False
) -> InterferenceDecision:
    """Decide interference-freeness of phi on the single word u."""
    overridden = _require_injective(phi, allow_non_injective)
    if len(u) == 0:
        raise ValueError("interference-freeness is defined for nonempty words")
    text = phi.apply_text(u.text)
    n = len(text)
    matches_f, matches_r, p_pref, p_suf = _scan_artifacts(phi, text)

    # Pass 1: witnesses with z nonempty (x possibly empty).
    seeds = {0: 0}
    for i in p_pref:
        seeds[i] = i
    hit = _min_seed_dp(n, matches_f, seeds, p_suf)
    if hit is not None:
        j, minseed, parent = hit
        xlen, y_symbols = _backtrack(j, minseed, parent)
        x, z = text[:xlen], text[j - 1:]
        witness = InterferenceWitness(
            INTERFERED_FACTORIZATION,
            x=x,
            y_symbols=y_symbols,
            z=z,
            donor_x=_suffix_donor(phi, x),
            donor_z=_prefix_donor(phi, z),
        )
        return InterferenceDecision(False, witness, overridden)

    # Pass 2 on the mirror image: witnesses with x nonempty (z possibly empty).
    seeds_r = {0: 0}
    for j in p_suf:
        seeds_r[n - j + 1] = n - j + 1
    accepts_r = {n - i + 1 for i in p_pref}
    hit = _min_seed_dp(n, matches_r, seeds_r, accepts_r)
    if hit is not None:
        j, minseed, parent = hit
        xlen_r, y_symbols_r = _backtrack(j, minseed, parent)
        # map the mirrored witness (x', y', z') back: x = z'^R, z = x'^R
        x = text[: n - j + 1]
        z = text[n - xlen_r:]
        witness = InterferenceWitness(
            INTERFERED_FACTORIZATION,
            x=x,
            y_symbols=tuple(reversed(y_symbols_r)),
            z=z,
            donor_x=_suffix_donor(phi, x),
            donor_z=_prefix_donor(phi, z),
        )
        return InterferenceDecision(False, witness, overridden)

    inner = is_inner_image_factor(phi, text)
    if inner:
        witness = InterferenceWitness(
            INNER_IMAGE_FACTOR, host=inner.host, offset=inner.offset
        )
        return InterferenceDecision(False, witness, overridden)
    return InterferenceDecision(True, None, overridden)


def is_interference_free_on_language(
    phi: Morphism, words: list[Word], *, allow_non_injective: bool = False
) -> dict[str, InterferenceDecision]:
    """Convenience loop over a finite language; keyed by word text."""
    return {
        u.text: is_interference_free_on(phi, u, allow_non_injective=allow_non_injective)
        for u in words
    }


def is_strongly_interference_free(phi: Morphism) -> StrongInterferenceDecision:
    """phi is strongly interference-free iff it is interference-free on every
    single source symbol."""
    _require_injective(phi, False)
    for c in phi.source.symbols:
        decision = is_interference_free_on(phi, Word(c, phi.source))
        if not decision:
            return StrongInterferenceDecision(False, c, decision.witness)
    return StrongInterferenceDecision(True)


def barrier_certificate(
    phi: Morphism, u: Word, *, max_length: int = 8
) -> tuple[Word, Word] | None:
    """Search for a prefix/suffix pair of u, each interference-free on its
    own, certifying interference-freeness of u without the full decision.

    Shortest candidates are tried first, capped at ``max_length``.  A result
    is a sufficient certificate; None is inconclusive, not negative.
    """
    _require_injective(phi, False)
    n = len(u)
    if n == 0:
        raise ValueError("barrier certificate is defined for nonempty words")

    def first_if(candidates):
        for cand in candidates:
            if is_interference_free_on(phi, cand):
                return cand
        return None

    cap = min(max_length, n)
    b_l = first_if(u[:k] for k in range(1, cap + 1))
    b_r = first_if(u[n - k:] for k in range(1, cap + 1))
    if b_l is not None and b_r is not None and len(b_l) + len(b_r) <= n:
        return b_l, b_r
    if n <= max_length and is_interference_free_on(phi, u):
        return u, u  # degenerate: u certifies itself
    return None
