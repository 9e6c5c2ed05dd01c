from itertools import product

import pytest

from morphlab import Morphism, word


def binary_words(max_len, min_len=1):
    """All words over {a, b} with min_len <= length <= max_len."""
    return [
        word("".join(p))
        for n in range(min_len, max_len + 1)
        for p in product("ab", repeat=n)
    ]


@pytest.fixture(scope="session")
def small_injective_morphisms():
    """All injective morphisms {a, b} -> {a, b, c}* with image lengths 1..3."""
    images = ["".join(p) for n in (1, 2, 3) for p in product("abc", repeat=n)]
    out = []
    for ia, ib in product(images, repeat=2):
        m = Morphism.from_map({"a": ia, "b": ib})
        if m.is_injective:
            out.append(m)
    return out


@pytest.fixture(scope="session")
def small_words():
    return binary_words(6)
