from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphlab import AlphabetMismatchError, Morphism, word
from morphlab.morphisms import parse_morphism

FIB = Morphism.parse("a->ab;b->a")
TM = Morphism.parse("a->ab;b->ba")


class TestParseFormat:
    def test_parse_basic(self):
        assert FIB.image_map == {"a": "ab", "b": "a"}
        assert FIB.source.symbols == ("a", "b")
        assert FIB.target.symbols == ("a", "b")

    def test_parse_epsilon(self):
        m = Morphism.parse("a->ab;b->.")
        assert m.image_map["b"] == ""
        assert not m.is_non_erasing

    def test_parse_ignores_whitespace(self):
        assert Morphism.parse(" a -> ab ; b -> a ") == FIB

    def test_roundtrip(self):
        for spec in ("a->ab;b->a", "a->abc;b->ac;c->b", "a->.;b->a"):
            assert Morphism.parse(spec).format() == spec

    def test_malformed_specs_rejected(self):
        for bad in ("", "b", "ab->a", "aa->b", "a->b;a->c"):
            with pytest.raises(ValueError):
                Morphism.parse(bad)

    def test_parse_morphism_alias(self):
        assert parse_morphism("a->ab;b->a") == FIB


class TestApplication:
    def test_apply(self):
        assert FIB.apply(word("abaab")).text == "abaababa"
        assert TM.apply(word("ab")).text == "abba"

    def test_apply_rejects_foreign_symbols(self):
        with pytest.raises(AlphabetMismatchError):
            FIB.apply_text("abc")

    def test_iterate(self):
        assert FIB.iterate(word("b"), 0).text == "b"
        assert FIB.iterate(word("b"), 5).text == "abaababa"
        with pytest.raises(ValueError):
            FIB.iterate(word("a"), -1)

    def test_iterate_requires_endomorphism(self):
        m = Morphism.parse("a->bc;b->c")
        with pytest.raises(ValueError):
            m.iterate(word("a"), 2)

    def test_reversal(self):
        assert FIB.reversal().image_map == {"a": "ba", "b": "a"}
        assert FIB.reversal().reversal() == FIB


class TestPredicates:
    def test_uniform_length(self):
        assert TM.uniform_length == 2
        assert FIB.uniform_length is None

    def test_proper_prefixes_and_suffixes(self):
        assert FIB.proper_image_prefixes == {"a"}
        assert FIB.proper_image_suffixes == {"b"}
        m = Morphism.parse("a->abc;b->ac;c->b")
        assert m.proper_image_prefixes == {"a", "ab"}
        assert m.proper_image_suffixes == {"c", "bc"}

    def test_image_set_totals(self):
        m = Morphism.parse("a->ab;b->ab")
        assert m.image_texts == ("ab",)
        assert m.image_set.total_length == 4


class TestInjectivity:
    def test_classic_morphisms_injective(self):
        for spec in ("a->ab;b->a", "a->ab;b->ba", "a->abc;b->ac;c->b",
                     "a->aab;b->bba", "a->abb;b->baa", "a->aba;b->abb"):
            assert Morphism.parse(spec).is_injective

    def test_duplicate_images_not_injective(self):
        m = Morphism.parse("a->ab;b->ab")
        assert not m.is_injective
        u, v = m.injectivity_witness
        assert u.text != v.text
        assert m.apply(u) == m.apply(v)

    def test_prefix_code_counterexample(self):
        # ab . a = a . ba
        m = Morphism.parse("a->ab;b->a;c->ba")
        assert not m.is_injective
        u, v = m.injectivity_witness
        assert m.apply_text(u.text) == m.apply_text(v.text)
        assert sorted((u.text, v.text)) == ["ab", "bc"]

    def test_erasing_image_not_injective(self):
        assert not Morphism.parse("a->.;b->a").is_injective

    def test_witness_is_canonical_shortest(self):
        m = Morphism.parse("a->aa;b->aaa")
        u, v = m.injectivity_witness
        # aa.aaa = aaa.aa is the shortest collision
        assert sorted((u.text, v.text)) == ["ab", "ba"]

    def test_injectivity_agrees_with_brute_force(self):
        images = ["".join(p) for n in (1, 2) for p in product("ab", repeat=n)]
        for ia, ib in product(images, repeat=2):
            m = Morphism.from_map({"a": ia, "b": ib})
            collide = any(
                m.apply_text(u) == m.apply_text(v)
                for lu in range(1, 5)
                for u in map("".join, product("ab", repeat=lu))
                for lv in range(1, 5)
                for v in map("".join, product("ab", repeat=lv))
                if u != v
            )
            assert m.is_injective == (not collide), m.format()


@given(st.text(alphabet="ab", min_size=1, max_size=12))
def test_morphism_is_homomorphism(text):
    cut = len(text) // 2
    u, v = word(text[:cut]), word(text[cut:])
    assert FIB.apply(u) + FIB.apply(v) == FIB.apply(u + v)
