import pytest

from morphlab import (
    BudgetExceededError,
    EnumerationBudget,
    Morphism,
    count_circular_factorizations,
    count_image_factorizations,
    enumerate_circular_factorizations,
    enumerate_image_factorizations,
    enumerate_interfered_factorizations,
    is_recognizable_on,
    word,
)
from morphlab.errors import NonInjectiveMorphismError
from morphlab.words import rotations

FIB = Morphism.parse("a->ab;b->a")
TM = Morphism.parse("a->ab;b->ba")


class TestImageFactorizations:
    def test_ambiguous_decomposition(self):
        m = Morphism.parse("a->a;b->aa")
        seqs = set(enumerate_image_factorizations(m, "aaa"))
        assert seqs == {("a", "a", "a"), ("a", "b"), ("b", "a")}
        assert count_image_factorizations(m, "aaa") == 3

    def test_empty_word(self):
        assert enumerate_image_factorizations(FIB, "") == [()]

    def test_injective_morphism_unique(self):
        assert enumerate_image_factorizations(FIB, "abaababa") == [
            tuple("abaab")
        ]

    def test_no_factorization(self):
        assert enumerate_image_factorizations(FIB, "ba") == []

    def test_budget_word_length(self):
        tight = EnumerationBudget(max_word_length=3)
        with pytest.raises(BudgetExceededError):
            enumerate_image_factorizations(FIB, "abab", budget=tight)

    def test_budget_factorization_count(self):
        m = Morphism.parse("a->a;b->aa")
        tight = EnumerationBudget(max_factorizations=5)
        with pytest.raises(BudgetExceededError):
            enumerate_image_factorizations(m, "a" * 12, budget=tight)

    def test_budget_env_override(self, monkeypatch):
        m = Morphism.parse("a->a;b->aa")
        monkeypatch.setenv("MORPHLAB_BUDGET", "5")
        with pytest.raises(BudgetExceededError):
            enumerate_image_factorizations(m, "a" * 12)


class TestInterferedFactorizations:
    def test_fibonacci_odd_witnesses(self):
        found = enumerate_interfered_factorizations(FIB, FIB.apply_text("abaab"))
        assert found
        for w in found:
            y = "".join(FIB.image_map[c] for c in w.y_symbols)
            assert w.x + y + w.z == FIB.apply_text("abaab")
            assert w.x or w.z

    def test_clean_word_has_none(self):
        assert enumerate_interfered_factorizations(TM, TM.apply_text("abba")) == []

    def test_rejects_empty_word(self):
        with pytest.raises(ValueError):
            enumerate_interfered_factorizations(FIB, "")


class TestCircularFactorizations:
    def test_fib_ab_unique(self):
        found = enumerate_circular_factorizations(FIB, "ab")
        assert len(found) == 1
        cf = found[0]
        assert (cf.q, cf.r_symbols, cf.p, cf.split_symbol) == ("", (), "ab", "a")

    def test_reassembly(self):
        for text in ("ab", "aba", "abaab", "baaba"):
            for cf in enumerate_circular_factorizations(FIB, text):
                r = "".join(FIB.image_map[c] for c in cf.r_symbols)
                assert cf.q + r + cf.p == text
                assert cf.p
                assert cf.p + cf.q == FIB.image_map[cf.split_symbol]

    def test_count_matches_enumeration(self):
        for phi in (FIB, TM, Morphism.parse("a->a;b->aa")):
            for text in ("a", "ab", "aab", "abab", "aaaa", "babab"):
                assert count_circular_factorizations(phi, text) == len(
                    enumerate_circular_factorizations(phi, text)
                ), (phi.format(), text)

    def test_tm_aa_rotations(self):
        # mu(aa) = abab; its rotation baba splits two ways around the seam
        counts = {
            r.text: count_circular_factorizations(TM, r.text)
            for r in rotations(word("abab"))
        }
        assert counts["baba"] == 2


class TestRecognizability:
    def test_if_examples_recognizable(self):
        assert is_recognizable_on(FIB, word("abaaba"))
        assert is_recognizable_on(TM, word("abba"))

    def test_recognizable_but_not_if(self):
        assert is_recognizable_on(FIB, word("abaab"))

    def test_injective_but_not_recognizable(self):
        decision = is_recognizable_on(TM, word("aa"))
        assert not decision
        assert decision.factorization_count == 2
        assert decision.offending_rotation.text in {
            r.text for r in rotations(TM.apply(word("aa")))
        }

    def test_rejects_non_injective(self):
        with pytest.raises(NonInjectiveMorphismError):
            is_recognizable_on(Morphism.parse("a->ab;b->ab"), word("a"))

    def test_rejects_empty_word(self):
        with pytest.raises(ValueError):
            is_recognizable_on(FIB, word(""))
