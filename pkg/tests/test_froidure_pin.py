"""
Tests for Froidure-Pin enumeration
"""

import numpy as np
import pytest

from errors import CapExceeded, SizeMismatch
from services.blockbij import compose, epsilon, gen_s, gen_x, identity, inverse
from services.froidure_pin import enumerate_dual_symmetric, froidure_pin, phi_generators
from services.words import T, X, phi_eval, s, shortlex_key


@pytest.fixture(scope="module")
def monoid3():
    return enumerate_dual_symmetric(3)


class TestFroidurePin:
    """Test cases for the enumeration itself"""

    def test_symmetric_group(self):
        """Test S_3 from two transpositions"""
        M = froidure_pin([gen_s(3, 1), gen_s(3, 2)])
        assert M.size == 6

    @pytest.mark.parametrize("n,size", [(1, 1), (2, 3), (3, 25), (4, 339)])
    def test_cardinalities(self, n, size):
        """Test |I_n*| for small n"""
        assert enumerate_dual_symmetric(n).size == size

    @pytest.mark.slow
    def test_cardinality_degree_5(self):
        """Test |I_5*| = 6721"""
        assert enumerate_dual_symmetric(5).size == 6721

    def test_identity_first(self, monoid3):
        """Test element 0 is the identity with the empty word"""
        assert monoid3.elements[0] == identity(3)
        assert monoid3.word_of(0) == ()

    def test_rep_words_evaluate(self, monoid3):
        """Test every representative word evaluates to its element"""
        for i, element in enumerate(monoid3.elements):
            assert phi_eval(monoid3.word_of(i), 3) == element

    def test_rep_words_shortlex(self, monoid3):
        """Test representatives are distinct and in shortlex order"""
        words = monoid3.rep_words
        assert len(set(words)) == len(words)
        assert words == sorted(words, key=shortlex_key)

    def test_first_words(self, monoid3):
        """Test the generators follow the identity in letter order"""
        assert monoid3.rep_words[:4] == [(), (X,), (s(1),), (s(2),)]

    def test_cayley_tables(self, monoid3):
        """Test both Cayley tables against direct products"""
        gens = [gen_x(3), gen_s(3, 1), gen_s(3, 2)]
        for i, element in enumerate(monoid3.elements):
            for a, g in enumerate(gens):
                assert monoid3.right_cayley[i, a] == monoid3.index_of(compose(element, g))
                assert monoid3.left_cayley[i, a] == monoid3.index_of(compose(g, element))

    def test_multiply(self, monoid3):
        """Test products of indices"""
        for i, a in enumerate(monoid3.elements):
            for j, b in enumerate(monoid3.elements):
                assert monoid3.multiply(i, j) == monoid3.index_of(compose(a, b))

    def test_multiplication_table(self, monoid3):
        """Test the full table agrees with multiply"""
        table = monoid3.multiplication_table()
        assert table.shape == (25, 25)
        assert np.array_equal(table[0], np.arange(25))
        assert table[3, 7] == monoid3.index_of(compose(monoid3.elements[3], monoid3.elements[7]))

    def test_element_of_word(self, monoid3):
        """Test tracing a word from the identity"""
        assert monoid3.element_of_word((X, X, X)) == monoid3.element_of_word((X,))

    def test_units_and_inverses(self, monoid3):
        """Test the group of units and inverse lookup"""
        assert len(monoid3.units()) == 6
        for i, element in enumerate(monoid3.elements):
            assert monoid3.elements[monoid3.inverse_of(i)] == inverse(element)

    def test_green_classes_partition(self, monoid3):
        """Test R- and L-classes cover the monoid"""
        for classes in (monoid3.green_r_classes(), monoid3.green_l_classes()):
            assert sum(len(c) for c in classes) == 25
            assert frozenset().union(*classes) == frozenset(range(25))

    def test_cap(self):
        """Test exceeding the element cap"""
        letters, gens = phi_generators(3)
        with pytest.raises(CapExceeded) as excinfo:
            froidure_pin(gens, letters, cap=10)
        assert excinfo.value.cap == 10

    def test_mixed_degrees(self):
        """Test rejecting generators of different degrees"""
        with pytest.raises(SizeMismatch):
            froidure_pin([gen_s(3, 1), gen_s(4, 1)])

    def test_custom_unit(self):
        """Test closing from epsilon instead of the identity"""
        M = froidure_pin([gen_x(3)], unit=epsilon(3))
        assert M.elements[0] == epsilon(3)
        assert M.size == 2


class TestGeneratorSets:
    """Test cases for the generator images"""

    def test_xs(self):
        """Test x, s_1, ..., s_{n-1}"""
        letters, gens = phi_generators(4)
        assert letters == (X, s(1), s(2), s(3))
        assert gens[0] == gen_x(4)

    def test_degree_two_uses_epsilon(self):
        """Test x is replaced by epsilon at degree 2"""
        letters, gens = phi_generators(2)
        assert letters == (T, s(1))
        assert gens[0] == epsilon(2)

    def test_factorizable(self):
        """Test the t, s_i generators produce the uniform elements"""
        letters, gens = phi_generators(3, "f")
        assert froidure_pin(gens, letters).size == 16

    def test_unknown(self):
        """Test rejecting an unknown set"""
        with pytest.raises(ValueError):
            phi_generators(3, "q")
