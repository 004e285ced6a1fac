"""
Tests for words, relation sets and substitutions
"""

import pytest
from hypothesis import given, strategies as st

from errors import DegreeTooSmall, IndexOutOfRange, ParseError
from services.blockbij import domain, epsilon, gen_x, identity, inverse
from services.partitions import Partition
from services.words import (
    T,
    X,
    e_i_word,
    format_letters,
    l_word,
    m_exp,
    moore_relations,
    normal_forms_3,
    parse_word,
    phi_eval,
    pi_local_word,
    pi_word,
    psi_subst,
    relations_F,
    relations_R,
    rev,
    s,
    shortlex_key,
    sigma_word,
    theta_subst,
    upper_s_word,
    upper_x_word,
    words_up_to,
    y_word,
)

letters_of_four = st.sampled_from([X, s(1), s(2), s(3)])


class TestLetters:
    """Test cases for letters and word helpers"""

    def test_letter_order(self):
        """Test x < s_1 < s_2"""
        assert sorted([s(2), X, s(1)]) == [X, s(1), s(2)]

    def test_s_index(self):
        """Test rejecting s_0"""
        with pytest.raises(IndexOutOfRange):
            s(0)

    def test_shortlex(self):
        """Test shorter words first, then lexicographic"""
        words = [(s(1), X), (s(2),), (X, s(1)), ()]
        assert sorted(words, key=shortlex_key) == [(), (s(2),), (X, s(1)), (s(1), X)]

    def test_words_up_to(self):
        """Test enumeration in shortlex order"""
        words = list(words_up_to([X, s(1)], 2))
        assert len(words) == 7
        assert words[:3] == [(), (X,), (s(1),)]

    def test_rev(self):
        """Test reversing a word"""
        assert rev((X, s(2), s(1))) == (s(1), s(2), X)
        assert rev(()) == ()

    def test_format(self):
        """Test the text form"""
        assert format_letters((X, s(2), X)) == "x s2 x"
        assert format_letters(()) == "1"


class TestNamedWords:
    """Test cases for the named word families"""

    @pytest.mark.parametrize("i,j,m", [(2, 2, 1), (1, 2, 3), (2, 1, 3), (1, 3, 2), (1, 4, 2)])
    def test_m_exp(self, i, j, m):
        """Test the Coxeter exponents"""
        assert m_exp(i, j) == m

    def test_m_exp_range(self):
        """Test rejecting invalid indices"""
        with pytest.raises(IndexOutOfRange):
            m_exp(0, 1)
        with pytest.raises(IndexOutOfRange):
            m_exp(1, 4, n=4)

    def test_sigma(self):
        """Test sigma = s2 s3 s1 s2"""
        assert sigma_word() == (s(2), s(3), s(1), s(2))
        assert phi_eval(sigma_word(), 4).is_unit()

    def test_l_and_y(self):
        """Test the recursive families"""
        assert l_word(2) == (X, s(2), s(1))
        assert l_word(3) == (s(3), X, s(2), s(1), s(3), s(2))
        assert y_word(3) == (X,)
        assert y_word(4) == l_word(3) + (X, s(3))

    def test_l_and_y_range(self):
        """Test rejecting indices below the base case"""
        with pytest.raises(IndexOutOfRange):
            l_word(1)
        with pytest.raises(IndexOutOfRange):
            y_word(2)

    @pytest.mark.parametrize(
        "k,l,expected",
        [
            (1, 2, "s1 s2"),
            (3, 2, "s2 s3 s1 s2"),
            (1, 0, "1"),
            (4, 3, "s2 s3 s4 s1 s2 s3"),
            (2, 1, "s2 s1"),
        ],
    )
    def test_pi_word(self, k, l, expected):
        """Test the boolean exponent convention"""
        assert pi_word(k, l) == parse_word(expected)

    def test_pi_local_word(self):
        """Test the unit part of e pi e"""
        assert pi_local_word(2, 3) == (s(2), s(3), s(1), s(2))
        assert pi_local_word(0, 1) == ()

    def test_e_i_words(self):
        """Test e_1 = x x and the domain of e_2"""
        assert e_i_word(1) == (X, X)
        e2 = phi_eval(e_i_word(2), 4)
        assert e2.is_idempotent()
        assert domain(e2) == Partition.parse("1|2,3|4")

    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_e_i_domains(self, i):
        """Test e_i joins i and i+1 only"""
        n = 5
        blocks = [[v] for v in range(1, i)] + [[i, i + 1]] + [[v] for v in range(i + 2, n + 1)]
        expected = Partition.parse("|".join(",".join(map(str, b)) for b in blocks))
        assert domain(phi_eval(e_i_word(i), n)) == expected

    def test_upper_words(self):
        """Test X, S_1 and S_j"""
        assert upper_x_word() == (s(3), X, s(2), s(3), s(1), s(2), X, s(3))
        assert upper_s_word(1) == (X,)
        assert upper_s_word(2) == (X, X, s(3))


class TestRelations:
    """Test cases for the relation sets"""

    def test_relations_r_degree_3(self):
        """Test only the relations among x, s1 and s2"""
        pres = relations_R(3)
        assert len(pres.relations) == 10
        assert pres.alphabet == (X, s(1), s(2))
        assert all(s(3) not in u + v for u, v in pres.relations)

    def test_relations_r_degree_4(self):
        """Test the y_3 relation appears and the commuting ones do not"""
        pres = relations_R(4)
        assert len(pres.relations) == 16
        assert ((X, s(3), X), (s(3), X, s(3))) in pres.relations

    def test_relations_r_degree_5(self):
        """Test x commutes with s4"""
        pres = relations_R(5)
        assert len(pres.relations) == 22
        assert ((X, s(4)), (s(4), X)) in pres.relations

    def test_relations_r_degree_too_small(self):
        """Test rejecting degree 2"""
        with pytest.raises(DegreeTooSmall):
            relations_R(2)

    @pytest.mark.parametrize("n,count", [(2, 4), (3, 7), (4, 12)])
    def test_relations_f_counts(self, n, count):
        """Test vacuous relations are dropped"""
        pres = relations_F(n)
        assert len(pres.relations) == count
        assert pres.alphabet[0] == T

    def test_moore(self):
        """Test the symmetric group relations"""
        assert len(moore_relations(4).relations) == 6

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_relations_r_hold(self, n):
        """Test every relation holds for the generator images"""
        for u, v in relations_R(n).relations:
            assert phi_eval(u, n) == phi_eval(v, n), (u, v)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_relations_f_hold(self, n):
        """Test every factorizable relation holds with t -> epsilon"""
        for u, v in relations_F(n).relations:
            assert phi_eval(u, n) == phi_eval(v, n), (u, v)


class TestSubstitutions:
    """Test cases for theta and psi"""

    def test_theta(self):
        """Test t -> x x"""
        assert theta_subst((T,)) == (X, X)
        assert theta_subst((s(1), T, s(2))) == (s(1), X, X, s(2))
        assert theta_subst(()) == ()

    def test_psi(self):
        """Test x -> X, s1 -> x, s_j -> x x s_{j+1}"""
        assert psi_subst((X,), 4) == upper_x_word()
        assert psi_subst((s(1),), 4) == (X,)
        assert psi_subst((s(2),), 4) == (X, X, s(3))

    def test_psi_degree_too_small(self):
        """Test rejecting degree 3"""
        with pytest.raises(DegreeTooSmall):
            psi_subst((X,), 3)

    def test_psi_checks_source_degree(self):
        """Test rejecting letters missing one degree down"""
        with pytest.raises(IndexOutOfRange):
            psi_subst((s(3),), 4)


class TestParsing:
    """Test cases for the word grammar"""

    def test_macros(self):
        """Test macro expansion"""
        assert parse_word("sigma") == sigma_word()
        assert parse_word("l2 y3") == (X, s(2), s(1), X)
        assert parse_word("e1") == (X, X)
        assert parse_word("S1 S2") == (X, X, X, s(3))
        assert parse_word("1") == ()

    def test_degree_check(self):
        """Test rejecting a letter missing at the degree"""
        with pytest.raises(IndexOutOfRange):
            parse_word("x s3", 3)

    def test_unknown_token(self):
        """Test rejecting an unknown token"""
        with pytest.raises(ParseError):
            parse_word("x q")


class TestEvaluation:
    """Test cases for phi"""

    def test_empty_word(self):
        """Test the empty word is the identity"""
        assert phi_eval((), 4) == identity(4)

    def test_single_letters(self):
        """Test x and x s1 at degree 3"""
        assert phi_eval((X,), 3) == gen_x(3)
        assert phi_eval((X, s(1)), 3) == gen_x(3)
        assert phi_eval((T,), 3) == epsilon(3)

    def test_invalid_letter(self):
        """Test rejecting s_i with i >= n"""
        with pytest.raises(IndexOutOfRange):
            phi_eval((s(3),), 3)

    def test_normal_forms_3(self):
        """Test the 25 words of degree 3"""
        forms = normal_forms_3()
        assert len(forms) == 25
        assert (X, s(2), X) in forms
        assert () in forms
        assert len({phi_eval(w, 3) for w in forms}) == 25

    @given(st.lists(letters_of_four, max_size=8))
    def test_rev_is_inverse(self, letters):
        w = tuple(letters)
        assert phi_eval(rev(w), 4) == inverse(phi_eval(w, 4))
