"""
Tests for block bijections
"""

import pytest
from hypothesis import given, settings, strategies as st

from errors import (
    DegreeTooSmall,
    IndexOutOfRange,
    NotAUnit,
    NotBiequivalence,
    NotInLocalSubmonoid,
    OutOfRange,
    OverlapOrGap,
    SizeMismatch,
)
from models import (
    LOCAL_DEGREE,
    LOCAL_IMAGE_LITERAL,
    LOCAL_LITERAL,
    REFERENCE_DEGREE,
    REFERENCE_LITERAL,
)
from services.blockbij import (
    BOTTOM,
    TOP,
    BlockBijection,
    compose,
    conjugate,
    domain,
    epsilon,
    gen_s,
    gen_x,
    identity,
    in_local_submonoid,
    inverse,
    is_uniform,
    range_of,
    upsilon,
    upsilon_inverse,
)
from services.partitions import Partition


@st.composite
def block_bijections(draw, n=3):
    """Random element of I_n*: a block label per top vertex, every label reused below"""
    tops = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    used = sorted(set(tops))
    bottoms = draw(st.lists(st.integers(0, len(used) - 1), min_size=n, max_size=n))
    order = draw(st.permutations(range(n)))
    for k in range(len(used)):
        bottoms[order[k]] = k
    rows = []
    for k, label in enumerate(used):
        top = [v + 1 for v, t in enumerate(tops) if t == label]
        bottom = [v + 1 for v, b in enumerate(bottoms) if b == k]
        rows.append((top, bottom))
    return BlockBijection.from_rows(n, rows)


class TestConstruction:
    """Test cases for building block bijections"""

    def setup_method(self):
        """Set up the reference element of degree 8"""
        self.theta = BlockBijection.from_literal(REFERENCE_DEGREE, REFERENCE_LITERAL)

    def test_from_blocks(self):
        """Test building from (row, index) pairs"""
        theta = BlockBijection.from_blocks(
            8,
            [
                [(TOP, 1), (TOP, 2), (BOTTOM, 2), (BOTTOM, 4)],
                [(TOP, 3), (BOTTOM, 5), (BOTTOM, 6), (BOTTOM, 7), (BOTTOM, 8)],
                [(TOP, 4), (TOP, 6), (TOP, 7), (BOTTOM, 1)],
                [(TOP, 5), (TOP, 8), (BOTTOM, 3)],
            ],
        )
        assert theta == self.theta

    def test_literal_round_trip(self):
        """Test that the canonical literal is reproduced"""
        assert self.theta.to_literal() == REFERENCE_LITERAL
        assert str(self.theta) == REFERENCE_LITERAL

    def test_literal_block_order_irrelevant(self):
        """Test that block order in the input does not matter"""
        shuffled = BlockBijection.from_literal(8, "5,8;3|4,6,7;1|3;5,6,7,8|2,1;4,2")
        assert shuffled == self.theta

    def test_identity_blocks(self):
        """Test the identity of degree 2"""
        assert BlockBijection.from_rows(2, [([1], [1]), ([2], [2])]) == identity(2)

    def test_missing_row(self):
        """Test rejecting a block without bottom vertices"""
        with pytest.raises(NotBiequivalence):
            BlockBijection.from_rows(2, [([1, 2], []), ([], [1, 2])])

    def test_out_of_range_vertex(self):
        """Test rejecting a vertex beyond the degree"""
        with pytest.raises(OutOfRange):
            BlockBijection.from_literal(2, "1;1|2,3;2")

    def test_overlap(self):
        """Test rejecting a vertex used twice"""
        with pytest.raises(OverlapOrGap):
            BlockBijection.from_literal(2, "1;1|1,2;2")

    def test_from_permutation(self):
        """Test the unit sending i to images[i-1]'"""
        assert BlockBijection.from_permutation([2, 1, 3]) == gen_s(3, 1)

    def test_from_equivalence(self):
        """Test the idempotent of an equivalence"""
        e = BlockBijection.from_equivalence(Partition.parse("1,2|3"))
        assert e == epsilon(3)
        assert e.to_literal() == "1,2;1,2|3;3"


class TestComposition:
    """Test cases for the stacking product"""

    def test_identity_times_x(self):
        """Test the identity on the left"""
        x = BlockBijection.from_literal(3, "1,2;3|3;1,2")
        assert compose(identity(3), x).to_literal() == "1,2;3|3;1,2"

    def test_x_squared_is_epsilon(self):
        """Test x^2 = epsilon at degree 3 and 5"""
        for n in (3, 5):
            assert compose(gen_x(n), gen_x(n)) == epsilon(n)

    def test_x_cubed(self):
        """Test x^3 = x"""
        x = gen_x(4)
        assert compose(compose(x, x), x) == x

    def test_merge_through_middle_row(self):
        """Test that blocks joined in the middle row merge"""
        a = BlockBijection.from_literal(3, "1;1,2|2,3;3")
        b = BlockBijection.from_literal(3, "1;1|2,3;2,3")
        assert compose(a, b).to_literal() == "1,2,3;1,2,3"

    def test_size_mismatch(self):
        """Test rejecting different degrees"""
        with pytest.raises(SizeMismatch):
            compose(identity(2), identity(3))

    @settings(max_examples=60)
    @given(block_bijections(), block_bijections(), block_bijections())
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(block_bijections())
    def test_identity_neutral(self, a):
        assert compose(identity(3), a) == a
        assert compose(a, identity(3)) == a

    @given(block_bijections(n=4), block_bijections(n=4))
    def test_product_is_block_bijection(self, a, b):
        product = compose(a, b)
        assert BlockBijection.from_rows(4, product.blocks()) == product


class TestInverse:
    """Test cases for the row flip"""

    def test_inverse_of_theta(self):
        """Test the domain of the flipped reference element"""
        theta = BlockBijection.from_literal(REFERENCE_DEGREE, REFERENCE_LITERAL)
        assert domain(inverse(theta)) == Partition.parse("1|2,4|3|5,6,7,8")

    @given(block_bijections(n=4))
    def test_involution(self, a):
        assert inverse(inverse(a)) == a

    @given(block_bijections(n=4))
    def test_regular(self, a):
        b = inverse(a)
        assert compose(compose(a, b), a) == a
        assert compose(compose(b, a), b) == b

    @given(block_bijections(n=4), block_bijections(n=4))
    def test_anti_homomorphism(self, a, b):
        assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))

    @given(block_bijections(n=4), block_bijections(n=4))
    def test_idempotents_commute(self, a, b):
        e = compose(a, inverse(a))
        f = compose(b, inverse(b))
        assert e.is_idempotent() and f.is_idempotent()
        assert compose(e, f) == compose(f, e)


class TestDomainAndRange:
    """Test cases for domain and range partitions"""

    def test_theta(self):
        """Test the reference element"""
        theta = BlockBijection.from_literal(REFERENCE_DEGREE, REFERENCE_LITERAL)
        assert domain(theta) == Partition.parse("1,2|3|4,6,7|5,8")
        assert range_of(theta) == Partition.parse("1|2,4|3|5,6,7,8")

    def test_identity_discrete(self):
        """Test the identity has discrete domain"""
        assert domain(identity(4)) == Partition.discrete(4)

    @given(block_bijections(n=4))
    def test_range_is_domain_of_inverse(self, a):
        assert range_of(a) == domain(inverse(a))

    @given(block_bijections(n=4))
    def test_domain_of_product_with_inverse(self, a):
        assert compose(a, inverse(a)) == BlockBijection.from_equivalence(domain(a))


class TestGenerators:
    """Test cases for the generator images"""

    def test_gen_x_blocks(self):
        """Test x at degree 4"""
        assert gen_x(4).to_literal() == "1,2;3|3;1,2|4;4"
        assert gen_x(4).rank == 3

    def test_gen_s_blocks(self):
        """Test a transposition diagram"""
        assert gen_s(3, 1).to_literal() == "1;2|2;1|3;3"
        assert gen_s(4, 3).to_literal() == "1;1|2;2|3;4|4;3"

    def test_gen_x_degree_too_small(self):
        """Test x needs three points"""
        with pytest.raises(DegreeTooSmall):
            gen_x(2)

    def test_gen_s_index(self):
        """Test s_i needs 1 <= i <= n-1"""
        with pytest.raises(IndexOutOfRange):
            gen_s(3, 3)
        with pytest.raises(IndexOutOfRange):
            gen_s(3, 0)

    def test_predicates(self):
        """Test unit, idempotent and uniform predicates"""
        assert gen_s(4, 2).is_unit()
        assert not gen_x(4).is_unit()
        assert epsilon(4).is_idempotent()
        assert not gen_x(4).is_idempotent()
        assert is_uniform(epsilon(4))
        assert is_uniform(gen_s(4, 1))
        assert not is_uniform(gen_x(4))


class TestLocalSubmonoid:
    """Test cases for the local submonoid of epsilon and the map upsilon"""

    def test_epsilon_maps_to_identity(self):
        """Test upsilon(epsilon) = identity"""
        assert upsilon(epsilon(4)) == identity(3)
        assert upsilon_inverse(identity(3)) == epsilon(4)

    def test_not_local(self):
        """Test rejecting an element outside the local submonoid"""
        assert not in_local_submonoid(identity(4))
        with pytest.raises(NotInLocalSubmonoid):
            upsilon(identity(4))

    def test_x_maps_to_s1(self):
        """Test upsilon(x) = s_1 one degree down"""
        assert in_local_submonoid(gen_x(4))
        assert upsilon(gen_x(4)) == gen_s(3, 1)

    def test_reference_element(self):
        """Test upsilon on a worked degree-5 element"""
        beta = BlockBijection.from_literal(LOCAL_DEGREE, LOCAL_LITERAL)
        image = BlockBijection.from_literal(LOCAL_DEGREE - 1, LOCAL_IMAGE_LITERAL)
        assert in_local_submonoid(beta)
        assert upsilon(beta) == image
        assert upsilon(beta).to_literal() == LOCAL_IMAGE_LITERAL
        assert upsilon_inverse(image) == beta

    @given(block_bijections(n=4), block_bijections(n=4))
    def test_homomorphism(self, a, b):
        e = epsilon(4)
        a, b = compose(compose(e, a), e), compose(compose(e, b), e)
        assert upsilon(compose(a, b)) == compose(upsilon(a), upsilon(b))

    @given(block_bijections(n=3))
    def test_upsilon_inverse_round_trip(self, c):
        assert upsilon(upsilon_inverse(c)) == c

    def test_conjugate(self):
        """Test conjugation by a unit"""
        assert conjugate(epsilon(3), gen_s(3, 1)) == epsilon(3)
        assert conjugate(epsilon(3), gen_s(3, 2)) == BlockBijection.from_equivalence(
            Partition.parse("1,3|2")
        )

    def test_conjugate_needs_unit(self):
        """Test rejecting a non-unit conjugator"""
        with pytest.raises(NotAUnit):
            conjugate(epsilon(3), gen_x(3))


class TestRendering:
    """Test cases for ASCII and DOT output"""

    def test_ascii(self):
        """Test the two-row drawing of x"""
        assert gen_x(3).render() == "\n".join(
            [
                "     1  2  3",
                "top  a  a  b",
                "bot  b  b  a",
                "     1' 2' 3'",
            ]
        )

    def test_dot(self):
        """Test the Graphviz source of x"""
        dot = gen_x(3).render(dot=True)
        assert dot.startswith("graph blockbijection {")
        assert "t1 -- t2 -- b3;" in dot
        assert "t3 -- b1 -- b2;" in dot
        assert dot.rstrip().endswith("}")
