import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import code_words, oracle_span, oracle_weight_distribution, sympy_divisors
from tracecodes.codes import (
    CyclicSpec,
    LinearCode,
    WeightDistribution,
    check_polynomial,
    code_equal,
    code_from_matrix,
    cyclic_code,
    cyclotomic_cosets,
    generator_polynomial,
    is_cyclic,
    min_distance,
    multiplicative_order_mod,
    poly_gcd,
    reciprocal,
    weight_distribution,
    x_n_minus_1,
)
from tracecodes.errors import (
    DivisionByZero,
    LengthMismatch,
    NotDivisor,
    ParseError,
    SpecMismatch,
    TooLarge,
    ZeroCode,
)
from tracecodes.galois import GFPolynomial, make_field
from tracecodes.linalg import GFMatrix, inverse, matmul, parse_matrix, rank, rref

HAMMING_G = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 1, 0, 1],
]


def matrices(p, max_k=4, max_n=8):
    return st.integers(1, max_k).flatmap(
        lambda k: st.integers(1, max_n).flatmap(
            lambda n: st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=k, max_size=k)
        )
    )


class TestLinalg:
    def test_rref_is_canonical(self, gf2):
        a = GFMatrix(gf2, [[1, 1, 0], [0, 1, 1]])
        b = GFMatrix(gf2, [[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        assert rref(a, drop_zero_rows=True) == rref(b, drop_zero_rows=True)
        assert rref(a).entries.tolist() == [[1, 0, 1], [0, 1, 1]]

    @settings(max_examples=80, deadline=None)
    @given(matrices(3))
    def test_rank_and_span_match_oracle(self, rows):
        F3 = make_field(3)
        m = GFMatrix(F3, rows)
        span = oracle_span(rows, 3)
        assert 3 ** rank(m) == len(span)
        assert code_words(code_from_matrix(m)) == span

    def test_inverse_over_gf4(self):
        F4 = make_field(2, 2)
        m = GFMatrix(F4, [[1, 2], [2, 1]])
        assert matmul(m, inverse(m)) == GFMatrix(F4, np.eye(2, dtype=int))
        with pytest.raises(DivisionByZero):
            inverse(GFMatrix(F4, [[1, 2], [3, 1]]))  # det = 1 - g^3 = 0

    def test_parse_round_trip(self, gf2):
        F4 = make_field(2, 2)
        m = GFMatrix(F4, [[0, 1, 2, 3]])
        assert parse_matrix(m.to_text(), F4) == m
        assert parse_matrix("1 0 1  # comment\n\n0 1 1", gf2).shape == (2, 3)
        assert parse_matrix("g^2 1 0", F4).entries.tolist() == [[3, 1, 0]]
        with pytest.raises(ParseError):
            parse_matrix("1 0\n1", gf2)
        with pytest.raises(ParseError):
            parse_matrix("2", gf2)
        with pytest.raises(ParseError):
            parse_matrix("", gf2)

    def test_matrices_are_read_only(self, gf2):
        m = GFMatrix(gf2, [[1, 0]])
        with pytest.raises(ValueError):
            m.entries[0, 0] = 0


class TestLinearCode:
    def test_example1_parameters(self, example1_matrix):
        c = code_from_matrix(example1_matrix)
        wd = weight_distribution(c)
        assert (c.n, c.k, min_distance(c)) == (7, 3, 3)
        assert wd.counts == tuple(oracle_weight_distribution(example1_matrix.entries.tolist(), 2, 7))

    def test_hamming_enumerator(self, gf2):
        c = code_from_matrix(GFMatrix(gf2, HAMMING_G))
        assert weight_distribution(c).enumerator() == "1 + 7z^3 + 7z^4 + z^7"

    def test_example2_matrix_true_distribution(self, example2_matrix):
        # the matrix as printed is a [7,4,2] code; brute force agrees
        c = code_from_matrix(example2_matrix)
        wd = weight_distribution(c)
        assert wd.counts == tuple(oracle_weight_distribution(example2_matrix.entries.tolist(), 2, 7))
        assert wd.enumerator() == "1 + z^2 + 6z^3 + 5z^4 + 2z^5 + z^6"

    def test_membership_and_encode(self, example1_matrix):
        c = code_from_matrix(example1_matrix)
        for w in c.codewords():
            assert w in c
        assert [1, 0, 0, 0, 0, 0, 0] not in c
        assert c.encode([1, 1, 0]).tolist() == [1, 1, 0, 1, 0, 1, 0]
        with pytest.raises(LengthMismatch):
            [1, 0] in c

    def test_equality_rules(self, gf2, example1_matrix):
        c = code_from_matrix(example1_matrix)
        assert code_equal(c, code_from_matrix(GFMatrix(gf2, example1_matrix.entries[::-1])))
        sub = code_from_matrix(GFMatrix(gf2, example1_matrix.entries[:2]))
        assert not code_equal(c, sub)
        with pytest.raises(LengthMismatch):
            code_equal(c, code_from_matrix(GFMatrix(gf2, [[1, 1]])))
        with pytest.raises(SpecMismatch):
            code_equal(c, code_from_matrix(GFMatrix(make_field(3), example1_matrix.entries)))

    def test_zero_code(self, gf2):
        z = code_from_matrix(GFMatrix(gf2, [[0, 0, 0]]))
        assert z.k == 0
        assert weight_distribution(z).counts == (1, 0, 0, 0)
        with pytest.raises(ZeroCode):
            min_distance(z)

    def test_enumeration_cap(self, gf2):
        big = code_from_matrix(GFMatrix(gf2, np.eye(21, dtype=int)))
        with pytest.raises(TooLarge):
            weight_distribution(big)

    @settings(max_examples=40, deadline=None)
    @given(matrices(2, 5, 10))
    def test_weight_total(self, rows):
        m = GFMatrix(make_field(2), rows)
        assert weight_distribution(code_from_matrix(m)).total == 2 ** rank(m)

    def test_enumerator_format(self):
        assert WeightDistribution((1, 2, 0, 1)).enumerator() == "1 + 2z + z^3"


class TestCyclic:
    def test_hamming_is_cyclic_from_generator(self, gf2):
        g = GFPolynomial(gf2, [1, 1, 0, 1])
        c = cyclic_code(g, 7)
        assert c.k == 4 and is_cyclic(c)
        assert weight_distribution(c).enumerator() == "1 + 7z^3 + 7z^4 + z^7"
        assert code_equal(c, code_from_matrix(GFMatrix(gf2, HAMMING_G)))

    def test_degenerate_generators(self, gf2):
        assert cyclic_code(GFPolynomial(gf2, [1]), 7).k == 7
        assert cyclic_code(x_n_minus_1(gf2, 7), 7).k == 0

    @pytest.mark.parametrize("n,p", [(7, 2), (9, 2), (8, 3), (15, 2)])
    def test_dimension_from_generator_degree(self, n, p):
        F = make_field(p)
        for coeffs in sympy_divisors(n, p):
            g = GFPolynomial(F, coeffs)
            c = cyclic_code(g, n)
            assert c.k == n - g.degree
            assert is_cyclic(c)
            assert check_polynomial(g, n) * g == x_n_minus_1(F, n)

    def test_generator_polynomial_is_gcd(self, gf2):
        f = GFPolynomial(gf2, [1, 0, 1, 1, 1])  # (x+1)(x^3+x+1)
        g = generator_polynomial(f, 7)
        assert (x_n_minus_1(gf2, 7) % g).is_zero() and (f % g).is_zero()
        assert code_equal(cyclic_code(f, 7), cyclic_code(g, 7))

    def test_not_divisor(self, gf2):
        with pytest.raises(NotDivisor):
            check_polynomial(GFPolynomial(gf2, [1, 0, 1, 0, 0, 1]), 7)

    def test_poly_helpers(self, gf2):
        f = GFPolynomial(gf2, [1, 1, 0, 1])
        assert reciprocal(f).to_ints() == [1, 0, 1, 1]
        assert poly_gcd(f, GFPolynomial(gf2, [1, 1])).to_ints() == [1]
        assert poly_gcd(f * GFPolynomial(gf2, [1, 1]), f).to_ints() == [1, 1, 0, 1]

    def test_cyclic_spec_validation(self, gf2):
        with pytest.raises(ValueError):
            CyclicSpec(gf2, 7, GFPolynomial(gf2, []))
        with pytest.raises(ValueError):
            CyclicSpec(gf2, 3, GFPolynomial(gf2, [1, 0, 0, 1]))

    def test_cosets_and_orders(self):
        assert cyclotomic_cosets(7, 2) == [[0], [1, 2, 4], [3, 6, 5]]
        assert sorted(len(c) for c in cyclotomic_cosets(15, 2)) == [1, 2, 4, 4, 4]
        assert multiplicative_order_mod(2, 7) == 3
        assert multiplicative_order_mod(3, 13) == 3
        assert multiplicative_order_mod(2, 9) == 6


def test_linear_code_repr(gf2):
    assert "[7,3]" in repr(code_from_matrix(GFMatrix(gf2, [[1] * 7, [0, 1] + [0] * 5, [0, 0, 1, 0, 0, 0, 0]])))
    assert isinstance(code_from_matrix(GFMatrix(gf2, [[1]])), LinearCode)
