import numpy as np
import pytest

from conftest import code_words, oracle_weight_distribution
from tracecodes.bases import dual_basis, polynomial_basis
from tracecodes.codes import code_equal, code_from_matrix, weight_distribution
from tracecodes.errors import NonIntegerSum, ParseError, SpecMismatch
from tracecodes.galois import make_field, parse_element, rel_trace
from tracecodes.trace_construction import (
    CharacterSum,
    DefiningSet,
    char_sum,
    character_sum_over_ground,
    codeword,
    generator_matrix_from_D,
    n_x_zero,
    parse_defining_set,
    trace_code,
    trace_codewords,
    weight_distribution_via_character_sums,
    weight_via_character_sum,
)

EXAMPLE1_D = "1, g, g^2, 1, g^3, g^4, g^2"


@pytest.fixture
def example1_D(gf8):
    return parse_defining_set(EXAMPLE1_D, big_spec=gf8)


class TestDefiningSet:
    def test_parse_and_print(self, gf8, example1_D):
        assert example1_D.n == 7 and example1_D.m == 3
        assert example1_D.power_notation() == EXAMPLE1_D
        assert parse_defining_set(example1_D.to_text()) == example1_D
        assert parse_defining_set("# header comment\n2,3,1,1,0,1\n[1,0,0], [0,1,0]").n == 2

    def test_invalid(self, gf8, gf16):
        with pytest.raises(ParseError):
            parse_defining_set("", big_spec=gf8)
        with pytest.raises(ValueError):
            DefiningSet(gf8, 1, ())
        with pytest.raises(SpecMismatch):
            DefiningSet(gf8, 1, (gf16.one,))

    def test_repeats_allowed(self, gf8):
        D = DefiningSet(gf8, 1, (gf8.one,) * 3)
        assert trace_code(D).k == 1


class TestTraceCode:
    def test_example1_equals_given_matrix(self, example1_D, example1_matrix):
        assert code_equal(trace_code(example1_D), code_from_matrix(example1_matrix))

    def test_example1_matrix_from_polynomial_basis(self, gf8, example1_D, example1_matrix):
        # columns of G are the coordinates of d_i in {1, a, a^2}
        G = generator_matrix_from_D(example1_D, polynomial_basis(gf8))
        assert G == example1_matrix

    def test_trace_matrix_uses_dual_basis(self, gf8, example1_D):
        # Tr(x d_i) for x running over the dual basis gives the coordinate rows
        B = polynomial_basis(gf8)
        dual = dual_basis(B)
        rows = np.stack([codeword(x, example1_D) for x in dual])
        assert rows.tolist() == generator_matrix_from_D(example1_D, B).entries.tolist()

    @pytest.mark.parametrize(
        "p,s,m,n,seed",
        [(2, 1, 3, 7, 0), (2, 1, 4, 10, 1), (3, 1, 2, 5, 2), (2, 2, 2, 6, 3), (3, 2, 2, 4, 4), (5, 1, 2, 6, 5)],
    )
    def test_span_equals_exhaustive(self, p, s, m, n, seed):
        rng = np.random.default_rng(seed)
        big = make_field(p, s * m)
        D = DefiningSet(big, s, tuple(big(int(v)) for v in rng.integers(0, big.order, n)))
        assert code_words(trace_code(D)) == trace_codewords(D)

    def test_codeword_is_linear(self, gf16, example1_D):
        gf4 = make_field(2, 2)
        D = DefiningSet(gf16, 2, tuple(gf16.root ** i for i in (0, 3, 7, 11)))
        x, y = gf16.root**2, gf16.root**9
        lam = gf16.root**5  # generates GF(4) inside GF(16)
        cx, cy = codeword(x, D), codeword(y, D)
        lam4 = gf4.root
        got = codeword(lam * x + y, D)
        want = [(lam4 * gf4(int(a)) + gf4(int(b))).value for a, b in zip(cx, cy)]
        assert got.tolist() == want

    def test_codeword_spec_mismatch(self, gf16, example1_D):
        with pytest.raises(SpecMismatch):
            codeword(gf16.one, example1_D)

    def test_trace_values_match_direct_sum(self, gf8, example1_D):
        for x in gf8.elements():
            direct = [rel_trace(x * d).value for d in example1_D]
            assert codeword(x, example1_D).tolist() == direct


class TestCharacterSums:
    def test_canonical_form(self):
        assert CharacterSum((3, 1, 1)) == CharacterSum((2, 0, 0))
        assert CharacterSum((3, 1, 1)).to_int() == 2
        assert CharacterSum((5, 2)).to_int() == 3
        assert not CharacterSum((1, 0, 2)).is_integer()
        with pytest.raises(NonIntegerSum):
            CharacterSum((1, 0, 2)).to_int()

    def test_full_field_sum_vanishes(self):
        for p, d in [(2, 3), (3, 2), (5, 1)]:
            spec = make_field(p, d)
            assert char_sum(spec.elements()).to_int() == 0

    def test_example1_weights(self, gf8, example1_D):
        for x in gf8.elements():
            direct = int(np.count_nonzero(codeword(x, example1_D)))
            assert weight_via_character_sum(x, example1_D) == direct
            s = character_sum_over_ground(x, example1_D)
            assert 2 * n_x_zero(x, example1_D) - 7 == s.to_int()

    @pytest.mark.parametrize("p,s,m", [(3, 1, 2), (2, 2, 2), (5, 1, 2), (3, 2, 1)])
    def test_identity_non_binary(self, p, s, m):
        rng = np.random.default_rng(p * 10 + s + m)
        big = make_field(p, s * m)
        D = DefiningSet(big, s, tuple(big(int(v)) for v in rng.integers(0, big.order, 6)))
        q = p**s
        for x in big.elements():
            assert weight_via_character_sum(x, D) == int(np.count_nonzero(codeword(x, D)))
            assert q * n_x_zero(x, D) - D.n == character_sum_over_ground(x, D).to_int()

    def test_distribution_routes_agree(self, gf8, example1_D, example1_matrix):
        wd = weight_distribution(trace_code(example1_D))
        assert weight_distribution_via_character_sums(example1_D) == wd
        assert list(wd.counts) == oracle_weight_distribution(example1_matrix.entries.tolist(), 2, 7)

    def test_distribution_with_kernel(self):
        # D inside a proper subfield: many x give the same codeword
        big = make_field(2, 4)
        D = DefiningSet(big, 1, (big.one, big.one, big.root**5))
        wd = weight_distribution(trace_code(D))
        assert weight_distribution_via_character_sums(D) == wd
        assert wd.total == 2 ** trace_code(D).k


def test_coefficient_notation_round_trip(gf16):
    D = parse_defining_set("[1,0,0,0], g^7, [0,1,1,1]", big_spec=gf16)
    assert D[2] == parse_element("g^11", gf16)
    assert parse_defining_set(D.coeff_notation(), big_spec=gf16) == D
