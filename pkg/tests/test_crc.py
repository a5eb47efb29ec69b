import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcrc.crc import build_crc, classical_burst_decode, classical_syndrome, has_c_property, vector_to_poly
from qcrc.errors import AmbiguousSyndromeError, InfeasibleError, InvalidCodeError, UncorrectableError
from qcrc.fast_decoder import structured_poly
from qcrc.gf2poly import BinPoly, RingElem, divides_xn_minus_1, int_to_bits, iter_cyclic_bursts, poly_rem


def oracle_cbl(v: int, n: int) -> int:
    support = [i for i in range(n) if (v >> i) & 1]
    if not support:
        return 0
    for length in range(1, n + 1):
        for start in range(n):
            if all((i - start) % n < length for i in support):
                return length
    raise AssertionError


def oracle_c_property(g: BinPoly, n: int) -> bool:
    """Literal pair enumeration: is some b1 + b2 != 0 a multiple of g?"""
    t = g.degree // 2
    bursts = [v for v in range(1 << n) if oracle_cbl(v, n) <= t]
    for b1 in bursts:
        for b2 in bursts:
            if b1 != b2 and poly_rem(BinPoly(b1 ^ b2), g) == BinPoly(0):
                return False
    return True


def divisors(n: int) -> list[BinPoly]:
    return [BinPoly(v) for v in range(3, 1 << n, 2) if divides_xn_minus_1(BinPoly(v), n)]


def test_all_ones_generator_gives_identity_plus_ones_column():
    code = build_crc(BinPoly((1 << 9) - 1), 9)
    expected = np.hstack([np.eye(8, dtype=np.uint8), np.ones((8, 1), dtype=np.uint8)])
    assert code.k == 1
    assert np.array_equal(code.H, expected)


def test_x_plus_one_length_three():
    code = build_crc(BinPoly(0b11), 3)
    assert code.H.tolist() == [[1, 1, 1]]


@pytest.mark.parametrize("g,n", [(0b110, 5), (0b10011, 4), (0b10011, 3), (0b1, 4), (0b0, 4), (0b11, 0)])
def test_build_rejects_bad_generators(g, n):
    with pytest.raises(InvalidCodeError):
        build_crc(BinPoly(g), n)


def test_syndrome_of_zero_is_zero():
    code = build_crc(BinPoly(0b10011), 15)
    assert classical_syndrome(code, [0] * 15) == BinPoly(0)


@given(st.integers(0, (1 << 11) - 1))
def test_codewords_have_zero_syndrome(u):
    # null space of [I | R]: (R u, u)
    code = build_crc(BinPoly(0b10011), 15)
    R = code.H[:, 4:]
    u_vec = np.array(int_to_bits(u, 11), dtype=np.uint8)
    e = np.concatenate([(R.astype(int) @ u_vec) % 2, u_vec])
    assert classical_syndrome(code, e) == BinPoly(0)


gs = st.sampled_from([0b10011, 0b11111, 0b111010001, (1 << 9) - 1, 0b1011, 0b11])


@given(gs, st.integers(0, (1 << 30) - 1), st.integers(10, 30))
def test_matrix_syndrome_equals_polynomial_remainder(gv, e, n):
    g = BinPoly(gv)
    if g.degree >= n:
        return
    e %= 1 << n
    code = build_crc(g, n)
    bits = int_to_bits(e, n)
    assert classical_syndrome(code, bits) == poly_rem(vector_to_poly(bits), g)


@pytest.mark.parametrize("m,k", [(5, 1), (5, 2), (9, 1), (3, 2)])
def test_c_property_of_structured_generators(m, k):
    g = structured_poly(m, k)
    assert has_c_property(g, m * k) is oracle_c_property(g, m * k) is True


def test_c_property_regression_degree_four_length_ten():
    # 1 + X^5 = (X + 1) g is a sum of two single-bit bursts
    g = BinPoly(0b11111)
    assert oracle_c_property(g, 10) is False
    assert has_c_property(g, 10) is False


@pytest.mark.parametrize("n", range(3, 13))
def test_c_property_matches_pair_enumeration(n):
    for g in divisors(n):
        assert has_c_property(g, n) == oracle_c_property(g, n), (g, n)


def test_c_property_preconditions():
    with pytest.raises(InvalidCodeError):
        has_c_property(BinPoly(1), 5)
    with pytest.raises(InvalidCodeError):
        has_c_property(BinPoly(0b111), 4)
    with pytest.raises(InfeasibleError):
        has_c_property(structured_poly(9, 2), 18, cap=100)


@pytest.mark.parametrize("n", range(3, 21))
def test_round_trip_for_codes_with_c_property(n):
    for g in divisors(n):
        if g.degree > 12 or not has_c_property(g, n):
            continue
        code = build_crc(g, n)
        assert classical_burst_decode(code, BinPoly(0)).tolist() == [0] * n
        for e in iter_cyclic_bursts(n, g.degree // 2):
            bits = int_to_bits(e, n)
            s = classical_syndrome(code, bits)
            assert tuple(classical_burst_decode(code, s)) == bits


@pytest.mark.parametrize("n", range(3, 21))
def test_detects_bursts_up_to_redundancy(n):
    for g in divisors(n):
        if g.degree > 12:
            continue
        for e in iter_cyclic_bursts(n, g.degree, include_zero=False):
            assert poly_rem(BinPoly(e), g) != BinPoly(0), (g, n, e)


@pytest.mark.parametrize("n", range(3, 13))
def test_zero_syndrome_exactly_on_multiples(n):
    for g in divisors(n):
        k = n - g.degree
        multiples = {(RingElem(n, h) * RingElem.from_poly(g, n)).value for h in range(1 << k)}
        zero = {e for e in range(1 << n) if poly_rem(BinPoly(e), g) == BinPoly(0)}
        assert zero == multiples


def test_ambiguity_witness_without_c_property():
    # g = X^2 + 1 divides X^4 - 1, and 1 and X^2 share a remainder
    code = build_crc(BinPoly(0b101), 4)
    assert not has_c_property(BinPoly(0b101), 4)
    with pytest.raises(AmbiguousSyndromeError) as info:
        classical_burst_decode(code, BinPoly(1))
    assert {info.value.first, info.value.second} == {0b0001, 0b0100}


def test_uncorrectable_syndrome():
    # 73 bursts of length <= 4 on nine bits cannot reach all 256 syndromes
    code = build_crc(BinPoly((1 << 9) - 1), 9)
    used = set(code.burst_table)
    assert len(used) == 73
    missing = next(s for s in range(1 << 8) if s not in used)
    with pytest.raises(UncorrectableError):
        classical_burst_decode(code, BinPoly(missing))
