import warnings

import pytest

from qcrc import PauliString, QcrcWarning, Syndrome, SympVec, build_lookup_table, build_structured, tau, tau_inv
from qcrc.errors import InvalidCodeError
from qcrc.fast_decoder import (
    decode_subcode,
    deinterleave_error,
    fast_decode,
    interleave_error,
    split_subsyndromes,
    structured_poly,
    structured_syndrome,
)
from qcrc.gf2poly import divides_xn_minus_1
from qcrc.pauli import iter_pauli_bursts, pauli_cbl
from qcrc.qcode import generic_decode, is_stabilizer_equivalent, quantum_syndrome

TABLE_C1 = [
    ("XIIII", "-+--"),
    ("YIIII", "++--"),
    ("IIIXI", "--+-"),
    ("IIIYI", "--++"),
    ("IIIIZ", "----"),
    ("IIIIY", "+--+"),
]

TABLE_C2 = [
    ("IXIIIIIII", "---+----"),
    ("XXIIIIIII", "--++---+"),
    ("ZXIIIIIII", "+--+----"),
    ("YXIIIIIII", "+-++---+"),
    ("IYIIIIIII", "-+-+----"),
    ("XYIIIIIII", "-+++---+"),
    ("ZYIIIIIII", "++-+----"),
    ("YYIIIIIII", "++++---+"),
    ("IXIIIIIII", "---+----"),
    ("IXXIIIIII", "+--++---"),
    ("IXZIIIIII", "--++----"),
    ("IXYIIIIII", "+-+++---"),
    ("IYIIIIIII", "-+-+----"),
    ("IYXIIIIII", "++-++---"),
    ("IYZIIIIII", "-+++----"),
    ("IYYIIIIII", "+++++---"),
    ("IIIIIIXII", "----+---"),
    ("IIIIIXXII", "---++--+"),
    ("IIIIIZXII", "----++--"),
    ("IIIIIYXII", "---+++-+"),
    ("IIIIIIYII", "----+-+-"),
    ("IIIIIXYII", "---++-++"),
    ("IIIIIZYII", "----+++-"),
    ("IIIIIYYII", "---+++++"),
    ("IIIIIIXII", "----+---"),
    ("IIIIIIXXI", "+---++--"),
    ("IIIIIIXZI", "----+--+"),
    ("IIIIIIXYI", "+---++-+"),
    ("IIIIIIYII", "----+-+-"),
    ("IIIIIIYXI", "+---+++-"),
    ("IIIIIIYZI", "----+-++"),
    ("IIIIIIYYI", "+---++++"),
    ("IIIIIIIIZ", "--------"),
    ("IIIIIIIXZ", "+----+--"),
    ("IIIIIIIZZ", "-------+"),
    ("IIIIIIIYZ", "+----+-+"),
    ("IIIIIIIIY", "-+----+-"),
    ("IIIIIIIXY", "++---++-"),
    ("IIIIIIIZY", "-+----++"),
    ("IIIIIIIYY", "++---+++"),
    ("IIIIIIIIZ", "--------"),
    ("XIIIIIIIZ", "--+----+"),
    ("ZIIIIIIIZ", "+-------"),
    ("YIIIIIIIZ", "+-+----+"),
    ("IIIIIIIIY", "-+----+-"),
    ("XIIIIIIIY", "-++---++"),
    ("ZIIIIIIIY", "++----+-"),
    ("YIIIIIIIY", "+++---++"),
]
WORKED_SYNDROME = "++---+-+++---+++"
WORKED_ERROR = "IIIIIIYXXIIIIIIIII"


def table_rows(table):
    return [(str(E), s.to_signs()) for E, s in table.rows]


def dedup(rows):
    seen, out = set(), []
    for r in rows:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


# -- construction ----------------------------------------------------------


def test_build_examples():
    code = build_structured(9, 2, 2)
    assert (code.n, code.k, code.l, code.r) == (18, 2, 4, 16)
    big = build_structured(5, 1, 7)
    assert (big.n, big.l) == (35, 7)
    with pytest.raises(InvalidCodeError, match="Reiger"):
        build_structured(5, 2, 1)
    with pytest.raises(InvalidCodeError):
        build_structured(5, 1, 0)
    with pytest.raises(InvalidCodeError):
        build_structured(5, 0, 1)


@pytest.mark.parametrize("m,c,k", [(5, 1, 1), (5, 1, 4), (9, 2, 3), (13, 3, 2), (7, 1, 3)])
def test_structured_invariants(m, c, k):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QcrcWarning)
        code = build_structured(m, c, k)
    assert divides_xn_minus_1(code.g, code.n)
    assert code.g == structured_poly(m, k)
    base_rows = code.base.G.to_text()
    full = [row.split("|") for row in code.inner.G.to_text()]
    for j in range(k):
        picked = [f"{x[j::k]}|{z[j::k]}" for x, z in full[j::k]]
        assert picked == base_rows
        others = [f"{x[j::k]}{z[j::k]}" for i, (x, z) in enumerate(full) if i % k != j]
        assert all(set(s) == {"0"} for s in others)
    if m == 4 * c + 1:
        assert code.n - code.k == 4 * code.l


def test_wide_base_warns_and_uses_ck():
    with pytest.warns(QcrcWarning):
        code = build_structured(7, 1, 3)
    assert code.l == 3


@pytest.mark.parametrize("m,c", [(6, 1), (12, 2), (14, 3)])
def test_wide_base_without_burst_correction_is_rejected(m, c):
    # e.g. on six qubits with shift 1, Y1 and Y4 share a syndrome
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QcrcWarning)
        with pytest.raises(InvalidCodeError, match="does not correct"):
            build_structured(m, c, 2)


# -- sub-syndromes and interleaving -----------------------------------------


def test_split_worked_syndrome():
    subs = split_subsyndromes(Syndrome.parse(WORKED_SYNDROME), 2)
    assert [s.to_signs() for s in subs] == ["+---+--+", "+-+++-++"]


def test_split_trivial_cases():
    s = Syndrome.parse("+-+--")
    assert split_subsyndromes(s, 1) == [s]
    assert split_subsyndromes(Syndrome(0, 12), 3) == [Syndrome(0, 4)] * 3
    with pytest.raises(ValueError):
        split_subsyndromes(Syndrome(0, 10), 3)


def test_interleave_examples():
    E = interleave_error([PauliString("IIIYXIIII"), PauliString("IIIXIIIII")])
    assert str(E) == WORKED_ERROR
    assert interleave_error([PauliString("XYZ")]) == PauliString("XYZ")
    assert interleave_error([PauliString("III")] * 4) == PauliString.identity(12)
    assert deinterleave_error(E, 2) == [PauliString("IIIYXIIII"), PauliString("IIIXIIIII")]


def test_global_position_formula():
    # letter p of copy j sits at k(p-1)+j
    m, k = 5, 3
    for j in range(1, k + 1):
        for p in range(1, m + 1):
            subs = [PauliString.identity(m)] * k
            letters = ["I"] * m
            letters[p - 1] = "Y"
            subs[j - 1] = PauliString("".join(letters))
            E = interleave_error(subs)
            assert str(E).index("Y") + 1 == k * (p - 1) + j


# -- lookup tables ----------------------------------------------------------


def test_table_c1_matches_reference_rows():
    table = build_lookup_table(5, 1, cyclic=True)
    assert table_rows(table) == TABLE_C1
    assert len(table) == 6


def test_table_c2_matches_reference_rows():
    table = build_lookup_table(9, 2, cyclic=True)
    rows = table_rows(table)
    assert len(rows) == 48
    assert rows == TABLE_C2
    assert dedup(rows) == dedup(TABLE_C2)
    assert len(table) == len(dedup(TABLE_C2)) == 42


@pytest.mark.parametrize("m,c", [(5, 1), (9, 2), (13, 3), (7, 1), (11, 2)])
def test_table_sizes(m, c):
    cyclic = build_lookup_table(m, c, cyclic=True)
    flat = build_lookup_table(m, c, cyclic=False)
    assert len(cyclic.rows) == 6 * c * 4 ** (c - 1)
    assert len(flat.rows) == 4 * c * 4 ** (c - 1) + 2 * 4 ** (c - 1)


@pytest.mark.parametrize("m,c", [(5, 1), (9, 2), (13, 3)])
def test_table_rows_are_consistent_bursts(m, c):
    table = build_lookup_table(m, c)
    for E, s in table.rows:
        assert pauli_cbl(E) <= c
        v = tau(E)
        assert table.syndrome_of(v.x, v.z) == s.bits
        assert quantum_syndrome(table_base(m, c), v) == s


def table_base(m, c):
    return build_structured(m, c, 1).base


def test_table_requires_reiger():
    with pytest.raises(InvalidCodeError):
        build_lookup_table(8, 2)


# -- sub-code decoding ------------------------------------------------------


def test_decode_subcode_worked_trace():
    table = build_lookup_table(9, 2)
    trace = []
    E1 = decode_subcode(Syndrome.parse("+---+--+"), table, 9, 2, trace=trace)
    assert str(E1) == "IIIYXIIII"
    assert trace == [
        ("fork", 4, "IIIXIIIII", "++--++-+"),
        ("fork", 5, "IIIXXIIII", "+++-++++"),
        ("z", None, "IIIYXIIII", None),
    ]
    assert str(decode_subcode(Syndrome.parse("+-+++-++"), table)) == "IIIXIIIII"


def test_decode_subcode_identity_and_table_hit():
    table = build_lookup_table(9, 2)
    assert decode_subcode(Syndrome(0, 8), table) == PauliString.identity(9)
    trace = []
    assert str(decode_subcode(Syndrome.parse("---+----"), table, trace=trace)) == "IXIIIIIII"
    assert trace[0][0] == "table"


def test_decode_subcode_argument_checks():
    table = build_lookup_table(5, 1)
    with pytest.raises(ValueError):
        decode_subcode(Syndrome(0, 4), table, m=9, c=2)
    with pytest.raises(ValueError):
        decode_subcode(Syndrome(0, 8), table)


@pytest.mark.parametrize("m,c", [(5, 1), (9, 2), (13, 3), (7, 1), (10, 2)])
def test_fork_scan_recovers_every_short_burst_exactly(m, c):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QcrcWarning)
        table = build_lookup_table(m, c)
        base = build_structured(m, c, 1).base
    for x, z in iter_pauli_bursts(m, c):
        s = quantum_syndrome(base, SympVec(m, x, z))
        assert decode_subcode(s, table) == tau_inv(SympVec(m, x, z))


@pytest.mark.parametrize("m,c", [(5, 1), (9, 2)])
def test_every_sub_syndrome_gets_a_consistent_answer(m, c):
    # leftover flags are always explainable by Z errors below position m,
    # so outside the correctable set the answer is best effort but consistent
    table = build_lookup_table(m, c)
    for bits in range(1 << (m - 1)):
        v = tau(decode_subcode(Syndrome(bits, m - 1), table))
        assert table.syndrome_of(v.x, v.z) == bits


def test_phantom_fork_is_avoided():
    # X5 X6 raise flags 3, 7 and 4, 8; a plain left-to-right scan pairs 8
    # and 3 into a fork at position 1
    table = build_lookup_table(9, 2)
    base = build_structured(9, 2, 1).base
    s = quantum_syndrome(base, tau(PauliString("IIIIXXIII")))
    assert s.to_signs() == "++--++--"
    assert str(decode_subcode(s, table)) == "IIIIXXIII"


# -- full decoder -------------------------------------------------------------


def test_worked_example(code_18_2):
    assert str(fast_decode(code_18_2, Syndrome.parse(WORKED_SYNDROME))) == WORKED_ERROR
    assert fast_decode(code_18_2, Syndrome(0, 16)) == PauliString.identity(18)
    with pytest.raises(ValueError):
        fast_decode(code_18_2, Syndrome(0, 15))


def test_subcode_bursts_are_short(code_18_2):
    for x, z in iter_pauli_bursts(18, 4):
        E = tau_inv(SympVec(18, x, z))
        for sub in deinterleave_error(E, 2):
            assert pauli_cbl(sub) <= 2


@pytest.mark.parametrize("m,c,k", [(5, 1, 1), (9, 2, 1), (9, 2, 2), (5, 1, 3), (13, 3, 1)])
def test_fast_decode_every_burst_exactly(m, c, k):
    code = build_structured(m, c, k)
    for x, z in iter_pauli_bursts(code.n, code.l):
        E = tau_inv(SympVec(code.n, x, z))
        s = structured_syndrome(code, E)
        assert s == quantum_syndrome(code.inner, tau(E))
        assert fast_decode(code, s) == E


@pytest.mark.parametrize("m,c,k", [(7, 1, 2), (10, 2, 2), (8, 1, 3)])
def test_wide_base_codes_still_correct(m, c, k):
    with pytest.warns(QcrcWarning):
        code = build_structured(m, c, k)
    for x, z in iter_pauli_bursts(code.n, code.l):
        E = tau_inv(SympVec(code.n, x, z))
        guess = fast_decode(code, structured_syndrome(code, E))
        assert is_stabilizer_equivalent(code.inner, guess, E)


def test_agrees_with_generic_decoder_on_18_2(code_18_2):
    inner = code_18_2.inner
    for x, z in iter_pauli_bursts(18, 4):
        e = SympVec(18, x, z)
        s = quantum_syndrome(inner, e)
        assert is_stabilizer_equivalent(inner, fast_decode(code_18_2, s), generic_decode(inner, s))


def test_structured_syndrome_checks_length(code_18_2):
    with pytest.raises(ValueError):
        structured_syndrome(code_18_2, PauliString.identity(9))


def test_decode_time_grows_linearly():
    from qcrc.bench import doubling_ratios, measure_scaling

    points = measure_scaling(5, 1, [256, 512, 1024, 2048], seed=0)
    for ratio in doubling_ratios(points):
        assert 1.5 <= ratio <= 3.0
