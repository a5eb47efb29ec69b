"""Quantum cyclic-redundancy-check stabilizer codes.

Build a code from a CRC polynomial, compute syndromes two ways, decode
cyclic bursts (generically by table, or in linear time for the structured
family), and estimate decoding success over a correlated Pauli channel.
"""

from .channel import ChannelParams, SimStats, run_trials, sample_error, sweep
from .crc import CrcCode, build_crc, classical_burst_decode, classical_syndrome, has_c_property
from .errors import (
    AmbiguousSyndromeError,
    InfeasibleError,
    InvalidCodeError,
    QcrcError,
    QcrcWarning,
    UncorrectableError,
)
from .fast_decoder import (
    LookupTable,
    StructuredCode,
    build_lookup_table,
    build_structured,
    decode_subcode,
    fast_decode,
    interleave_error,
    split_subsyndromes,
)
from .gf2poly import (
    BinPoly,
    RingElem,
    cyclic_burst_length,
    cyclic_shift,
    divides_xn_minus_1,
    parse_poly,
    poly_add,
    poly_rem,
)
from .pauli import GenMatrix, PauliString, SympVec, check_genmatrix, pauli_cbl, symp_form, symp_weight, tau, tau_inv
from .qcode import (
    QcrcCode,
    Syndrome,
    build_qcrc,
    detects,
    generic_decode,
    quantum_syndrome,
    stabilizer_generators,
    syndrome_poly,
)

__all__ = [
    "ChannelParams",
    "SimStats",
    "run_trials",
    "sample_error",
    "sweep",
    "CrcCode",
    "build_crc",
    "classical_burst_decode",
    "classical_syndrome",
    "has_c_property",
    "AmbiguousSyndromeError",
    "InfeasibleError",
    "InvalidCodeError",
    "QcrcError",
    "QcrcWarning",
    "UncorrectableError",
    "LookupTable",
    "StructuredCode",
    "build_lookup_table",
    "build_structured",
    "decode_subcode",
    "fast_decode",
    "interleave_error",
    "split_subsyndromes",
    "BinPoly",
    "RingElem",
    "cyclic_burst_length",
    "cyclic_shift",
    "divides_xn_minus_1",
    "parse_poly",
    "poly_add",
    "poly_rem",
    "GenMatrix",
    "PauliString",
    "SympVec",
    "check_genmatrix",
    "pauli_cbl",
    "symp_form",
    "symp_weight",
    "tau",
    "tau_inv",
    "QcrcCode",
    "Syndrome",
    "build_qcrc",
    "detects",
    "generic_decode",
    "quantum_syndrome",
    "stabilizer_generators",
    "syndrome_poly",
]

__version__ = "0.1.0"
