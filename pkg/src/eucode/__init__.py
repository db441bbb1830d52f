"""Spread unary and extended unary fixed-length integer codes."""

__version__ = "0.1.0"

from .codecs import (
    CodecParams,
    Codeword,
    CycleCoordinates,
    Scheme,
    capacity,
    cyclic_shift_left,
    decode,
    encode,
    eufk_coords,
    euik_coords,
    validate,
)
from .errors import (
    CodeError,
    InvalidCodeword,
    InvalidK,
    InvalidN,
    KRequiredAtLeast2,
    LengthMismatch,
    OutOfRange,
)
from .oracle import CodeTable, decode_via_table, generate_table, verify_bijection
from .analysis import ParamQuery, compare_lengths, hamming_spectrum, select_params, weight_census
from .bitstream import pack, packb, unpack, unpackb
