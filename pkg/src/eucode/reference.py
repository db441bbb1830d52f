"""Published code listings, transcribed verbatim, errors included.

Each listing is a tuple of ``(printed label, codeword string)`` rows in printed
order.  They are fixtures for comparison against generated tables; nothing in
the codecs depends on them.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .codecs import CodecParams


@dataclass(frozen=True)
class Listing:
    name: str
    params: CodecParams
    rows: Tuple[Tuple[int, str], ...]
    # Rows are 0, 1, 2, ... in order; labels are only kept to spot misprints.
    consecutive: bool = True
    claimed_ones: Optional[int] = None
    claimed_zeros: Optional[int] = None


EUIK_N3 = Listing(
    "eu-ik-3",
    CodecParams.of("eu-ik", 3),
    ((0, "000"), (1, "001"), (2, "010"), (3, "100"), (4, "011"), (5, "110"), (6, "111")),
)

EUFK_N7_K3 = Listing(
    "eu-fk-7-3",
    CodecParams.of("eu-fk", 7, 3),
    (
        (0, "0000000"), (1, "0000111"), (2, "0001110"), (3, "0011100"),
        (4, "0111000"), (5, "1110000"), (6, "0010111"), (7, "0101110"),
        (8, "1011100"), (9, "0111001"), (10, "1110010"), (11, "0100111"),
        (12, "1001110"), (13, "0011101"), (14, "0111010"), (15, "1110100"),
    ),
)

# Spread unary, k = 2, 10-bit words.  The accompanying text claims 30 ones and
# 120 zeros over these rows.
SU_N10_K2 = Listing(
    "su-10-2",
    CodecParams.of("su", 10, 2),
    (
        (0, "0000000000"), (1, "0000000011"), (2, "0000000110"), (3, "0000001100"),
        (4, "0000011000"), (5, "0000110000"), (6, "0001100000"), (7, "0011000000"),
        (8, "0011000000"), (9, "0110000000"), (10, "1100000000"),
    ),
    claimed_ones=30,
    claimed_zeros=120,
)

# Fixed-spread listing captioned k = 2; the words are 10 bits wide.  The row
# after 38 is labelled 29 in print.
EUFK_N10_K2 = Listing(
    "eu-fk-10-2",
    CodecParams.of("eu-fk", 10, 2),
    (
        (0, "0000000000"), (1, "0000000011"), (2, "0000000110"), (3, "0000001100"),
        (4, "0000011000"), (5, "0000110000"), (6, "0001100000"), (7, "0011000000"),
        (8, "0011000000"), (9, "0110000000"), (10, "1100000000"),
        (11, "0000001011"), (12, "0000010110"), (13, "0000101100"), (14, "0001011000"),
        (15, "0010110000"), (16, "0101100000"), (17, "0101100000"), (18, "1011000000"),
        (19, "0110000001"), (20, "1100000010"),
        (21, "0000010011"), (22, "0000100110"), (23, "0001001100"), (24, "0010011000"),
        (25, "0010011000"), (26, "0100110000"), (27, "0011000000"), (28, "0011000001"),
        (29, "0110000010"), (30, "1100000100"),
        (31, "0000100011"), (32, "0001000110"), (33, "0010001100"), (34, "0010001100"),
        (35, "0100011000"), (36, "1000110000"), (37, "0011000001"), (38, "0011000010"),
        (29, "0110000100"), (40, "1100001000"),
    ),
)

# Sampled values, k = 2, n = 11.
EUFK_N11_K2_SAMPLE = Listing(
    "eu-fk-11-2-sample",
    CodecParams.of("eu-fk", 11, 2),
    ((43, "00100001100"), (46, "00001100001"), (58, "00110001000"),
     (77, "00011010000"), (80, "11010000000")),
    consecutive=False,
)

EUIK_N11_SAMPLE = Listing(
    "eu-ik-11-sample",
    CodecParams.of("eu-ik", 11),
    ((46, "00000111111"), (47, "00001111110"), (48, "00011111100")),
    consecutive=False,
)

ALL_LISTINGS = (EUIK_N3, EUFK_N7_K3, SU_N10_K2, EUFK_N10_K2, EUFK_N11_K2_SAMPLE, EUIK_N11_SAMPLE)

# (N, n) rows for eu-ik and (N, n, k) rows for eu-fk parameter selection.
EUIK_SIZES = (
    (10, 4), (15, 5), (21, 6), (28, 7), (36, 8), (45, 9), (55, 10),
    (66, 11), (78, 12), (210, 20), (1275, 50),
)
EUFK_SIZES = (
    (15, 6, 2), (24, 7, 2), (35, 8, 2), (48, 9, 2), (63, 10, 2), (80, 11, 2),
    (99, 12, 2), (120, 13, 2),
    (8, 6, 3), (15, 7, 3), (24, 8, 3), (35, 9, 3), (48, 10, 3), (63, 11, 3),
    (15, 8, 4), (24, 9, 4), (35, 10, 4), (48, 11, 4), (63, 12, 4),
    (15, 9, 5), (24, 10, 5), (35, 11, 5), (48, 12, 5), (63, 13, 5),
)
