"""Packed codeword streams.

Layout (all header integers big-endian)::

    offset  size  field
    0       4     magic  b"EUC1"
    4       1     scheme id (1=unary 2=spatial 3=su 4=eu-ik 5=eu-fk)
    5       2     n
    7       2     k
    9       8     count of codewords
    17      ...   codewords, highest position first, packed back to back,
                  zero-padded to a byte boundary at the very end

Classic unary words are self-delimiting, so unary streams carry ``n = k = 0``.
"""

import io
import struct
from dataclasses import dataclass
from typing import BinaryIO, Iterable, List, Sequence, Tuple, Union

from .codecs import CodecParams, Codeword, Scheme, capacity, decode, encode, validate
from .errors import (
    BadMagic,
    CodeError,
    CorruptHeader,
    InvalidCodeword,
    NonzeroPadding,
    OutOfRange,
    TrailingData,
    TruncatedStream,
    ValidationError,
)

__all__ = [
    "MAGIC",
    "HEADER_SIZE",
    "SCHEME_IDS",
    "StreamHeader",
    "BitWriter",
    "BitReader",
    "pack",
    "unpack",
    "packb",
    "unpackb",
    "CorruptionReport",
    "single_bit_corruption_report",
]

MAGIC = b"EUC1"
_HEADER = struct.Struct(">4sBHHQ")
HEADER_SIZE = _HEADER.size

SCHEME_IDS = {
    Scheme.CLASSIC_UNARY: 1,
    Scheme.SPATIAL_UNARY: 2,
    Scheme.SPREAD_UNARY: 3,
    Scheme.EXTENDED_INCREASING_K: 4,
    Scheme.EXTENDED_FIXED_K: 5,
}
_SCHEMES_BY_ID = {v: k for k, v in SCHEME_IDS.items()}


@dataclass(frozen=True)
class StreamHeader:
    params: CodecParams
    count: int

    def to_bytes(self) -> bytes:
        p = self.params
        if not (0 <= p.n < 2**16 and 0 <= p.k < 2**16):
            raise ValidationError(f"n and k must fit in 16 bits for streaming ({p})")
        return _HEADER.pack(MAGIC, SCHEME_IDS[p.scheme], p.n, p.k, self.count)

    @classmethod
    def from_bytes(cls, data: bytes) -> "StreamHeader":
        if len(data) < len(MAGIC) or data[:4] != MAGIC:
            raise BadMagic(f"stream does not start with {MAGIC!r}")
        if len(data) < HEADER_SIZE:
            raise CorruptHeader(f"header is {len(data)} bytes, expected {HEADER_SIZE}")
        _, scheme_id, n, k, count = _HEADER.unpack(data[:HEADER_SIZE])
        if scheme_id not in _SCHEMES_BY_ID:
            raise CorruptHeader(f"unknown scheme id {scheme_id}")
        params = CodecParams(_SCHEMES_BY_ID[scheme_id], n, k)
        try:
            validate(params)
        except ValidationError as exc:
            raise CorruptHeader(f"header parameters are invalid: {exc}") from exc
        return cls(params, count)


class BitWriter:
    """MSB-first bit sink over a binary file object."""

    def __init__(self, sink: BinaryIO):
        self.sink = sink
        self._acc = 0
        self._nacc = 0
        self.bytes_written = 0

    def write(self, value: int, nbits: int) -> None:
        self._acc = (self._acc << nbits) | value
        self._nacc += nbits
        if self._nacc >= 8:
            whole = self._nacc // 8
            self._nacc -= whole * 8
            chunk = (self._acc >> self._nacc).to_bytes(whole, "big")
            self._acc &= (1 << self._nacc) - 1
            self.sink.write(chunk)
            self.bytes_written += whole

    def flush(self) -> None:
        """Zero-pad the final partial byte."""
        if self._nacc:
            self.write(0, 8 - self._nacc)


class BitReader:
    """MSB-first bit source over a binary file object."""

    def __init__(self, source: BinaryIO, chunk_size: int = 4096):
        self.source = source
        self.chunk_size = chunk_size
        self._acc = 0
        self._nacc = 0
        self._eof = False

    def _fill(self, nbits: int) -> bool:
        while self._nacc < nbits and not self._eof:
            chunk = self.source.read(self.chunk_size)
            if not chunk:
                self._eof = True
                break
            self._acc = (self._acc << (8 * len(chunk))) | int.from_bytes(chunk, "big")
            self._nacc += 8 * len(chunk)
        return self._nacc >= nbits

    def read(self, nbits: int) -> int:
        if not self._fill(nbits):
            raise TruncatedStream(f"needed {nbits} bits, only {self._nacc} left")
        self._nacc -= nbits
        value = self._acc >> self._nacc
        self._acc &= (1 << self._nacc) - 1
        return value

    def read_unary(self) -> int:
        """Count ones up to and including the terminating zero."""
        ones = 0
        while self.read(1):
            ones += 1
        return ones

    def finish(self) -> None:
        """Check that only zero padding (less than a byte) remains."""
        if self._nacc >= 8:
            raise TrailingData(f"{self._nacc // 8} unexpected bytes after the last codeword")
        if self._acc:
            raise NonzeroPadding("padding bits after the last codeword are not zero")
        self._nacc = 0
        if self._fill(1):
            raise TrailingData("unexpected bytes after the last codeword")


def pack(params: CodecParams, values: Iterable[int], sink: BinaryIO) -> int:
    """Write a header and the packed codewords of ``values``; return bytes written."""
    validate(params)
    values = list(values)
    top = capacity(params)
    for index, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0 or (top is not None and v > top):
            raise OutOfRange(f"value {v!r} at index {index} is outside 0..{top}")

    header = StreamHeader(params, len(values)).to_bytes()
    sink.write(header)
    writer = BitWriter(sink)
    for v in values:
        cw = encode(params, v)
        writer.write(cw.word, cw.n)
    writer.flush()
    return len(header) + writer.bytes_written


def unpack(source: Union[BinaryIO, bytes, bytearray, memoryview]) -> Tuple[CodecParams, List[int]]:
    if isinstance(source, (bytes, bytearray, memoryview)):
        source = io.BytesIO(bytes(source))
    header = StreamHeader.from_bytes(source.read(HEADER_SIZE))
    params = header.params
    reader = BitReader(source)
    values = []
    for index in range(header.count):
        if params.scheme is Scheme.CLASSIC_UNARY:
            values.append(reader.read_unary())
            continue
        cw = Codeword(reader.read(params.n), params.n)
        try:
            values.append(decode(params, cw))
        except InvalidCodeword as exc:
            raise InvalidCodeword(f"codeword {index}: {exc}", index=index) from exc
    reader.finish()
    return params, values


def packb(params: CodecParams, values: Iterable[int]) -> bytes:
    buf = io.BytesIO()
    pack(params, values, buf)
    return buf.getvalue()


def unpackb(data: bytes) -> Tuple[CodecParams, List[int]]:
    return unpack(data)


@dataclass(frozen=True)
class CorruptionReport:
    flips: int
    detected: int
    undetected: int

    @property
    def detected_fraction(self) -> float:
        return self.detected / self.flips if self.flips else 0.0


def single_bit_corruption_report(params: CodecParams, values: Sequence[int]) -> CorruptionReport:
    """Flip every payload bit of the packed stream in turn and count rejections.

    A flip the decoder accepts always yields in-range values, since ``decode``
    only returns values it could have encoded.
    """
    data = bytearray(packb(params, values))
    payload_bits = sum(encode(params, v).n for v in values)
    detected = 0
    for b in range(payload_bits):
        pos, mask = HEADER_SIZE + b // 8, 0x80 >> (b % 8)
        data[pos] ^= mask
        try:
            unpackb(bytes(data))
        except CodeError:
            detected += 1
        data[pos] ^= mask
    return CorruptionReport(payload_bits, detected, payload_bits - detected)
