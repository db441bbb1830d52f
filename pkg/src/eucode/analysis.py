"""Code metrics and parameter selection."""

from dataclasses import dataclass
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .codecs import CodecParams, Scheme, capacity, encode, validate
from .errors import OutOfRange, TableTooLarge, UnsupportedScheme
from .oracle import generate_table

__all__ = [
    "ParamQuery",
    "WeightCensus",
    "HammingSpectrum",
    "LengthRow",
    "select_params",
    "weight_census",
    "hamming_spectrum",
    "compare_lengths",
    "distance_histogram",
    "DEFAULT_SPECTRUM_MAX_ENTRIES",
]

# Spectrum work is quadratic in the table size.
DEFAULT_SPECTRUM_MAX_ENTRIES = 2**13


@dataclass(frozen=True)
class ParamQuery:
    scheme: Scheme
    target_max: int
    k: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.parse(self.scheme))
        if isinstance(self.target_max, bool) or not isinstance(self.target_max, int) \
                or self.target_max < 1:
            raise OutOfRange(f"target must be an integer >= 1, got {self.target_max!r}")


@dataclass(frozen=True)
class WeightCensus:
    params: CodecParams
    range_max: int
    total_ones: int
    total_zeros: int
    per_value_weights: Tuple[int, ...]


@dataclass(frozen=True)
class HammingSpectrum:
    params: CodecParams
    histogram: Dict[int, int]
    min_distance: Optional[int]

    @property
    def pairs(self) -> int:
        return sum(self.histogram.values())


@dataclass(frozen=True)
class LengthRow:
    scheme: Scheme
    k: Optional[int]
    bits: int


def _eu_fk_min_n(target: int, k: int) -> int:
    # smallest d = n - k with d*d - 1 >= target, and d >= 2 so that n > k + 1
    d = max(2, isqrt(target + 1))
    while d * d - 1 < target:
        d += 1
    return k + d


def _eu_ik_min_n(target: int) -> int:
    n = max(1, isqrt(2 * target) - 1)
    while n * n + n < 2 * target:
        n += 1
    return n


def select_params(q: ParamQuery) -> CodecParams:
    """Smallest word length whose capacity reaches ``q.target_max``."""
    scheme, target = q.scheme, q.target_max
    if scheme is Scheme.CLASSIC_UNARY:
        raise UnsupportedScheme("classic unary is variable length; there is no n to select")
    if scheme is Scheme.EXTENDED_INCREASING_K:
        params = CodecParams.of(scheme, _eu_ik_min_n(target))
    elif scheme is Scheme.SPATIAL_UNARY:
        params = CodecParams.of(scheme, target)
    elif q.k is None:
        raise UnsupportedScheme(f"scheme {scheme} needs k to select a word length")
    elif scheme is Scheme.SPREAD_UNARY:
        params = CodecParams.of(scheme, target + q.k - 1, q.k)
    else:
        params = CodecParams.of(scheme, _eu_fk_min_n(target, q.k), q.k)
    validate(params)
    return params


def weight_census(params: CodecParams, range_max: Optional[int] = None) -> WeightCensus:
    """Count ones and zeros over the codewords of ``0..range_max``."""
    top = capacity(params)
    if range_max is None:
        if top is None:
            raise OutOfRange("classic unary needs an explicit range_max")
        range_max = top
    if range_max < 0 or (top is not None and range_max > top):
        raise OutOfRange(f"range_max {range_max} outside 0..{top}")
    weights = []
    total_bits = 0
    for value in range(range_max + 1):
        cw = encode(params, value)
        weights.append(cw.popcount)
        total_bits += cw.n
    ones = sum(weights)
    return WeightCensus(params, range_max, ones, total_bits - ones, tuple(weights))


def hamming_spectrum(params: CodecParams,
                     max_entries: int = DEFAULT_SPECTRUM_MAX_ENTRIES) -> HammingSpectrum:
    """Exact histogram of pairwise distances between all codewords of ``params``."""
    if not params.scheme.fixed_length:
        raise UnsupportedScheme("Hamming distance needs equal-length codewords")
    if params.n > 64:
        raise TableTooLarge("word length above 64 bits is not supported by the spectrum")
    table = generate_table(params, max_entries=max_entries)
    histogram = distance_histogram([cw.word for cw in table.codewords()], params.n)
    return HammingSpectrum(params, histogram, min(histogram) if histogram else None)


def distance_histogram(words: Sequence[int], n: int) -> Dict[int, int]:
    """``{distance: number of pairs}`` over all unordered pairs of ``n``-bit words."""
    arr = np.asarray(words, dtype=np.uint64)
    counts = np.zeros(n + 1, dtype=np.int64)
    for i in range(len(arr) - 1):
        counts += np.bincount(np.bitwise_count(arr[i + 1:] ^ arr[i]), minlength=n + 1)
    return {d: int(c) for d, c in enumerate(counts) if c}


def compare_lengths(target: int, ks: Sequence[int] = (2, 3, 4, 5)) -> List[LengthRow]:
    """Bits needed by each scheme to represent ``0..target``."""
    rows = [
        LengthRow(Scheme.CLASSIC_UNARY, None, target + 1),
        LengthRow(Scheme.SPATIAL_UNARY, None, target),
    ]
    for k in ks:
        rows.append(LengthRow(Scheme.SPREAD_UNARY, k,
                              select_params(ParamQuery(Scheme.SPREAD_UNARY, target, k)).n))
    rows.append(LengthRow(Scheme.EXTENDED_INCREASING_K, None,
                          select_params(ParamQuery(Scheme.EXTENDED_INCREASING_K, target)).n))
    for k in ks:
        rows.append(LengthRow(Scheme.EXTENDED_FIXED_K, k,
                              select_params(ParamQuery(Scheme.EXTENDED_FIXED_K, target, k)).n))
    return rows
