"""Encoders and decoders for the unary code family.

Five schemes are supported:

* ``unary``   -- classic unary, ``i`` ones then a terminating zero (variable length)
* ``spatial`` -- a single one at position ``i - 1`` of an ``n``-bit word
* ``su``      -- spread unary, a run of ``k`` ones whose rightmost one sits at ``i - 1``
* ``eu-ik``   -- extended unary with increasing spread; cycle ``m`` slides a run of
  ``m`` ones across the word
* ``eu-fk``   -- extended unary with fixed spread; cycles after the first add an
  isolated marker one at growing distance from the ``k``-run, and the whole
  pattern is rotated within a cycle

Bit position 0 is the rightmost digit of a word and words render
leftmost-first, so ``str(encode(p, 5))`` reads exactly as the code listings do.
Every fixed-length scheme maps 0 to the all-zeros word.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Union

from .errors import (
    InvalidCodeword,
    InvalidK,
    InvalidN,
    KRequiredAtLeast2,
    LengthMismatch,
    OutOfRange,
)

__all__ = [
    "Scheme",
    "CodecParams",
    "Codeword",
    "CycleCoordinates",
    "validate",
    "capacity",
    "encode",
    "decode",
    "euik_coords",
    "eufk_coords",
    "euik_cumulative",
    "cyclic_shift_left",
]


class Scheme(str, Enum):
    CLASSIC_UNARY = "unary"
    SPATIAL_UNARY = "spatial"
    SPREAD_UNARY = "su"
    EXTENDED_INCREASING_K = "eu-ik"
    EXTENDED_FIXED_K = "eu-fk"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown scheme {name!r} (expected one of {names})") from None

    @property
    def fixed_length(self) -> bool:
        return self is not Scheme.CLASSIC_UNARY

    def __str__(self):
        return self.value


# k must be supplied by the caller for these; the others have a forced value.
_DEFAULT_K = {
    Scheme.CLASSIC_UNARY: 0,
    Scheme.SPATIAL_UNARY: 1,
    Scheme.EXTENDED_INCREASING_K: 0,
}


@dataclass(frozen=True)
class CodecParams:
    """Scheme plus word length ``n`` and spread ``k``.

    Construction does not validate; call :func:`validate` (every codec entry
    point does). Use :meth:`of` to get the conventional ``k`` filled in for
    schemes that do not take one.
    """

    scheme: Scheme
    n: int = 0
    k: int = 0

    @classmethod
    def of(cls, scheme, n=0, k=None):
        scheme = Scheme.parse(scheme)
        if k is None:
            if scheme not in _DEFAULT_K:
                raise InvalidK(f"scheme {scheme} requires an explicit k")
            k = _DEFAULT_K[scheme]
        return cls(scheme, n, k)

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.parse(self.scheme))

    def __str__(self):
        return f"scheme={self.scheme.value} n={self.n} k={self.k}"


@dataclass(frozen=True)
class Codeword:
    """A bit pattern of length ``n`` stored as an integer mask.

    Bit ``p`` of ``word`` is position ``p`` (position 0 is the rightmost
    character of the rendered string).
    """

    word: int
    n: int

    def __post_init__(self):
        if self.n < 0 or self.word < 0 or self.word >> self.n:
            raise LengthMismatch(f"word {self.word:#x} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> "Codeword":
        text = text.strip()
        if text.strip("01"):
            raise InvalidCodeword(f"codeword {text!r} contains characters other than 0/1")
        return cls(int(text, 2) if text else 0, len(text))

    def __str__(self):
        return format(self.word, f"0{self.n}b") if self.n else ""

    def __len__(self):
        return self.n

    def bit(self, position: int) -> int:
        if not 0 <= position < self.n:
            raise IndexError(position)
        return (self.word >> position) & 1

    def to_list(self) -> list:
        """Bits leftmost-first, i.e. in rendering order."""
        return [(self.word >> p) & 1 for p in range(self.n - 1, -1, -1)]

    @property
    def popcount(self) -> int:
        return self.word.bit_count()


class CycleCoordinates(NamedTuple):
    """Cycle index (run length ``m`` for eu-ik) and 1-based offset in the cycle."""

    cycle: int
    offset: int


def _check_int(value, name, exc):
    if isinstance(value, bool) or not isinstance(value, int):
        raise exc(f"{name} must be an integer, got {value!r}")


def validate(params: CodecParams) -> None:
    """Raise a :class:`~eucode.errors.ValidationError` subclass unless ``params`` is usable."""
    scheme = params.scheme
    n, k = params.n, params.k
    _check_int(n, "n", InvalidN)
    _check_int(k, "k", InvalidK)

    if scheme is Scheme.CLASSIC_UNARY:
        if n != 0:
            raise InvalidN("classic unary is variable length; n must be 0")
        if k != 0:
            raise InvalidK("classic unary has no spread; k must be 0")
        return

    if n < 1:
        raise InvalidN(f"n must be at least 1, got {n}")

    if scheme is Scheme.SPATIAL_UNARY:
        if k != 1:
            raise InvalidK(f"spatial unary has k = 1, got {k}")
    elif scheme is Scheme.SPREAD_UNARY:
        if not 1 <= k <= n:
            raise InvalidK(f"spread unary needs 1 <= k <= n, got k={k}, n={n}")
    elif scheme is Scheme.EXTENDED_INCREASING_K:
        if k != 0:
            raise InvalidK(f"eu-ik varies its spread per cycle; k must be 0, got {k}")
    else:
        if k < 2:
            raise KRequiredAtLeast2(f"eu-fk needs k >= 2, got {k}")
        if n <= k + 1:
            raise InvalidN(f"eu-fk needs n > k + 1, got n={n}, k={k}")


def capacity(params: CodecParams) -> Optional[int]:
    """Largest encodable value (the range is ``0..capacity``).

    Returns ``None`` for classic unary, which has no fixed capacity.
    """
    validate(params)
    scheme, n, k = params.scheme, params.n, params.k
    if scheme is Scheme.CLASSIC_UNARY:
        return None
    if scheme in (Scheme.SPATIAL_UNARY, Scheme.SPREAD_UNARY):
        return n - k + 1
    if scheme is Scheme.EXTENDED_INCREASING_K:
        return n * (n + 1) // 2
    return (n - k) ** 2 - 1


def euik_cumulative(n: int, t: int) -> int:
    """Number of values held by eu-ik cycles ``1..t`` for word length ``n``."""
    return t * n - t * (t - 1) // 2


def euik_coords(n: int, i: int) -> CycleCoordinates:
    """Run length ``m`` and offset ``j`` of value ``i`` under eu-ik."""
    if not 1 <= i <= n * (n + 1) // 2:
        raise OutOfRange(f"value {i} outside 1..{n * (n + 1) // 2} for eu-ik with n={n}")
    m = 1
    while euik_cumulative(n, m) < i:
        m += 1
    return CycleCoordinates(m, i - euik_cumulative(n, m - 1))


def eufk_coords(n: int, k: int, i: int) -> CycleCoordinates:
    """Cycle ``c`` and offset ``j`` of value ``i`` under eu-fk."""
    top = (n - k) ** 2 - 1
    if not 1 <= i <= top:
        raise OutOfRange(f"value {i} outside 1..{top} for eu-fk with n={n}, k={k}")
    per_cycle = n - k + 1
    c = -(-i // per_cycle)
    return CycleCoordinates(c, i - (c - 1) * per_cycle)


def cyclic_shift_left(w: Codeword, s: int) -> Codeword:
    """Rotate towards higher positions: the bit at ``p`` moves to ``(p + s) mod n``."""
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    n = w.n
    if n == 0:
        return w
    s %= n
    mask = (1 << n) - 1
    return Codeword(((w.word << s) | (w.word >> (n - s))) & mask, n)


def encode(params: CodecParams, i: int) -> Codeword:
    validate(params)
    scheme, n, k = params.scheme, params.n, params.k
    if isinstance(i, bool) or not isinstance(i, int) or i < 0:
        raise OutOfRange(f"value must be a nonnegative integer, got {i!r}")

    if scheme is Scheme.CLASSIC_UNARY:
        return Codeword(((1 << i) - 1) << 1, i + 1)

    top = capacity(params)
    if i > top:
        raise OutOfRange(f"value {i} exceeds capacity {top} for {params}")
    if i == 0:
        return Codeword(0, n)

    if scheme in (Scheme.SPATIAL_UNARY, Scheme.SPREAD_UNARY):
        return Codeword(((1 << k) - 1) << (i - 1), n)

    if scheme is Scheme.EXTENDED_INCREASING_K:
        m, j = euik_coords(n, i)
        return Codeword(((1 << m) - 1) << (j - 1), n)

    c, j = eufk_coords(n, k, i)
    base = (1 << k) - 1
    if c >= 2:
        base |= 1 << (k + c - 1)
    return cyclic_shift_left(Codeword(base, n), j - 1)


def _single_run(x: int):
    """``(lowest position, length)`` if ``x`` is one contiguous block of ones, else None."""
    if x == 0:
        return None
    low = (x & -x).bit_length() - 1
    y = x >> low
    if y & (y + 1):
        return None
    return low, y.bit_length()


def _as_codeword(w: Union[Codeword, str]) -> Codeword:
    return Codeword.from_str(w) if isinstance(w, str) else w


def decode(params: CodecParams, w: Union[Codeword, str]) -> int:
    """Inverse of :func:`encode`; rejects every word outside its image."""
    validate(params)
    scheme, n, k = params.scheme, params.n, params.k
    w = _as_codeword(w)

    if scheme is Scheme.CLASSIC_UNARY:
        if w.n < 1 or w.word != ((1 << (w.n - 1)) - 1) << 1:
            raise InvalidCodeword(f"{w} is not a run of ones closed by a single zero")
        return w.n - 1

    if w.n != n:
        raise LengthMismatch(f"codeword has {w.n} bits, expected {n}")
    x = w.word
    if x == 0:
        return 0
    weight = x.bit_count()

    if scheme in (Scheme.SPATIAL_UNARY, Scheme.SPREAD_UNARY):
        run = _single_run(x)
        if weight != k or run is None:
            raise InvalidCodeword(f"{w} is not a single run of {k} ones")
        return run[0] + 1

    if scheme is Scheme.EXTENDED_INCREASING_K:
        run = _single_run(x)
        if run is None:
            raise InvalidCodeword(f"{w} is not a single contiguous run of ones")
        low, m = run
        return euik_cumulative(n, m - 1) + low + 1

    if weight == k:
        run = _single_run(x)
        if run is None:
            raise InvalidCodeword(f"{w} has {k} ones but they are not one unwrapped run")
        return run[0] + 1
    if weight != k + 1:
        raise InvalidCodeword(f"{w} has {weight} ones; eu-fk words have 0, {k} or {k + 1}")

    for p in range(n):
        if not (x >> p) & 1:
            continue
        if (x >> ((p + 1) % n)) & 1 or (x >> ((p - 1) % n)) & 1:
            continue
        run = _single_run(x ^ (1 << p))
        if run is None or run[1] != k:
            continue
        s = run[0]
        c = (p - s - k) % n + 1
        if 2 <= c <= n - k - 1:
            return (c - 1) * (n - k + 1) + s + 1
    raise InvalidCodeword(f"{w} is not a {k}-run with an isolated cycle marker")
