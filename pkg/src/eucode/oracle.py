"""Exhaustive code tables.

Two independent routes produce a table:

* :func:`generate_table` runs :func:`~eucode.codecs.encode` over the whole
  value range and refuses duplicated codewords.
* :func:`brute_force_table` never calls the codec.  It scans every ``n``-bit
  string, keeps the ones that match the shape of a codeword (written as plain
  string predicates) and orders them cycle by cycle.

Tests compare the two, and differential-test ``decode`` against
:func:`decode_via_table` on every possible word.
"""

import re
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from .codecs import CodecParams, Codeword, Scheme, capacity, encode, validate
from .errors import DuplicateCodeword, TableTooLarge, UnsupportedScheme

__all__ = [
    "DEFAULT_MAX_ENTRIES",
    "CodeTable",
    "BijectionReport",
    "generate_table",
    "brute_force_table",
    "verify_bijection",
    "decode_via_table",
    "theorem_count",
    "format_table",
    "parse_table",
]

DEFAULT_MAX_ENTRIES = 2**20


@dataclass(frozen=True)
class CodeTable:
    params: CodecParams
    entries: Tuple[Tuple[int, Codeword], ...]
    _index: Dict[int, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for value, cw in self.entries:
            index.setdefault((cw.word, cw.n), value)
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def codewords(self) -> List[Codeword]:
        return [cw for _, cw in self.entries]

    def strings(self) -> List[str]:
        return [str(cw) for _, cw in self.entries]


@dataclass(frozen=True)
class BijectionReport:
    distinct_codewords: int
    duplicates: Dict[str, Tuple[int, ...]]
    expected: Optional[int]
    count_matches_theorem: bool


def theorem_count(params: CodecParams) -> Optional[int]:
    """Closed-form number of distinct codewords, zero word included."""
    top = capacity(params)
    return None if top is None else top + 1


def generate_table(params: CodecParams, max_entries: int = DEFAULT_MAX_ENTRIES,
                   range_max: Optional[int] = None) -> CodeTable:
    """Encode ``0..capacity`` (or ``0..range_max``) into a :class:`CodeTable`.

    Classic unary has no capacity, so it needs an explicit ``range_max``.
    """
    validate(params)
    top = capacity(params)
    if range_max is not None:
        top = range_max if top is None else min(top, range_max)
    if top is None:
        raise UnsupportedScheme("classic unary has no finite table; pass range_max")
    if top + 1 > max_entries:
        raise TableTooLarge(f"{top + 1} entries exceeds the bound of {max_entries}")

    entries = []
    seen = {}
    for value in range(top + 1):
        cw = encode(params, value)
        if (cw.word, cw.n) in seen:
            raise DuplicateCodeword(
                f"values {seen[cw.word, cw.n]} and {value} both encode to {cw}")
        seen[cw.word, cw.n] = value
        entries.append((value, cw))
    return CodeTable(params, tuple(entries))


def verify_bijection(table: CodeTable) -> BijectionReport:
    by_word = defaultdict(list)
    for value, cw in table.entries:
        by_word[str(cw)].append(value)
    duplicates = {w: tuple(vs) for w, vs in by_word.items() if len(vs) > 1}
    expected = theorem_count(table.params)
    distinct = len(by_word)
    matches = expected is not None and distinct == expected and not duplicates
    return BijectionReport(distinct, duplicates, expected, matches)


def decode_via_table(table: CodeTable, w) -> Optional[int]:
    """Lookup decode; ``None`` means the word is not in the table."""
    if isinstance(w, str):
        w = Codeword.from_str(w)
    return table._index.get((w.word, w.n))


# Brute-force route.  Each predicate maps a rendered word (leftmost char is the
# highest position) to the sort key (cycle, position of the rightmost one), or
# None if the string is not a codeword.

_RUN = re.compile(r"0*(1+)0*")


def _rightmost_position(s: str) -> int:
    return len(s) - 1 - s.rindex("1")


def _key_run(s: str, length: Optional[int]):
    m = _RUN.fullmatch(s)
    if m is None or (length is not None and len(m.group(1)) != length):
        return None
    return len(m.group(1)), _rightmost_position(s)


def _key_fixed_k(s: str, k: int):
    n = len(s)
    ones = s.count("1")
    if ones == k:
        key = _key_run(s, k)
        return None if key is None else (1, key[1])
    if ones != k + 1:
        return None
    keys = []
    block = "1" * k
    start = s.find(block)
    while start != -1:
        rest = s[:start] + "0" * k + s[start + k:]
        marker = rest.index("1")
        # zeros between the run's left end and the marker, walking leftwards cyclically
        gap = (start - marker - 1) % n
        other_side = (n - k - 1) - gap
        if gap >= 1 and other_side >= 1:
            keys.append((gap + 1, n - start - k))
        start = s.find(block, start + 1)
    if len(keys) > 1:
        raise AssertionError(f"ambiguous word {s}")
    return keys[0] if keys else None


def brute_force_table(params: CodecParams, max_bits: int = 20) -> CodeTable:
    """Enumerate all ``2**n`` words and keep the well-formed ones, in code order."""
    validate(params)
    scheme, n, k = params.scheme, params.n, params.k
    if not scheme.fixed_length:
        raise UnsupportedScheme("brute force needs a fixed word length")
    if n > max_bits:
        raise TableTooLarge(f"2**{n} words exceeds the brute-force bound 2**{max_bits}")

    keyed = []
    for bits in product("01", repeat=n):
        s = "".join(bits)
        if "1" not in s:
            keyed.append(((0, 0), s))
            continue
        if scheme in (Scheme.SPATIAL_UNARY, Scheme.SPREAD_UNARY):
            key = _key_run(s, k)
            key = None if key is None else (1, key[1])
        elif scheme is Scheme.EXTENDED_INCREASING_K:
            key = _key_run(s, None)
        else:
            key = _key_fixed_k(s, k)
        if key is not None:
            keyed.append((key, s))
    keyed.sort()
    entries = tuple((value, Codeword.from_str(s)) for value, (_, s) in enumerate(keyed))
    return CodeTable(params, entries)


def format_table(table: CodeTable) -> str:
    """Render in the fixture format: a ``# scheme=.. n=.. k=..`` line, then ``value<TAB>bits``."""
    p = table.params
    lines = [f"# scheme={p.scheme.value} n={p.n} k={p.k}"]
    lines += [f"{value}\t{cw}" for value, cw in table.entries]
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CodeTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("table text must start with a '# scheme=.. n=.. k=..' line")
    fields = dict(item.split("=", 1) for item in lines[0][1:].split())
    params = CodecParams(Scheme.parse(fields["scheme"]), int(fields["n"]), int(fields["k"]))
    entries = []
    for ln in lines[1:]:
        value, bits = ln.split("\t")
        entries.append((int(value), Codeword.from_str(bits)))
    return CodeTable(params, tuple(entries))
