"""Command line interface: ``eucode <subcommand> ...``.

Exit status is 0 on success, 1 for usage errors and 2 for domain errors
(out-of-range values, invalid codewords, bad parameters, failed verification).
Errors are written to stderr prefixed with the library error name.
"""

import argparse
import contextlib
import sys

from . import __version__
from .analysis import (
    DEFAULT_SPECTRUM_MAX_ENTRIES,
    ParamQuery,
    compare_lengths,
    hamming_spectrum,
    select_params,
    weight_census,
)
from .bitstream import pack, single_bit_corruption_report, unpack
from .codecs import CodecParams, Codeword, Scheme, capacity, decode, encode, validate
from .errata import errata_report, render_report
from .errors import CodeError
from .oracle import (
    DEFAULT_MAX_ENTRIES,
    brute_force_table,
    decode_via_table,
    format_table,
    generate_table,
    verify_bijection,
)

SCHEME_NAMES = [s.value for s in Scheme]
NEEDS_K = (Scheme.SPREAD_UNARY, Scheme.EXTENDED_FIXED_K)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _open(path, mode):
    if path == "-":
        stream = sys.stdin if "r" in mode else sys.stdout
        yield stream.buffer if "b" in mode else stream
    else:
        with open(path, mode) as fh:
            yield fh


class Output:
    """Collects text or ``key=value`` lines depending on ``--format``."""

    def __init__(self, fmt, stream):
        self.machine = fmt == "machine"
        self.stream = stream

    def line(self, text=""):
        print(text, file=self.stream)

    def kv(self, key, value):
        print(f"{key}={value}", file=self.stream)


def _params(args, scheme_required=True):
    if args.scheme is None:
        if scheme_required:
            raise UsageError("--scheme is required")
        return None
    scheme = Scheme.parse(args.scheme)
    if scheme in NEEDS_K and args.k is None:
        raise UsageError(f"--k is required for scheme {scheme}")
    if scheme.fixed_length and args.n is None:
        raise UsageError(f"--n is required for scheme {scheme}")
    n = 0 if args.n is None and not scheme.fixed_length else args.n
    params = CodecParams.of(scheme, n, args.k)
    validate(params)
    return params


def _inputs(args):
    items = list(args.values)
    if args.infile is not None:
        with _open(args.infile, "r") as fh:
            for ln in fh:
                ln = ln.strip()
                if ln and not ln.startswith("#"):
                    items.append(ln)
    return items


def _ints(items):
    try:
        return [int(v) for v in items]
    except ValueError as exc:
        raise UsageError(f"expected integer values: {exc}") from None


def cmd_encode(args, out):
    params = _params(args)
    for v in _ints(_inputs(args)):
        cw = encode(params, v)
        if out.machine:
            out.kv("value", v)
            out.kv("codeword", cw)
        else:
            out.line(str(cw))


def cmd_decode(args, out):
    params = _params(args)
    for text in _inputs(args):
        value = decode(params, Codeword.from_str(text))
        if out.machine:
            out.kv("codeword", text)
            out.kv("value", value)
        else:
            out.line(str(value))


def cmd_table(args, out):
    params = _params(args)
    table = generate_table(params, max_entries=args.max_entries, range_max=args.range_max)
    if args.outfile is not None:
        with _open(args.outfile, "w") as fh:
            fh.write(format_table(table))
        return
    if out.machine:
        out.kv("scheme", params.scheme)
        out.kv("n", params.n)
        out.kv("k", params.k)
        out.kv("entries", len(table))
    for value, cw in table:
        if out.machine:
            out.kv(value, cw)
        else:
            out.line(f"{value}: {cw}")


def cmd_capacity(args, out):
    params = _params(args)
    top = capacity(params)
    if out.machine:
        out.kv("capacity", "none" if top is None else top)
    elif top is None:
        out.line("no fixed capacity")
    else:
        out.line(f"capacity: {top} (values 0..{top})")


def cmd_select(args, out):
    scheme = Scheme.parse(args.scheme)
    if scheme in NEEDS_K and args.k is None:
        raise UsageError(f"--k is required for scheme {scheme}")
    params = select_params(ParamQuery(scheme, args.target, args.k))
    if out.machine:
        out.kv("scheme", params.scheme)
        out.kv("n", params.n)
        out.kv("k", params.k)
        out.kv("capacity", capacity(params))
    else:
        out.line(f"n={params.n}")


def cmd_census(args, out):
    params = _params(args)
    census = weight_census(params, args.range_max)
    if out.machine:
        out.kv("range_max", census.range_max)
        out.kv("total_ones", census.total_ones)
        out.kv("total_zeros", census.total_zeros)
        out.kv("weights", ",".join(map(str, census.per_value_weights)))
    else:
        out.line(f"values  0..{census.range_max}")
        out.line(f"ones    {census.total_ones}")
        out.line(f"zeros   {census.total_zeros}")


def cmd_spectrum(args, out):
    params = _params(args)
    spec = hamming_spectrum(params, max_entries=args.max_entries or DEFAULT_SPECTRUM_MAX_ENTRIES)
    if out.machine:
        for d, c in spec.histogram.items():
            out.kv(f"distance.{d}", c)
        out.kv("pairs", spec.pairs)
        out.kv("min_distance", "none" if spec.min_distance is None else spec.min_distance)
        return
    out.line(f"{'distance':>8}  {'pairs':>8}")
    for d, c in spec.histogram.items():
        out.line(f"{d:>8}  {c:>8}")
    out.line(f"minimum distance: {spec.min_distance}")


def cmd_compare(args, out):
    rows = compare_lengths(args.target, args.ks)
    for row in rows:
        if out.machine:
            key = row.scheme.value if row.k is None else f"{row.scheme.value}.k{row.k}"
            out.kv(key, row.bits)
        else:
            label = row.scheme.value if row.k is None else f"{row.scheme.value} k={row.k}"
            out.line(f"{label:<12} {row.bits:>6} bits")


def cmd_pack(args, out):
    params = _params(args)
    if args.outfile is None:
        raise UsageError("pack needs --out (use '-' for stdout)")
    values = _ints(_inputs(args))
    with _open(args.outfile, "wb") as fh:
        written = pack(params, values, fh)
    if args.outfile != "-":
        if out.machine:
            out.kv("bytes", written)
            out.kv("count", len(values))
        else:
            out.line(f"wrote {len(values)} codewords, {written} bytes")


def cmd_unpack(args, out):
    with _open(args.infile or "-", "rb") as fh:
        params, values = unpack(fh)
    if out.machine:
        out.kv("scheme", params.scheme)
        out.kv("n", params.n)
        out.kv("k", params.k)
        out.kv("count", len(values))
        for v in values:
            out.kv("value", v)
    else:
        for v in values:
            out.line(str(v))


def cmd_verify(args, out):
    """Oracle checks; returns exit status 2 if any of them fails."""
    params = _params(args)
    table = generate_table(params, max_entries=args.max_entries)
    report = verify_bijection(table)
    ok = report.count_matches_theorem
    results = [
        ("entries", len(table)),
        ("distinct_codewords", report.distinct_codewords),
        ("expected", report.expected),
        ("count_matches_theorem", report.count_matches_theorem),
    ]
    if params.n <= args.exhaustive_bits:
        brute = brute_force_table(params, max_bits=args.exhaustive_bits)
        same = brute.entries == table.entries
        mismatches = 0
        for word in range(1 << params.n):
            cw = Codeword(word, params.n)
            expected = decode_via_table(table, cw)
            try:
                got = decode(params, cw)
            except CodeError:
                got = None
            mismatches += got != expected
        ok = ok and same and mismatches == 0
        results += [("brute_force_agrees", same),
                    ("words_checked", 1 << params.n),
                    ("decode_mismatches", mismatches)]
    else:
        results.append(("exhaustive", "skipped"))
    if args.corruption:
        cr = single_bit_corruption_report(params, [v for v, _ in table])
        results += [("flips", cr.flips), ("flips_detected", cr.detected),
                    ("detected_fraction", f"{cr.detected_fraction:.4f}")]
    results.append(("result", "pass" if ok else "FAIL"))
    for key, value in results:
        if out.machine:
            out.kv(key, value)
        else:
            out.line(f"{key:<22} {value}")
    return 0 if ok else 2


def cmd_errata(args, out):
    text = render_report(errata_report())
    if args.outfile is not None:
        with _open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        out.stream.write(text)


def build_parser():
    parser = _Parser(prog="eucode", description="Spread and extended unary codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = _Parser(add_help=False)
    common.add_argument("--scheme", choices=SCHEME_NAMES)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--in", dest="infile", metavar="FILE")
    common.add_argument("--out", dest="outfile", metavar="FILE")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help, values=False):
        p = sub.add_parser(name, parents=[common], help=help)
        if values:
            p.add_argument("values", nargs="*")
        else:
            p.set_defaults(values=[])
        p.set_defaults(func=func)
        return p

    add("encode", cmd_encode, "encode integers to codewords", values=True)
    add("decode", cmd_decode, "decode codewords to integers", values=True)
    p = add("table", cmd_table, "print the full code table")
    p.add_argument("--max-entries", type=int, default=DEFAULT_MAX_ENTRIES)
    p.add_argument("--range-max", type=int)
    add("capacity", cmd_capacity, "largest encodable value")
    p = add("select", cmd_select, "smallest word length for a target value")
    p.add_argument("--target", type=int, required=True)
    p = add("census", cmd_census, "count ones and zeros over a value range")
    p.add_argument("--range-max", type=int)
    p = add("spectrum", cmd_spectrum, "pairwise Hamming distance histogram")
    p.add_argument("--max-entries", type=int)
    p = add("compare", cmd_compare, "bits needed by each scheme for a target value")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--ks", type=int, nargs="+", default=[2, 3, 4, 5])
    add("pack", cmd_pack, "pack integers into a codeword stream", values=True)
    add("unpack", cmd_unpack, "decode a packed codeword stream")
    p = add("verify", cmd_verify, "check the codec against the exhaustive oracle")
    p.add_argument("--max-entries", type=int, default=DEFAULT_MAX_ENTRIES)
    p.add_argument("--exhaustive-bits", type=int, default=16)
    p.add_argument("--corruption", action="store_true",
                   help="also report how many single-bit flips of a packed table are caught")
    add("errata", cmd_errata, "diff transcribed listings against generated tables")
    return parser


def main(argv=None, stdout=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    out = Output(args.format, stdout or sys.stdout)
    try:
        status = args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"eucode: error: {exc}", file=sys.stderr)
        return 1
    except (CodeError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
