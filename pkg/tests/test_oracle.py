import pytest

from eucode.codecs import CodecParams, Codeword, decode
from eucode.errors import CodeError, DuplicateCodeword, TableTooLarge, UnsupportedScheme
from eucode.oracle import (
    CodeTable,
    brute_force_table,
    decode_via_table,
    format_table,
    generate_table,
    parse_table,
    verify_bijection,
)
from eucode.reference import EUFK_N7_K3, EUIK_N3

P = CodecParams.of


def test_euik_n3_matches_listing():
    table = generate_table(P("eu-ik", 3))
    assert [(v, str(cw)) for v, cw in table] == list(EUIK_N3.rows)


def test_eufk_n7_k3_matches_listing():
    table = generate_table(P("eu-fk", 7, 3))
    assert len(table) == 16
    assert [(v, str(cw)) for v, cw in table] == list(EUFK_N7_K3.rows)


def test_eufk_n5_k2_has_nine_entries():
    assert len(brute_force_table(P("eu-fk", 5, 2))) == 9
    assert len(generate_table(P("eu-fk", 5, 2))) == 9


def test_generated_equals_brute_force(params):
    assert generate_table(params) == brute_force_table(params)


def test_generate_is_deterministic(params):
    assert generate_table(params) == generate_table(params)


@pytest.mark.parametrize("params, distinct", [
    (P("eu-ik", 12), 79),
    (P("eu-fk", 11, 2), 81),
    (P("su", 10, 2), 10),
])
def test_verify_bijection(params, distinct):
    report = verify_bijection(generate_table(params))
    assert report.distinct_codewords == distinct
    assert report.count_matches_theorem
    assert report.duplicates == {}


def test_verify_bijection_flags_duplicates():
    params = P("su", 10, 2)
    good = generate_table(params)
    entries = list(good.entries)
    entries[8] = (8, entries[7][1])
    report = verify_bijection(CodeTable(params, tuple(entries)))
    assert not report.count_matches_theorem
    assert report.duplicates == {"0011000000": (7, 8)}


def test_generate_detects_duplicate_codewords(monkeypatch):
    import eucode.oracle as oracle
    monkeypatch.setattr(oracle, "encode", lambda params, i: Codeword(min(i, 3), 4))
    with pytest.raises(DuplicateCodeword):
        oracle.generate_table(P("eu-ik", 4))


def test_table_size_bound():
    with pytest.raises(TableTooLarge):
        generate_table(P("eu-ik", 100), max_entries=1000)
    assert len(generate_table(P("eu-ik", 100), max_entries=6000)) == 5051


def test_unary_table_needs_range():
    with pytest.raises(UnsupportedScheme):
        generate_table(P("unary"))
    table = generate_table(P("unary"), range_max=3)
    assert table.strings() == ["0", "10", "110", "1110"]
    assert decode_via_table(table, "110") == 2
    assert decode_via_table(table, "00") is None


def test_brute_force_bound():
    with pytest.raises(TableTooLarge):
        brute_force_table(P("eu-ik", 21))


def test_decode_via_table_examples():
    assert decode_via_table(generate_table(P("eu-fk", 11, 2)), "11010000000") == 80
    assert decode_via_table(generate_table(P("eu-ik", 3)), "000") == 0
    assert decode_via_table(generate_table(P("eu-fk", 7, 3)), "1111111") is None


def _differential(params):
    table = generate_table(params)
    for word in range(1 << params.n):
        cw = Codeword(word, params.n)
        try:
            got = decode(params, cw)
        except CodeError:
            got = None
        assert got == decode_via_table(table, cw), str(cw)


def test_decode_differential_small_grid(params):
    _differential(params)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("extra", [2, 5, 9])
def test_decode_differential_eufk(k, extra):
    _differential(P("eu-fk", k + extra, k))


@pytest.mark.parametrize("n", [12, 14])
def test_decode_differential_euik(n):
    _differential(P("eu-ik", n))


def test_table_text_round_trip(tmp_path):
    table = generate_table(P("eu-fk", 7, 3))
    text = format_table(table)
    assert text.splitlines()[0] == "# scheme=eu-fk n=7 k=3"
    assert text.splitlines()[10] == "9\t0111001"
    assert parse_table(text) == table


def test_checked_in_fixtures_match(fixture_dir):
    for name, params in [("eu-ik-3.tsv", P("eu-ik", 3)), ("eu-fk-7-3.tsv", P("eu-fk", 7, 3))]:
        fixture = parse_table((fixture_dir / name).read_text())
        assert fixture.params == params
        assert fixture == generate_table(params)


def test_parse_table_requires_header():
    with pytest.raises(ValueError):
        parse_table("0\t000\n")
