from pathlib import Path

from eucode.errata import compare_listing, errata_report, render_report
from eucode.oracle import generate_table, verify_bijection
from eucode.reference import (
    EUFK_N10_K2,
    EUFK_N11_K2_SAMPLE,
    EUFK_N7_K3,
    EUIK_N11_SAMPLE,
    EUIK_N3,
    SU_N10_K2,
)

DATA = Path(__file__).resolve().parents[1] / "data" / "errata.txt"


def _kinds(listing):
    return {(d.kind, d.fields.get("value")) for d in compare_listing(listing)}


def test_consistent_listings_have_no_discrepancies():
    for listing in (EUIK_N3, EUFK_N7_K3, EUFK_N11_K2_SAMPLE, EUIK_N11_SAMPLE):
        assert compare_listing(listing) == []


def test_su_listing_errata():
    kinds = _kinds(SU_N10_K2)
    assert ("duplicate", 8) in kinds
    assert ("beyond_capacity", 10) in kinds
    (census,) = [d for d in compare_listing(SU_N10_K2) if d.kind == "census"]
    assert census.fields["printed_ones"] == 20 and census.fields["printed_zeros"] == 90
    assert census.fields["generated_ones"] == 18 and census.fields["generated_zeros"] == 82


def test_eufk_listing_errata():
    kinds = _kinds(EUFK_N10_K2)
    duplicated = sorted(v for kind, v in kinds if kind == "duplicate")
    assert duplicated == [8, 17, 25, 27, 34, 37]
    assert ("label", 39) in kinds
    # rows up to 7 and the first row after the first duplicate shift are where
    # the two listings agree
    assert not any(kind == "mismatch" and v <= 7 for kind, v in kinds)


def test_generated_tables_have_no_duplicates():
    for listing in (SU_N10_K2, EUFK_N10_K2):
        report = verify_bijection(generate_table(listing.params))
        assert report.duplicates == {} and report.count_matches_theorem


def test_checked_in_report_is_current():
    assert DATA.read_text() == render_report(errata_report())
