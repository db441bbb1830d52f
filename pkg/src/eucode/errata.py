"""Diff transcribed listings against generated tables.

The output is one ``key=value`` line per finding so that the erratum list stays
machine-checked; ``data/errata.txt`` in the repository is this report frozen.
"""

from dataclasses import dataclass
from typing import Dict, List

from .analysis import weight_census
from .codecs import capacity
from .oracle import decode_via_table, generate_table
from .reference import ALL_LISTINGS, Listing

__all__ = ["Discrepancy", "compare_listing", "errata_report", "render_report"]


@dataclass(frozen=True)
class Discrepancy:
    listing: str
    kind: str
    fields: Dict[str, object]

    def render(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.fields.items())
        return f"listing={self.listing} kind={self.kind} {extra}".rstrip()


def compare_listing(listing: Listing) -> List[Discrepancy]:
    table = generate_table(listing.params)
    top = capacity(listing.params)
    found = []

    def add(kind, **fields):
        found.append(Discrepancy(listing.name, kind, fields))

    first_seen = {}
    for row, (label, printed) in enumerate(listing.rows):
        value = row if listing.consecutive else label
        if label != value:
            add("label", value=value, printed_label=label)
        if printed in first_seen:
            add("duplicate", value=value, printed=printed, same_as=first_seen[printed])
        else:
            first_seen[printed] = value
        if value > top:
            add("beyond_capacity", value=value, printed=printed, capacity=top)
            continue
        expected = str(table.entries[value][1])
        if printed != expected:
            add("mismatch", value=value, printed=printed, expected=expected)
            if decode_via_table(table, printed) is None:
                add("not_a_codeword", value=value, printed=printed)

    if listing.claimed_ones is not None:
        printed_ones = sum(bits.count("1") for _, bits in listing.rows)
        printed_zeros = sum(bits.count("0") for _, bits in listing.rows)
        census = weight_census(listing.params, min(top, len(listing.rows) - 1))
        if (listing.claimed_ones, listing.claimed_zeros) != (printed_ones, printed_zeros):
            add("census", claimed_ones=listing.claimed_ones,
                claimed_zeros=listing.claimed_zeros,
                printed_ones=printed_ones, printed_zeros=printed_zeros,
                generated_ones=census.total_ones, generated_zeros=census.total_zeros,
                generated_range=f"0..{census.range_max}")
    return found


def errata_report(listings=ALL_LISTINGS) -> Dict[str, List[Discrepancy]]:
    return {listing.name: compare_listing(listing) for listing in listings}


def render_report(report: Dict[str, List[Discrepancy]]) -> str:
    lines = []
    for name, items in report.items():
        lines.append(f"listing={name} kind=summary discrepancies={len(items)}")
        lines.extend(d.render() for d in items)
    return "\n".join(lines) + "\n"
