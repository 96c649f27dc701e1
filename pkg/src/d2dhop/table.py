"""Built-in reference rows of full-order (generator) polynomials.

Each row pairs a channel-count range [m_lo, m_hi] with a prime p, the digit
length r, and a monic degree-r polynomial over GF(p) whose x has
multiplicative order p^r - 1. Every m range spans (p^(r-1), p^r].
"""
from __future__ import annotations

from typing import NamedTuple


class TableRow(NamedTuple):
    m_lo: int
    m_hi: int
    p: int
    r: int
    poly_text: str


BUILTIN_TABLE: tuple[TableRow, ...] = (
    TableRow(33, 64, 2, 6, "x^6+x^5+x^3+x^2+1"),
    TableRow(4, 9, 3, 2, "x^2-x-1"),
    TableRow(10, 27, 3, 3, "x^3+2x^2+x+1"),
    TableRow(28, 81, 3, 4, "x^4+2x+2"),
    TableRow(26, 125, 5, 3, "x^3+4x^2+x+2"),
    TableRow(50, 343, 7, 3, "x^3+5x+2"),
    TableRow(8, 49, 7, 2, "x^2+6x+3"),
    TableRow(12, 121, 11, 2, "x^2+3x+6"),
    TableRow(14, 169, 13, 2, "x^2+4x+2"),
    TableRow(18, 289, 17, 2, "x^2+15x+12"),
    TableRow(20, 361, 19, 2, "x^2+12x+2"),
    TableRow(24, 529, 23, 2, "x^2+10x+10"),
    TableRow(30, 841, 29, 2, "x^2+22x+19"),
    TableRow(32, 961, 31, 2, "x^2+16x+3"),
    TableRow(38, 1369, 37, 2, "x^2+12x+19"),
    TableRow(42, 1681, 41, 2, "x^2+9x+29"),
    TableRow(44, 1849, 43, 2, "x^2+25x+26"),
    TableRow(48, 2209, 47, 2, "x^2+14x+10"),
)


def parse_table_file(text: str) -> tuple[TableRow, ...]:
    """Rows as whitespace-separated ``m_lo-m_hi p r poly`` lines; ``#``
    comments and blank lines ignored."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4 or "-" not in parts[0]:
            raise ValueError(f"line {lineno}: expected 'm_lo-m_hi p r poly', got {raw!r}")
        lo, hi = parts[0].split("-", 1)
        rows.append(TableRow(int(lo), int(hi), int(parts[1]), int(parts[2]), parts[3]))
    if not rows:
        raise ValueError("table file has no rows")
    return tuple(rows)
