"""Exact matrix rank over Q (fraction-free) and over GF(p)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

# Rank mod p never exceeds rank over Q, so a full rank mod this prime
# settles the rational rank without big-integer elimination.
_SHORTCUT_PRIME = 2_147_483_647


def _as_int_rows(rows: Sequence[Sequence]) -> list:
    out = []
    for row in rows:
        if any(isinstance(e, Fraction) for e in row):
            den = lcm(*(Fraction(e).denominator for e in row))
            out.append([int(Fraction(e) * den) for e in row])
        else:
            out.append([int(e) for e in row])
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    m = [[int(e) % p for e in row] for row in rows]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        prow = [(e * inv) % p for e in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, len(m)):
            f = m[r][c]
            if f:
                row = m[r]
                m[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact.
    """
    m = [list(row) for row in rows if any(row)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(rows: Sequence[Sequence], p: int | None = None) -> int:
    """Exact rank; over Q when ``p`` is None, else over GF(p).

    Entries may be ints or Fractions (each row is scaled to integers).
    """
    rows = _as_int_rows(rows)
    if not rows or not rows[0]:
        return 0
    if p is not None:
        return rank_mod_p(rows, p)
    full = min(len(rows), len(rows[0]))
    r = rank_mod_p(rows, _SHORTCUT_PRIME)
    if r == full:
        return r
    return rank_bareiss(rows)
