"""Linear algebra over GF(2) with rows packed into Python ints.

A row vector is an int whose bit j is the entry in column j.  Echelon
structures are dicts mapping a pivot column to the (forward reduced) row
whose highest set bit is that column.
"""
from __future__ import annotations


def echelon_insert(pivots: dict[int, int], v: int) -> int | None:
    """Reduce v against pivots and insert the remainder if nonzero.
    Returns the new pivot column, or None if v was in the span."""
    while v:
        c = v.bit_length() - 1
        if c in pivots:
            v ^= pivots[c]
        else:
            pivots[c] = v
            return c
    return None


def reduce_vector(pivots: dict[int, int], v: int) -> int:
    """Residue of v modulo the row space.  Bits of the residue sit in
    columns that have no pivot.  Zero residue means v is in the span."""
    residue = 0
    while v:
        c = v.bit_length() - 1
        if c in pivots:
            v ^= pivots[c]
        else:
            residue |= 1 << c
            v ^= 1 << c
    return residue


def in_span(pivots: dict[int, int], v: int) -> bool:
    return reduce_vector(pivots, v) == 0


def row_space_pivots(rows) -> dict[int, int]:
    pivots: dict[int, int] = {}
    for r in rows:
        echelon_insert(pivots, r)
    return pivots


def rank(rows) -> int:
    return len(row_space_pivots(rows))


def nullspace(rows, ncols: int) -> list[int]:
    """Basis of {x : parity(r & x) == 0 for every row r}."""
    pivots = row_space_pivots(rows)
    # back-substitute to reduced echelon form
    for c in sorted(pivots):
        row = pivots[c]
        for c2 in pivots:
            if c2 != c and (pivots[c2] >> c) & 1:
                pivots[c2] ^= row
    basis = []
    for j in range(ncols):
        if j in pivots:
            continue
        v = 1 << j
        for c, row in pivots.items():
            if (row >> j) & 1:
                v |= 1 << c
        basis.append(v)
    return basis
