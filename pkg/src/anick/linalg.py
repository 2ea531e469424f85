"""Exact rational linear algebra: sparse rank and small dense solves.

Rows are dicts mapping column keys to nonzero Fractions.  Rank runs
incremental row echelon with the smallest column as pivot, so column keys
must be mutually comparable (ints, tuples of ints).
"""

from __future__ import annotations

from fractions import Fraction


def sparse_rank(rows):
    """Rank of the matrix whose rows are given as {column: value} dicts."""
    pivots = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            c = min(row)
            if c not in pivots:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            factor = row[c]
            for pc, pv in pivots[c].items():
                acc = row.get(pc, Fraction(0)) - factor * pv
                if acc:
                    row[pc] = acc
                else:
                    row.pop(pc, None)
    return rank


def dense_solve(matrix, rhs):
    """One exact solution of matrix . x = rhs, or None when inconsistent.

    Free variables are set to zero.  matrix is a list of equal-length rows.
    """
    if not matrix:
        return [] if not any(rhs) else None
    m = [list(map(Fraction, row)) + [Fraction(b)]
         for row, b in zip(matrix, rhs)]
    nrows, ncols = len(m), len(matrix[0])
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pick = None
        for k in range(r, nrows):
            if m[k][c]:
                pick = k
                break
        if pick is None:
            continue
        m[r], m[pick] = m[pick], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(nrows):
            if k != r and m[k][c]:
                factor = m[k][c]
                m[k] = [a - factor * b for a, b in zip(m[k], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for k in range(r, nrows):
        if m[k][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivot_cols):
        x[c] = m[row_idx][ncols]
    return x
