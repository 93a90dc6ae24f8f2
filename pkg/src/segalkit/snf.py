"""Smith normal form invariants of sparse integer matrices.

Python ints are unbounded, so coefficient growth can never overflow; the
pivot strategy (unit pivots first, then smallest absolute value) is there to
keep intermediate entries small.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Column = dict[int, int]


def invariant_factors(columns: Sequence[Column], nrows: int) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of the matrix with the given columns.

    ``columns[j]`` maps row index -> nonzero entry.  The number of factors is
    the rank.
    """
    cols: dict[int, Column] = {j: {r: v for r, v in col.items() if v} for j, col in enumerate(columns)}
    rows: dict[int, set[int]] = {}
    for j, col in cols.items():
        if not col:
            continue
        for r in col:
            rows.setdefault(r, set()).add(j)
    cols = {j: col for j, col in cols.items() if col}

    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda j: (len(cols[j]), j)):
            col = cols.get(c)
            if col is None:
                continue
            pivots = [r for r, v in col.items() if v in (1, -1)]
            if not pivots:
                continue
            r = min(pivots, key=lambda i: (len(rows[i]), i))
            v = col[r]
            for j in sorted(rows[r] - {c}):
                other = cols[j]
                factor = other[r] * v
                for i, a in col.items():
                    new = other.get(i, 0) - factor * a
                    if new:
                        if i not in other:
                            rows[i].add(j)
                        other[i] = new
                    elif i in other:
                        del other[i]
                        rows[i].discard(j)
                if not other:
                    del cols[j]
            for i in col:
                rows[i].discard(c)
            del cols[c]
            del rows[r]
            units += 1
            progress = True

    live_rows = sorted(r for r, js in rows.items() if js)
    live_cols = sorted(cols)
    rest: list[int] = []
    if live_rows and live_cols:
        pos = {r: k for k, r in enumerate(live_rows)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for k, j in enumerate(live_cols):
            for r, v in cols[j].items():
                dense[pos[r]][k] = v
        rest = dense_smith_diagonal(dense)
    return [1] * units + _divisibility_chain(rest)


def dense_smith_diagonal(a: list[list[int]]) -> list[int]:
    """Nonzero Smith diagonal of a dense matrix; the input is left untouched.

    Pivot: smallest nonzero absolute value, ties broken by (row, column).
    """
    a = [row[:] for row in a]
    diag: list[int] = []
    while a and a[0]:
        best = None
        for i, row in enumerate(a):
            for j, v in enumerate(row):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        a[0], a[i] = a[i], a[0]
        for row in a:
            row[0], row[j] = row[j], row[0]
        while True:
            p = a[0][0]
            moved = False
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        moved = True
            for j in range(1, len(a[0])):
                if a[0][j]:
                    q = a[0][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[0]
                    if a[0][j]:
                        moved = True
            if moved:
                _move_min_to_corner(a)
                continue
            bad = next(
                (i for i in range(1, len(a)) for j in range(1, len(a[0])) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[0] = [x + y for x, y in zip(a[0], a[bad])]
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
    return diag


def _move_min_to_corner(a: list[list[int]]) -> None:
    best = None
    for i in range(len(a)):
        v = a[i][0]
        if v and (best is None or abs(v) < best[0]):
            best = (abs(v), i, 0)
    for j in range(len(a[0])):
        v = a[0][j]
        if v and (best is None or abs(v) < best[0]):
            best = (abs(v), 0, j)
    _, i, j = best
    a[0], a[i] = a[i], a[0]
    for row in a:
        row[0], row[j] = row[j], row[0]


def _divisibility_chain(values: list[int]) -> list[int]:
    """Rearrange a diagonal into invariant factors via pairwise (gcd, lcm)."""
    d = [abs(v) for v in values if v]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d
