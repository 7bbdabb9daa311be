"""Pure-Python implementations of the hot group kernels.

Used when the compiled extension is unavailable or when ``GROUPLEX_PURE=1``.
Every function here has the same signature and results as its counterpart
in ``_kernels.pyx``.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def prepare(table: np.ndarray):
    """Convert a Cayley table into the representation the kernels consume."""
    return [list(map(int, row)) for row in table]


def closure(rows, gens) -> int:
    """Bitmask of the subgroup generated by ``gens`` (identity is index 0).

    Breadth-first search from the identity under right multiplication by the
    generators; in a finite group positive words already give every element.
    """
    gens = [g for g in gens if g != 0]
    mask = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                bit = 1 << y
                if not mask & bit:
                    mask |= bit
                    nxt.append(y)
        frontier = nxt
    return mask


def element_orders(rows) -> list[int]:
    n = len(rows)
    orders = [0] * n
    for x in range(n):
        if orders[x]:
            continue
        k, y = 1, x
        row = rows[x]
        while y != 0:
            y = row[y]
            k += 1
        orders[x] = k
    return orders


def first_nonassociative(rows):
    """Return a triple (a, b, c) with (ab)c != a(bc), or None."""
    table = np.asarray(rows, dtype=np.int64)
    for a in range(len(rows)):
        left = table[table[a]]        # (a*b)*c indexed [b, c]
        right = table[a][table]       # a*(b*c) indexed [b, c]
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            return a, int(b), int(c)
    return None
