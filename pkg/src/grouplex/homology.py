"""Integral simplicial homology via boundary matrices and Smith normal form.

All arithmetic is on Python ints.  Boundary matrices are sparse with many
unit entries, so the Smith form first eliminates unit pivots sparsely and
only runs the general algorithm on the (usually tiny) remainder.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import SimplicialComplex


class IntMatrix:
    """Sparse exact integer matrix; ``rows[i]`` maps column -> nonzero entry."""

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[dict[int, int]] = (
            [dict(r) for r in rows] if rows is not None else [{} for _ in range(nrows)]
        )
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(len(data), ncols, [{j: int(v) for j, v in enumerate(r) if v} for r in data])

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc: dict[int, int] = {}
            for k, v in r.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out.append({j: v for j, v in acc.items() if v})
        return IntMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"


# ------------------------------------------------------------- Smith normal form


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Nonzero Smith diagonal ``d1 | d2 | ...`` and the rank. Input is not modified."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix.from_dense(m)
    rows = [dict(r) for r in m.rows]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for j in r:
            cols.setdefault(j, set()).add(i)

    units = 0
    active = set(i for i, r in enumerate(rows) if r)
    progress = True
    while progress:
        progress = False
        for i in sorted(active, key=lambda i: len(rows[i])):
            if i not in active:
                continue
            r = rows[i]
            cand = [j for j, v in r.items() if v in (1, -1)]
            if not cand:
                continue
            j = min(cand, key=lambda j: len(cols[j]))
            piv = r[j]
            for i2 in list(cols[j]):
                if i2 == i:
                    continue
                r2 = rows[i2]
                f = r2[j] * piv  # piv is +-1, so this is r2[j] / piv
                for jj, v in r.items():
                    nv = r2.get(jj, 0) - f * v
                    if nv:
                        if jj not in r2:
                            cols[jj].add(i2)
                        r2[jj] = nv
                    elif jj in r2:
                        del r2[jj]
                        cols[jj].discard(i2)
                if not r2:
                    active.discard(i2)
            for jj in r:
                cols[jj].discard(i)
            rows[i] = {}
            active.discard(i)
            units += 1
            progress = True

    rest = sorted(active)
    if not rest:
        return (1,) * units, units
    rest_cols = sorted({j for i in rest for j in rows[i]})
    pos = {j: k for k, j in enumerate(rest_cols)}
    dense = [[0] * len(rest_cols) for _ in rest]
    for a, i in enumerate(rest):
        for j, v in rows[i].items():
            dense[a][pos[j]] = v
    diag = (1,) * units + tuple(_snf_dense(dense))
    return diag, len(diag)


def _snf_dense(a: list[list[int]]) -> list[int]:
    """Smith diagonal of a dense matrix (mutated), smallest-magnitude pivots."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag: list[int] = []
    t = 0
    while t < min(nr, nc):
        piv = _min_entry(a, t, t)
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, nc):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, nr):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # bring the smallest remaining entry of row/column t to the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, nr):
                    if a[i][t] and abs(a[i][t]) < best[0]:
                        best = (abs(a[i][t]), i, t)
                for j in range(t + 1, nc):
                    if a[t][j] and abs(a[t][j]) < best[0]:
                        best = (abs(a[t][j]), t, j)
                _, bi, bj = best
                a[t], a[bi] = a[bi], a[t]
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, nr) if any(a[i][j] % p for j in range(t + 1, nc))),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, nc):
                rt[j] += rb[j]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _min_entry(a: list[list[int]], r0: int, c0: int) -> tuple[int, int] | None:
    best = None
    for i in range(r0, len(a)):
        row = a[i]
        for j in range(c0, len(row)):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


# -------------------------------------------------------------------- homology


def boundary_matrix(lower: Sequence[tuple[int, ...]], upper: Sequence[tuple[int, ...]]) -> IntMatrix:
    """Rows: faces in ``lower``; columns: simplices in ``upper``.

    Deleting the ``i``-th vertex of a sorted simplex contributes ``(-1)**i``.
    """
    index = {s: i for i, s in enumerate(lower)}
    rows: list[dict[int, int]] = [{} for _ in lower]
    for j, s in enumerate(upper):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            rows[index[face]][j] = -1 if i % 2 else 1
    return IntMatrix(len(lower), len(upper), rows)


def boundary_matrices(c: SimplicialComplex, reduced: bool = False) -> list[IntMatrix]:
    """``[d_0, d_1, ..., d_dim]``; ``d_0`` maps vertices to the empty simplex when reduced."""
    levels = [c.simplices_of_size(k) for k in range(0, c.dimension + 2)]
    mats = []
    if c.dimension >= 0:
        if reduced:
            mats.append(boundary_matrix([()], levels[1]))
        else:
            mats.append(IntMatrix(0, len(levels[1])))
    for k in range(1, c.dimension + 1):
        mats.append(boundary_matrix(levels[k], levels[k + 1]))
    return mats


@dataclass(frozen=True)
class HomologyResult:
    dim: int
    betti: int
    torsion: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"dim": self.dim, "betti": self.betti, "torsion": list(self.torsion)}


def homology(c: SimplicialComplex, reduced: bool = True, use_cone: bool = True) -> list[HomologyResult]:
    """Homology groups in degrees ``0..dim`` (``[-1]`` only for the empty complex, reduced)."""
    if c.dimension < 0:
        return [HomologyResult(-1, 1)] if reduced else []
    if use_cone and c.cone_apex() is not None:
        return [HomologyResult(k, 0 if (reduced or k) else 1) for k in range(c.dimension + 1)]
    mats = boundary_matrices(c, reduced)
    snf = [smith_normal_form(m) for m in mats]
    out = []
    for k in range(c.dimension + 1):
        f_k = mats[k].ncols
        rank_k = snf[k][1]
        diag_next, rank_next = snf[k + 1] if k + 1 < len(snf) else ((), 0)
        out.append(HomologyResult(k, f_k - rank_k - rank_next, tuple(d for d in diag_next if d > 1)))
    return out


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(c.f_vector()))


def homology_json(c: SimplicialComplex, reduced: bool = True) -> dict:
    groups = homology(c, reduced)
    out = {
        "reduced": reduced,
        "groups": [h.to_json() for h in groups if h.dim >= 0],
        "euler": euler_characteristic(c),
    }
    if c.dimension < 0:
        out["note"] = "empty complex" + ("; reduced homology is Z in degree -1" if reduced else "")
    return out


def betti_numbers(results: Iterable[HomologyResult]) -> tuple[int, ...]:
    return tuple(h.betti for h in results)
