"""Exact linear algebra over the rationals.

Linear systems are lists of sparse rows (dicts column -> coefficient) with int
or Fraction values.  Elimination keeps rows sparse and works entirely in
Fraction arithmetic, so every rank and kernel dimension is exact.  Dense
matrices (for the matrix realizations) are tuples of tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

SparseRow = dict[int, Fraction]
Matrix = tuple[tuple, ...]


def _normalized(row) -> SparseRow:
    return {k: v for k, v in row.items() if v}


def echelon_pivots(rows) -> dict[int, SparseRow]:
    """Forward elimination; returns pivot-column -> row (not inter-reduced)."""
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        cur = _normalized(raw)
        while cur:
            c = min(cur)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = cur
                break
            factor = Fraction(cur[c]) / Fraction(piv[c])
            nxt = dict(cur)
            for k, v in piv.items():
                nv = nxt.get(k, 0) - factor * v
                if nv:
                    nxt[k] = nv
                else:
                    nxt.pop(k, None)
            cur = nxt
    return pivots


def rank(rows) -> int:
    return len(echelon_pivots(rows))


def kernel_dim(rows, ncols: int) -> int:
    return ncols - rank(rows)


def rref_pivots(rows) -> dict[int, SparseRow]:
    """Gauss-Jordan: pivot rows fully reduced against each other, pivot
    coefficient scaled to 1."""
    pivots = echelon_pivots(rows)
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        inv = Fraction(1) / Fraction(row[c])
        row = {k: inv * v for k, v in row.items()}
        pivots[c] = row
        for c2, other in pivots.items():
            if c2 >= c or c not in other:
                continue
            factor = other[c]
            nxt = dict(other)
            for k, v in row.items():
                nv = nxt.get(k, 0) - factor * v
                if nv:
                    nxt[k] = nv
                else:
                    nxt.pop(k, None)
            pivots[c2] = nxt
    return pivots


def nullspace(rows, ncols: int) -> list[SparseRow]:
    """Basis of the right kernel, one sparse vector per free column, scaled to
    coprime integers."""
    pivots = rref_pivots(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec: SparseRow = {f: Fraction(1)}
        for c, row in pivots.items():
            if f in row:
                vec[c] = -row[f]
        basis.append(scale_to_integers(vec))
    return basis


def scale_to_integers(vec: SparseRow) -> SparseRow:
    denom = 1
    for v in vec.values():
        v = Fraction(v)
        denom = denom * v.denominator // gcd(denom, v.denominator)
    scaled = {k: int(Fraction(v) * denom) for k, v in vec.items()}
    g = 0
    for v in scaled.values():
        g = gcd(g, v)
    if g > 1:
        scaled = {k: v // g for k, v in scaled.items()}
    return scaled


# -- dense matrices -----------------------------------------------------------


def zeros(n: int, m: int | None = None) -> list[list]:
    m = n if m is None else m
    return [[0] * m for _ in range(n)]


def freeze(mat) -> Matrix:
    return tuple(tuple(row) for row in mat)


def identity(n: int) -> Matrix:
    return freeze([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_mul(a, b) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            v = arow[t]
            if v:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        orow[j] += v * brow[j]
    return freeze(out)


def mat_add(a, b) -> Matrix:
    return freeze([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def mat_sub(a, b) -> Matrix:
    return freeze([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def mat_scale(c, a) -> Matrix:
    return freeze([[c * x for x in row] for row in a])


def transpose(a) -> Matrix:
    return freeze(list(zip(*a))) if a else ()


def commutator(a, b) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def mat_rank(a) -> int:
    rows = [{j: v for j, v in enumerate(row) if v} for row in a]
    return rank(rows)


def mat_to_fractions(a) -> Matrix:
    return freeze([[Fraction(x) for x in row] for row in a])
