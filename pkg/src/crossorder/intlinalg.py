"""Exact integer linear systems: kernels, particular solutions, Hermite forms.

Everything is plain Python ints.  Matrices are given as sparse rows
(``{column: coefficient}``), which is how the cocycle equations arise.
"""

from __future__ import annotations

from typing import Sequence

SparseRow = dict[int, int]


def _axpy(dst: list[int], src: list[int], q: int) -> None:
    # dst -= q * src
    for i, x in enumerate(src):
        if x:
            dst[i] -= q * x


def _column_reduce(rows: Sequence[SparseRow], ncols: int):
    """Unimodular column reduction of the matrix given by ``rows``.

    Returns ``(cols, free, pivots)``: ``cols[j]`` is column j of a unimodular U,
    ``free`` lists the columns of U spanning the integer kernel, and
    ``pivots`` maps a row index to the column of A*U that is nonzero there.
    """
    cols = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    free = list(range(ncols))
    pivots: dict[int, int] = {}
    for ri, row in enumerate(rows):
        if not row:
            continue
        vals = {}
        for j in free:
            col = cols[j]
            s = sum(c * col[k] for k, c in row.items())
            if s:
                vals[j] = s
        while len(vals) > 1:
            j = min(vals, key=lambda c: (abs(vals[c]), c))
            a = vals[j]
            for k in sorted(vals):
                if k == j:
                    continue
                q = vals[k] // a
                if q:
                    _axpy(cols[k], cols[j], q)
                    vals[k] -= q * a
                if vals[k] == 0:
                    del vals[k]
        if vals:
            (j,) = vals
            free.remove(j)
            pivots[ri] = j
    return cols, free, pivots


def integer_kernel(rows: Sequence[SparseRow], ncols: int) -> list[list[int]]:
    cols, free, _ = _column_reduce(rows, ncols)
    return hermite_basis([cols[j] for j in free])


def solve_integer(rows: Sequence[SparseRow], rhs: Sequence[int], ncols: int):
    """Integer solutions of ``A x = rhs``.

    Returns ``(x, kernel)`` with ``x`` the canonical solution (see
    :func:`reduce_mod`) or ``None`` if no integer solution exists, and
    ``kernel`` a Hermite basis of the integer kernel.
    """
    cols, free, pivots = _column_reduce(rows, ncols)
    kernel = hermite_basis([cols[j] for j in free])
    y: dict[int, int] = {}
    for ri, row in enumerate(rows):
        known = 0
        for j, yj in y.items():
            col = cols[j]
            known += yj * sum(c * col[k] for k, c in row.items())
        rest = rhs[ri] - known
        j = pivots.get(ri)
        if j is None:
            if rest != 0:
                return None, kernel
            continue
        col = cols[j]
        a = sum(c * col[k] for k, c in row.items())
        if rest % a:
            return None, kernel
        y[j] = rest // a
    x = [0] * ncols
    for j, yj in y.items():
        if yj:
            _axpy(x, cols[j], -yj)
    return reduce_mod(x, kernel), kernel


def hermite_basis(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical basis of the lattice spanned by ``vectors``.

    Row Hermite normal form taken from the LAST coordinate backwards: each
    basis vector's pivot is its last nonzero entry, pivots are positive, and
    entries at other vectors' pivot positions lie in ``[0, pivot)``.
    """
    if not vectors:
        return []
    width = len(vectors[0])
    rows = [list(reversed(v)) for v in vectors if any(v)]
    basis: list[list[int]] = []
    r0 = 0
    for c in range(width):
        if r0 >= len(rows):
            break
        live = [i for i in range(r0, len(rows)) if rows[i][c]]
        if not live:
            continue
        while True:
            live = [i for i in range(r0, len(rows)) if rows[i][c]]
            p = min(live, key=lambda i: (abs(rows[i][c]), i))
            if len(live) == 1:
                break
            for i in live:
                if i != p:
                    _axpy(rows[i], rows[p], rows[i][c] // rows[p][c])
        rows[r0], rows[p] = rows[p], rows[r0]
        if rows[r0][c] < 0:
            rows[r0] = [-x for x in rows[r0]]
        piv = rows[r0][c]
        for i in range(r0):
            q = rows[i][c] // piv
            if q:
                _axpy(rows[i], rows[r0], q)
        basis.append(c)
        r0 += 1
    return [list(reversed(rows[i])) for i in range(r0)]


def reduce_mod(x: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int]:
    """Unique representative of ``x + span(basis)`` for a :func:`hermite_basis`.

    Each pivot coordinate of the result lies in ``[0, pivot)``.
    """
    out = list(x)
    for vec in basis:
        p = max(i for i, v in enumerate(vec) if v)
        q = out[p] // vec[p]
        if q:
            _axpy(out, vec, q)
    return out


def in_span(x: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    return not any(reduce_mod(x, basis)) if basis else not any(x)
