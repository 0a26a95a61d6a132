"""Row reduction over an exact field.

Entries are any objects with field arithmetic and truthiness meaning
"nonzero" (CyclotomicElement, FiniteFieldElement, Fraction).
"""

from __future__ import annotations


def row_echelon(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: list[list], ncols: int) -> int:
    return len(row_echelon(rows, ncols)[1])


def nullspace(rows: list[list], ncols: int, zero, one) -> list[list]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    ech, pivots = row_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(ech, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
