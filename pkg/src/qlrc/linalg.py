"""Exact Gaussian elimination over a Field.

Matrices are plain lists of lists of field elements.  Everything here is
desk scale (dimensions in the tens), so the implementations favour clarity
over cleverness.
"""

from __future__ import annotations

from .errors import InputError
from .field import Field, FieldElement


def dot(u: list[FieldElement], v: list[FieldElement]) -> FieldElement:
    if len(u) != len(v):
        raise InputError(f"inner product of lengths {len(u)} and {len(v)}")
    acc = u[0].field.zero()
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def rref(rows: list[list[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form (a copy) and the pivot column indices."""
    if not rows:
        return [], []
    mat = [list(r) for r in rows]
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero()), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[list[FieldElement]]) -> int:
    return len(rref(rows)[1])


def solve_in_span(vectors: list[list[FieldElement]], target: list[FieldElement]):
    """Coefficients expressing target as a combination of the vectors.

    Returns the coefficient list, or None when target is outside the span.
    The result is verified by direct substitution before it is returned.
    """
    if not vectors:
        return None
    field = target[0].field
    n = len(target)
    # augmented system: columns are the vectors, last column the target
    aug = [[vec[i] for vec in vectors] + [target[i]] for i in range(n)]
    mat, pivots = rref(aug)
    k = len(vectors)
    if k in pivots:
        return None  # inconsistent
    coeffs = [field.zero()] * k
    for row, c in zip(mat, pivots):
        coeffs[c] = row[k]
    # exact re-substitution check
    for i in range(n):
        acc = field.zero()
        for x, vec in zip(coeffs, vectors):
            acc = acc + x * vec[i]
        if acc != target[i]:
            return None
    return coeffs
