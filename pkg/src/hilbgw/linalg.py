"""Exact linear algebra over fields and over truncated series rings.

Matrices are plain lists of rows.  ``QMatrix`` helpers treat a matrix whose
entries are ``QSeries`` as a power series with matrix coefficients.
"""

from __future__ import annotations

from typing import Sequence

from .series import QSeries

__all__ = [
    "SingularMatrixError",
    "solve_linear",
    "matrix_inverse",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "transpose",
    "identity",
    "zero_matrix",
    "series_matrix",
    "series_matrix_coefficient",
    "series_matrix_inverse",
    "mat_vec",
]


class SingularMatrixError(ArithmeticError):
    pass


def _inv(x):
    return x.inverse() if hasattr(x, "inverse") else 1 / x


def solve_linear(A: Sequence[Sequence], b: Sequence, field) -> list:
    """Solve A x = b for square A by Gaussian elimination."""
    n = len(A)
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularMatrixError("singular system")
        M[col], M[piv] = M[piv], M[col]
        inv = _inv(M[col][col])
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def matrix_inverse(A: Sequence[Sequence], field) -> list[list]:
    n = len(A)
    M = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularMatrixError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = _inv(M[col][col])
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a = A[i][k]
                b = B[k][j]
                if not a or not b:
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            row.append(acc if acc is not None else A[i][0] * 0)
        out.append(row)
    return out


def mat_vec(A, v):
    return [_dot(row, v) for row in A]


def _dot(row, v):
    acc = None
    for a, b in zip(row, v):
        if not a or not b:
            continue
        t = a * b
        acc = t if acc is None else acc + t
    return acc if acc is not None else row[0] * 0


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def identity(n: int, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zero_matrix(n: int, zero, m: int | None = None):
    return [[zero for _ in range(m if m is not None else n)] for _ in range(n)]


# --- matrices with QSeries entries ----------------------------------------


def series_matrix_coefficient(A, k: int):
    """The q^k coefficient matrix of a QSeries-valued matrix."""
    return [[x.coeffs[k] for x in row] for row in A]


def series_matrix(coeff_mats: Sequence, order: int, field, var: str = "q"):
    """Assemble a QSeries-valued matrix from its q-coefficient matrices."""
    n, m = len(coeff_mats[0]), len(coeff_mats[0][0])
    zero = field.zero
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            cs = tuple(coeff_mats[k][i][j] if k < len(coeff_mats) else zero for k in range(order + 1))
            row.append(QSeries._raw(cs, order, field, var))
        out.append(row)
    return out


def series_matrix_inverse(A, field):
    """Inverse of a QSeries-valued matrix whose q^0 part is invertible."""
    order = min(x.order for row in A for x in row)
    n = len(A)
    coeffs = [series_matrix_coefficient(A, k) for k in range(order + 1)]
    inv0 = matrix_inverse(coeffs[0], field)
    out = [inv0]
    for k in range(1, order + 1):
        acc = zero_matrix(n, field.zero)
        for j in range(1, k + 1):
            acc = mat_add(acc, mat_mul(coeffs[j], out[k - j]))
        out.append(mat_scale(mat_mul(inv0, acc), -1))
    return series_matrix(out, order, field)
