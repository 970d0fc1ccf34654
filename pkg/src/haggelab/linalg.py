"""Row reduction that works for Fraction (exact) and float (pivoted) entries."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .numeric import EPS, Scalar


def _is_float(rows: Sequence[Sequence[Scalar]]) -> bool:
    return any(isinstance(v, float) for row in rows for v in row)


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    floating = _is_float(m)
    if floating:
        scale = max((abs(v) for r in m for v in r), default=0.0) or 1.0
        tol = EPS * scale * 1e3
    n_rows, n_cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        if floating:
            best = max(range(r, n_rows), key=lambda i: abs(m[i][c]))
            if abs(m[best][c]) <= tol:
                continue
        else:
            best = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
            if best is None:
                continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        m[r] = [v / piv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """Basis of the right nullspace, one vector per free column."""
    m, pivots = rref(rows)
    n_cols = len(rows[0])
    free = [c for c in range(n_cols) if c not in pivots]
    one, zero = (1.0, 0.0) if _is_float(rows) else (Fraction(1), Fraction(0))
    basis = []
    for fc in free:
        v = [zero] * n_cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> List[Scalar] | None:
    """Unique solution of ``matrix @ x = rhs`` or ``None`` if singular."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    m, pivots = rref(aug)
    n = len(matrix[0])
    if pivots != list(range(n)):
        return None
    return [m[i][n] for i in range(n)]


def det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def det(m: Sequence[Sequence[Scalar]]) -> Scalar:
    """Cofactor expansion; only used for small (<= 6) exact matrices."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return det3(m)
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
