"""Exact rational linear algebra and fraction-free polynomial-matrix rank.

Matrices are lists of lists of Fraction.  Everything here is deterministic:
pivots are always the first usable row/column, so kernel bases and echelon
forms are reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction

from .exactpoly import Poly

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def frac_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros_vector(n: int) -> Vector:
    return [Fraction(0)] * n


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, n_cols: int | None = None) -> list[Vector]:
    """Basis of {v : A v = 0}, one vector per free column, ordered by column.

    Each basis vector has 1 in its free column and the pivot columns solved
    from the RREF; this makes the basis reproducible.
    """
    if rows:
        n_cols = len(rows[0])
    elif n_cols is None:
        raise ValueError("need n_cols for an empty matrix")
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis: list[Vector] = []
    for fc in free:
        v = zeros_vector(n_cols)
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def invert(rows: Matrix) -> Matrix:
    n = len(rows)
    aug = [list(map(Fraction, rows[i])) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def solve(rows: Matrix, rhs: Vector) -> Vector | None:
    """One exact solution of A x = b, or None if inconsistent.

    Free variables are set to 0, so the answer is deterministic.
    """
    if not rows:
        return None
    n_cols = len(rows[0])
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = zeros_vector(n_cols)
    for r, pc in enumerate(pivots):
        x[pc] = red[r][-1]
    return x


def solve_many(rows: Matrix, rhs_columns: list[Vector]) -> list[Vector] | None:
    """Solve A x = b for several right-hand sides with one elimination.

    Returns one solution per column (free variables at 0), or None if any
    system is inconsistent.
    """
    if not rows:
        return None
    n_cols = len(rows[0])
    aug = [
        list(map(Fraction, row)) + [Fraction(col[i]) for col in rhs_columns]
        for i, row in enumerate(rows)
    ]
    red, pivots = rref(aug)
    if any(p >= n_cols for p in pivots):
        return None
    sols = []
    for t in range(len(rhs_columns)):
        x = zeros_vector(n_cols)
        for r, pc in enumerate(pivots):
            x[pc] = red[r][n_cols + t]
        sols.append(x)
    return sols


def poly_matrix_rank(entries: list[list[Poly]]) -> int:
    """Rank of a polynomial matrix over the rational function field.

    Bareiss-style fraction-free elimination: every division is exact in the
    polynomial ring, so the computation never leaves Q[x].
    """
    m = [row[:] for row in entries]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    if n_cols == 0:
        return 0
    arity = m[0][0].arity
    prev = Poly.constant(arity, 1)
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            head = m[i][c]
            for j in range(c + 1, n_cols):
                num = m[i][j] * pivot - head * m[r][j]
                m[i][j] = num.div_exact(prev)
            m[i][c] = Poly.zero(arity)
        prev = pivot
        r += 1
        if r == n_rows:
            break
    return r
