"""Exact linear algebra on tiny matrices: Fraction elimination and Smith form.

Everything in this module works on nested sequences of ints/Fractions and
returns plain tuples.  Matrices here are at most rank x rank for rank <= 8,
so clarity wins over asymptotics throughout.
"""

from __future__ import annotations

from fractions import Fraction


def frac_matrix(rows):
    """Copy ``rows`` into a list of lists of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def identity_int(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(mat, vec):
    """Matrix times vector, exact; returns a tuple of Fractions."""
    return tuple(sum((Fraction(a) * Fraction(v) for a, v in zip(row, vec)),
                     Fraction(0)) for row in mat)


def det_fraction(mat):
    """Determinant by exact Gaussian elimination."""
    m = frac_matrix(mat)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1, 1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [m[r][c] - f * m[col][c] for c in range(n)]
    return det


def inv_fraction(mat):
    """Exact inverse; raises ValueError on a singular matrix."""
    n = len(mat)
    m = frac_matrix(mat)
    aug = [m[i] + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = Fraction(1, 1) / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_fraction(mat, vec):
    """Solve mat @ x = vec exactly; returns a tuple of Fractions."""
    return mat_vec(inv_fraction(mat), vec)


def leading_principal_minors(mat):
    """Determinants of the top-left k x k blocks, k = 1..n."""
    n = len(mat)
    return [det_fraction([row[: k + 1] for row in mat[: k + 1]])
            for k in range(n)]


def is_positive_definite(mat):
    """Sylvester criterion on an exact symmetric matrix."""
    return all(d > 0 for d in leading_principal_minors(mat))


def smith_normal_form(mat):
    """Smith normal form of an integer matrix with both transforms.

    Returns ``(diag, u, v)`` with ``u @ mat @ v`` diagonal, ``u`` and ``v``
    unimodular, diagonal entries nonnegative and each dividing the next.
    ``diag`` has length min(rows, cols).
    """
    a = [[int(x) for x in row] for row in mat]
    nr, nc = len(a), len(a[0])
    u = identity_int(nr)
    v = identity_int(nc)

    def row_sub(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):  # col_i -= q * col_j
        for r in range(nr):
            a[r][i] -= q * a[r][j]
        for r in range(nc):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(nr):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(nc):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def reduce_from(t0):
        for t in range(t0, min(nr, nc)):
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] and (best is None
                                    or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            while True:
                for i in range(t + 1, nr):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        if q:
                            row_sub(i, t, q)
                dirty = [i for i in range(t + 1, nr) if a[i][t]]
                if dirty:
                    swap_rows(t, min(dirty, key=lambda r: abs(a[r][t])))
                    continue
                for j in range(t + 1, nc):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        if q:
                            col_sub(j, t, q)
                dirty = [j for j in range(t + 1, nc) if a[t][j]]
                if dirty:
                    swap_cols(t, min(dirty, key=lambda c: abs(a[t][c])))
                    continue
                break

    reduce_from(0)

    # Enforce the divisibility chain d_i | d_{i+1}.
    k = min(nr, nc)
    while True:
        bad = next((i for i in range(k - 1)
                    if a[i][i] and a[i + 1][i + 1] % a[i][i]), None)
        if bad is None:
            break
        # Fold column bad+1 into column bad and re-reduce; the new pivot is
        # gcd(d_bad, d_bad+1), strictly smaller, so this terminates.
        col_sub(bad, bad + 1, -1)
        reduce_from(bad)

    for i in range(min(nr, nc)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    diag = tuple(a[i][i] for i in range(min(nr, nc)))
    return diag, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)
