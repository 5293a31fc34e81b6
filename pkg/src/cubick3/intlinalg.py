"""Exact integer and rational matrix kernels.

Matrices are plain lists of lists (row-major) of Python ints, or Fractions
where a function says so.  Nothing in this module knows about lattices; it
only provides the elimination routines everything else is built on.  All
arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: list[list]) -> list[list]:
    return [list(col) for col in zip(*A)] if A else []


def matmul(A: list[list], B: list[list]) -> list[list]:
    if not A:
        return []
    n = len(B)
    cols = range(len(B[0])) if B else range(0)
    return [[sum(row[k] * B[k][j] for k in range(n)) for j in cols] for row in A]


def mat_vec(A: list[list], v) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def gram_product(B: list[list], G: list[list]) -> list[list]:
    """B * G * B^T for a k x n row matrix B and an n x n Gram matrix G."""
    return matmul(matmul(B, G), transpose(B))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def pairing(G: list[list], u, v):
    """u * G * v^T."""
    return dot(u, mat_vec(G, v))


def det_bareiss(A: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _row_combine(M, i, k, x, y, u, v):
    # (row_i, row_k) <- (x*row_i + y*row_k, u*row_i + v*row_k); x*v - y*u = +-1
    Mi, Mk = M[i], M[k]
    for j in range(len(Mi)):
        a, b = Mi[j], Mk[j]
        Mi[j] = x * a + y * b
        Mk[j] = u * a + v * b


def row_echelon_transform(A: list[list[int]]) -> tuple[list[list[int]], list[list[int]], int]:
    """Integer row echelon form through unimodular row operations.

    Returns (H, U, rank) with U*A == H, U unimodular, pivot columns strictly
    increasing with positive pivots, and rows from index `rank` on zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = identity(m)
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if H[i][col]), None)
        if piv is None:
            continue
        if piv != r:
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            b = H[i][col]
            if not b:
                continue
            a = H[r][col]
            if b % a == 0:
                q = b // a
                for j in range(n):
                    H[i][j] -= q * H[r][j]
                for j in range(m):
                    U[i][j] -= q * U[r][j]
            else:
                g, x, y = xgcd(a, b)
                u, v = -(b // g), a // g
                _row_combine(H, r, i, x, y, u, v)
                _row_combine(U, r, i, x, y, u, v)
        if H[r][col] < 0:
            H[r] = [-e for e in H[r]]
            U[r] = [-e for e in U[r]]
        r += 1
        if r == m:
            break
    return H, U, r


def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Canonical Hermite basis of the row lattice (zero rows dropped).

    Pivots are positive and the entries above each pivot are reduced into
    [0, pivot), so two generating sets of the same lattice give identical
    output.
    """
    if not rows:
        return []
    H, _, r = row_echelon_transform(rows)
    H = H[:r]
    n = len(H[0]) if H else 0
    pivots = []
    for i, row in enumerate(H):
        j = next(k for k in range(n) if row[k])
        pivots.append((i, j))
    for i, j in pivots:
        p = H[i][j]
        for k in range(i):
            q = H[k][j] // p  # floor division keeps the entry in [0, p)
            if q:
                for col in range(n):
                    H[k][col] -= q * H[i][col]
    return H


def left_kernel(A: list[list[int]]) -> list[list[int]]:
    """Canonical basis of {x in Z^m : x*A == 0}.

    The kernel of a unimodular transform is saturated by construction: the
    returned rows span every integer vector of the rational kernel.
    """
    m = len(A)
    if m == 0:
        return []
    _, U, r = row_echelon_transform(A)
    return hnf_rows(U[r:])


def rank_int(A: list[list[int]]) -> int:
    if not A:
        return 0
    _, _, r = row_echelon_transform(A)
    return r


def smith_normal_form(A: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Smith normal form diagonal of an integer matrix.

    Returns (diag, V) where diag lists the min(m, n) diagonal entries of
    D = U*A*V (nonnegative, each dividing the next, zeros last) for
    unimodular U and V; only the column transform V is returned.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    V = identity(n)

    def col_swap(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def col_add(j, k, q):
        # col_j += q * col_k
        for row in D:
            row[j] += q * row[k]
        for row in V:
            row[j] += q * row[k]

    def col_combine(j, k, x, y, u, v):
        for row in D:
            a, b = row[j], row[k]
            row[j] = x * a + y * b
            row[k] = u * a + v * b
        for row in V:
            a, b = row[j], row[k]
            row[j] = x * a + y * b
            row[k] = u * a + v * b

    def row_add(i, k, q):
        for j in range(n):
            D[i][j] += q * D[k][j]

    t = 0
    limit = min(m, n)
    while True:
        t = 0
        while t < limit:
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    e = D[i][j]
                    if e and (best is None or abs(e) < best):
                        piv, best = (i, j), abs(e)
            if piv is None:
                break
            i, j = piv
            if i != t:
                D[t], D[i] = D[i], D[t]
            if j != t:
                col_swap(t, j)
            while True:
                for i in range(t + 1, m):
                    b = D[i][t]
                    if not b:
                        continue
                    a = D[t][t]
                    if b % a == 0:
                        row_add(i, t, -(b // a))
                    else:
                        g, x, y = xgcd(a, b)
                        _row_combine(D, t, i, x, y, -(b // g), a // g)
                for j in range(t + 1, n):
                    b = D[t][j]
                    if not b:
                        continue
                    a = D[t][t]
                    if b % a == 0:
                        col_add(j, t, -(b // a))
                    else:
                        g, x, y = xgcd(a, b)
                        col_combine(t, j, x, y, -(b // g), a // g)
                if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                    D[t][j] == 0 for j in range(t + 1, n)
                ):
                    break
            t += 1
        # normalize signs with row scalings (V untouched)
        for i in range(limit):
            if D[i][i] < 0:
                for j in range(n):
                    D[i][j] = -D[i][j]
        # enforce the divisibility chain; a violation reruns the reduction
        fixed = True
        r = sum(1 for i in range(limit) if D[i][i])
        for i in range(r):
            for j in range(i + 1, r):
                if D[j][j] % D[i][i] != 0:
                    col_add(i, j, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            break
    return [D[i][i] for i in range(limit)], V


def frac_rows(A) -> list[list[Fraction]]:
    return [[Fraction(e) for e in row] for row in A]


def frac_inv(A) -> list[list[Fraction]]:
    """Inverse of a square matrix over Q (Gauss-Jordan)."""
    n = len(A)
    M = frac_rows(A)
    R = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        R[col], R[piv] = R[piv], R[col]
        inv = 1 / M[col][col]
        M[col] = [e * inv for e in M[col]]
        R[col] = [e * inv for e in R[col]]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
                R[i] = [a - f * b for a, b in zip(R[i], R[col])]
    return R


def solve_rational(A, b) -> list[Fraction] | None:
    """Solve A*x = b over Q for an m x k matrix A of full column rank.

    Returns the unique solution when the system is consistent, else None.
    """
    m = len(A)
    k = len(A[0]) if m else 0
    M = [[Fraction(e) for e in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(row, m) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = 1 / M[row][col]
        M[row] = [e * inv for e in M[row]]
        for i in range(m):
            if i != row and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b2 for a, b2 in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < k:
        raise ValueError("matrix does not have full column rank")
    for i in range(row, m):
        if M[i][k]:
            return None
    x: list[Fraction] = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        x[col] = M[r][k]
    return x


def coords_in_rowspace(B, x) -> list[Fraction] | None:
    """Express x as a rational combination of the (independent) rows of B.

    Returns the coefficients or None when x lies outside the rational span.
    """
    return solve_rational(transpose(B), x)


def hnf_solve(H, x) -> list[Fraction] | None:
    """Coefficients of x on echelon rows H, or None outside the rational span.

    H must have strictly increasing pivot columns (e.g. output of hnf_rows),
    which makes this a single back-substitution pass instead of a full
    elimination.  Lattice membership is integrality of the coefficients.
    """
    if not H:
        return None if any(x) else []
    n = len(H[0])
    res = [Fraction(e) for e in x]
    out = []
    for row in H:
        j = next(k for k in range(n) if row[k])
        c = res[j] / row[j]
        out.append(c)
        if c:
            for t in range(j, n):
                if row[t]:
                    res[t] -= c * row[t]
    if any(res):
        return None
    return out
