"""Integer matrix utilities: Smith normal form with unimodular transforms,
integer kernels and integer linear solving.

Implemented in-house because we need the transform matrices (and their
inverses) to produce kernel bases, cocycle class coordinates, and explicit
cochain solutions; library normal forms expose only the diagonal.
Matrices are lists of lists of Python ints; nothing here is performance
critical beyond the few-hundred-row scale.
"""

from __future__ import annotations


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    oi[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def smith_normal_form(A):
    """Smith normal form with transforms.

    Returns (diag, U, Uinv, V, Vinv) where U*A*V = S, S diagonal with
    diag[i] = S[i][i] >= 0 and diag[i] | diag[i+1]; U, V unimodular.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [row[:] for row in A]
    U, Uinv = identity_matrix(m), identity_matrix(m)
    V, Vinv = identity_matrix(n), identity_matrix(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        S[i] = [a + c * b for a, b in zip(S[i], S[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for r in Uinv:
            r[j] -= c * r[i]

    def add_col(i, j, c):
        # col_i += c * col_j
        for r in S:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]
        Vinv[j] = [a - c * b for a, b in zip(Vinv[j], Vinv[i])]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    size = min(m, n)
    while t < size:
        # find the nonzero entry of smallest magnitude in the submatrix
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = S[i][j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if S[t][t] < 0:
            negate_row(t)
        # clear the pivot row and column; restart if a remainder survives
        dirty = False
        p = S[t][t]
        for i in range(t + 1, m):
            if S[i][t]:
                q = S[i][t] // p
                if q:
                    add_row(i, t, -q)
                if S[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if S[t][j]:
                q = S[t][j] // p
                if q:
                    add_col(j, t, -q)
                if S[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility: pivot must divide every remaining entry
        p = S[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if S[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    diag = [S[i][i] for i in range(size)]
    return diag, U, Uinv, V, Vinv


def integer_kernel(A):
    """Basis (list of column vectors) of {x in Z^n : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    diag, _, _, V, _ = smith_normal_form(A)
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append([V[i][j] for i in range(n)])
    return basis


def solve_integer(A, b):
    """One integer solution x of A x = b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    diag, U, _, V, _ = smith_normal_form(A)
    y = mat_vec(U, b)
    z = [0] * n
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d:
            if y[i] % d:
                return None
            z[i] = y[i] // d
        elif y[i]:
            return None
    return mat_vec(V, z)
