"""Exact linear algebra over Z and over rings with exact division.

Everything here is fraction-free:

* bareiss_det -- determinant via the Bareiss algorithm; works for int
  entries and for LaurentPoly entries (anything with divexact semantics).
* smith_normal_form -- S = U A V with unimodular U, V, plus U^{-1},
  tracked through the elementary operations.
* solve / kernel helpers built on the SNF.

Matrices are plain lists of lists; sizes in this package are small
(tens), so clarity beats asymptotics.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


# ---------------------------------------------------------------------------
# generic Bareiss determinant
# ---------------------------------------------------------------------------

def _divexact(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in Bareiss step")
        return q
    return a.divexact(b)


def bareiss_det(rows: Sequence[Sequence]):
    """Exact determinant of a square matrix over Z or a Laurent ring.

    Returns an element of the same ring (int 1 for the 0x0 matrix, or the
    ring's 1 if entries are LaurentPoly -- the caller knows which).
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        # Find a nonzero pivot in column k at or below row k.
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return 0 * a[0][0] if not isinstance(a[0][0], int) else 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = _divexact(num, prev) if prev != 1 else num
            a[i][k] = 0 * a[i][k] if not isinstance(a[i][k], int) else 0
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# ---------------------------------------------------------------------------
# integer matrix utilities
# ---------------------------------------------------------------------------

def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    assert not b or len(a[0]) == len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(len(a))]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, av in enumerate(arow):
            if av:
                brow = b[k]
                for j in range(cols):
                    orow[j] += av * brow[j]
    return out


def mat_vec(a: Matrix, v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


# ---------------------------------------------------------------------------
# Smith normal form with transforms
# ---------------------------------------------------------------------------

def smith_normal_form(a: Matrix) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Return (S, U, Uinv, V) with S = U * a * V, U and V unimodular.

    S is diagonal (rectangular) with nonnegative entries; successive
    divisibility is not enforced (nothing downstream needs it), but zero
    rows/columns are pushed past the nonzero diagonal.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(row) for row in a]
    u = identity(m)
    uinv = identity(m)
    v = identity(n)

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(src, dst, c):  # row_dst += c * row_src
        srow, drow = s[src], s[dst]
        for k in range(n):
            drow[k] += c * srow[k]
        surow, durow = u[src], u[dst]
        for k in range(m):
            durow[k] += c * surow[k]
        for r in uinv:  # col_src -= c * col_dst
            r[src] -= c * r[dst]

    def row_neg(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def col_add(src, dst, c):  # col_dst += c * col_src
        for r in s:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def col_neg(i):
        for r in s:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]

    t = 0
    while True:
        # locate a nonzero entry at or past (t, t)
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j]:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        i, j = pos
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        # chase remainders until pivot divides its row and column
        while True:
            if s[t][t] < 0:
                row_neg(t)
            p = s[t][t]
            done = True
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // p
                    row_add(t, i, -q)
                    if s[i][t]:
                        row_swap(i, t)
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // p
                    col_add(t, j, -q)
                    if s[t][j]:
                        col_swap(j, t)
                        done = False
                        break
            if done:
                break
        t += 1
        if t >= m or t >= n:
            break
    return s, u, uinv, v


def snf_rank(s: Matrix) -> int:
    r = 0
    for i in range(min(len(s), len(s[0]) if s else 0)):
        if s[i][i]:
            r += 1
    return r


def solve_integer(a: Matrix, b: Sequence[int]) -> Optional[List[int]]:
    """One integer solution x of a x = b, or None if none exists."""
    m = len(a)
    n = len(a[0]) if m else 0
    if len(b) != m:
        raise ValueError("rhs length does not match matrix")
    if n == 0:
        return [] if not any(b) else None
    s, u, _uinv, v = smith_normal_form(a)
    ub = mat_vec(u, list(b))
    y = [0] * n
    for i in range(m):
        d = s[i][i] if i < n else 0
        if d:
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
        elif ub[i]:
            return None
    return mat_vec(v, y)


def kernel_basis(a: Matrix) -> List[List[int]]:
    """Basis of the integer kernel of a (as column vectors)."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return []
    s, _u, _uinv, v = smith_normal_form(a)
    r = snf_rank(s)
    return [[v[row][j] for row in range(n)] for j in range(r, n)]


def quotient_basis(rel_rows: Matrix, dim: int) -> List[List[int]]:
    """Basis of Z^dim / (row span of rel_rows), assuming a free quotient.

    Returns dim - rank vectors of Z^dim whose classes form a basis.
    Raises ArithmeticError if the quotient has torsion (a diagonal SNF
    entry other than 0 or 1) -- callers in this package deal with
    surface complexes whose quotients are free.
    """
    if not rel_rows:
        return identity(dim)
    cols = [[row[j] for row in rel_rows] for j in range(dim)]  # dim x k
    # Work with the transpose: relations as columns of a dim x k matrix R.
    # im(R) = Uinv * im(S); with unit diagonal entries the quotient basis is
    # the trailing columns of Uinv.
    rmat = cols
    s, _u, uinv, _v = smith_normal_form(rmat)
    r = snf_rank(s)
    for i in range(r):
        if s[i][i] != 1:
            raise ArithmeticError(
                f"torsion in quotient (SNF entry {s[i][i]})"
            )
    return [[uinv[row][j] for row in range(dim)] for j in range(r, dim)]
