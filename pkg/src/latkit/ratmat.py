"""Exact dense linear algebra over the rationals and over Z.

Matrices are plain lists of lists.  Entries are ints or Fractions for the
rational routines; the integer normal forms (snf, hnf_int) insist on ints.
Everything here is exact -- no floats anywhere.
"""

from fractions import Fraction
from math import gcd, lcm


class MatrixError(ValueError):
    pass


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n, m):
    return [[0] * m for _ in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise MatrixError("dimension mismatch in mat_mul")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def scale_mat(a, s):
    return [[x * s for x in row] for row in a]


def is_integral(x):
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, (list, tuple)):
        return all(is_integral(y) for y in x)
    return False


def to_int(x):
    if isinstance(x, (list, tuple)):
        return [to_int(y) for y in x]
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise MatrixError("non-integer entry %s" % x)
        return x.numerator
    if isinstance(x, int):
        return x
    raise MatrixError("non-integer entry %r" % (x,))


def det(a):
    """Determinant by fraction-free-ish Gaussian elimination over Q."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * d


def inverse(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            raise MatrixError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def rref(rows, ncols, zero, one):
    """Reduced row echelon form over any exact field.

    Entries must support +, -, *, / and truth testing.  Returns (R, pivots).
    """
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel(rows, ncols, zero=Fraction(0), one=Fraction(1)):
    """Basis (as rows) of the right kernel {x : A x = 0} over the field."""
    red, pivots = rref(rows, ncols, zero, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = zero - red[r][f]
        basis.append(v)
    return basis


def rank(rows, ncols=None):
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    frows = [[Fraction(x) for x in r] for r in rows]
    red, pivots = rref(frows, ncols, Fraction(0), Fraction(1))
    return len(pivots)


# --- integer normal forms -------------------------------------------------

def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def snf(mat):
    """Smith normal form.  Returns (U, D, V) with D = U * mat * V,
    U and V unimodular, D diagonal with nonnegative d1 | d2 | ...

    Pivot choice: smallest absolute value, ties by lowest (row, col).
    """
    a = [list(map(to_int, row)) for row in mat]
    n = len(a)
    m = len(a[0]) if a else 0
    u = identity(n)
    v = identity(m)
    t = 0
    while t < min(n, m):
        # locate pivot
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        if i0 != t:
            _swap_rows(a, t, i0)
            _swap_rows(u, t, i0)
        if j0 != t:
            _swap_cols(a, t, j0)
            _swap_cols(v, t, j0)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    if a[i][t]:
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(n):
                        a[i][j] -= q * a[i][t]
                    for i in range(m):
                        v[i][j] -= q * v[i][t]
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, n)):
                continue
            # enforce pivot | remaining block
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def hnf_int(mat):
    """Row Hermite normal form of an integer matrix.

    Upper triangular (echelon), positive pivots, entries above a pivot
    reduced into [0, pivot).  Zero rows are dropped.
    """
    a = [list(map(to_int, row)) for row in mat]
    if not a:
        return []
    n, m = len(a), len(a[0])
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if a[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(a[i][c]), i))
            if i0 != r:
                _swap_rows(a, r, i0)
            done = True
            for i in range(r + 1, n):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < n and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == n:
                break
    return a[:r]


def hnf_rowspan(mat):
    """HNF basis of the Z-span of the (possibly rational) rows of mat.

    The common denominator is cleared before the integer HNF and
    reattached afterwards, so the returned rows Z-span exactly what the
    input rows Z-span.
    """
    if not mat:
        return []
    d = 1
    for row in mat:
        for x in row:
            d = lcm(d, Fraction(x).denominator)
    ints = [[to_int(Fraction(x) * d) for x in row] for row in mat]
    h = hnf_int(ints)
    return [[Fraction(x, d) for x in row] for row in h]


def int_kernel(mat):
    """Basis rows of {x in Z^m : mat . x = 0}; the result is saturated."""
    a = [list(map(to_int, row)) for row in mat]
    if not a:
        return []
    m = len(a[0])
    u, d, v = snf(a)
    r = sum(1 for i in range(min(len(a), m)) if d[i][i])
    vt = transpose(v)
    return [vt[j] for j in range(r, m)]


def signature(gram):
    """Signature (n_plus, n_minus) of a symmetric nondegenerate matrix,
    by exact symmetric Gaussian reduction (Sylvester counting)."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    npos = nneg = 0
    for t in range(n):
        if not a[t][t]:
            j = next((i for i in range(t + 1, n) if a[i][i]), None)
            if j is not None:
                _swap_rows(a, t, j)
                _swap_cols(a, t, j)
            else:
                j = next((i for i in range(t + 1, n) if a[t][i]), None)
                if j is None:
                    raise MatrixError("degenerate form in signature()")
                # e_t += e_j makes the diagonal entry 2*a[t][j] != 0
                a[t] = [x + y for x, y in zip(a[t], a[j])]
                for row in a:
                    row[t] += row[j]
        d = a[t][t]
        if d > 0:
            npos += 1
        else:
            nneg += 1
        for i in range(t + 1, n):
            if a[i][t]:
                f = a[i][t] / d
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
        for row in a[t + 1:]:
            row[t] = Fraction(0)
        for j in range(t + 1, n):
            a[t][j] = Fraction(0)
    return npos, nneg
