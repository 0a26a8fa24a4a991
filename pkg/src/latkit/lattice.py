"""Integral lattices: Gram matrices, overlattice gluing, duals,
discriminant finite quadratic forms, saturation and orthogonal complements.

Vectors are rows of coordinates in the lattice basis.  All arithmetic is
exact (ints and Fractions); every object is immutable after construction.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt

from . import ratmat
from .ratmat import (
    det, hnf_rowspan, identity, int_kernel, inverse, is_integral, mat_mul,
    mat_vec, rank, signature, snf, to_int, transpose,
)


class LatticeError(ValueError):
    pass


class GlueError(LatticeError):
    pass


@dataclass(frozen=True)
class IntegralLattice:
    gram: tuple  # tuple of tuples of ints

    @property
    def rank(self):
        return len(self.gram)

    @property
    def gram_rows(self):
        return [list(row) for row in self.gram]

    @property
    def det(self):
        return int(det(self.gram_rows))

    @property
    def signature(self):
        if self.rank == 0:
            return (0, 0)
        return signature(self.gram_rows)

    @property
    def is_even(self):
        return all(row[i] % 2 == 0 for i, row in enumerate(self.gram))

    @property
    def is_definite(self):
        npos, nneg = self.signature
        return npos == 0 or nneg == 0

    def pairing(self, u, v):
        return ratmat.vec_dot(mat_vec(self.gram_rows, list(v)), list(u))

    def norm_of(self, v):
        return self.pairing(v, v)


@dataclass(frozen=True)
class GlueVector:
    coords: tuple  # Fractions, length = rank of the base lattice

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in coords))


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Discriminant group L*/L with its torsion quadratic form.

    invariant_factors: d_1 | d_2 | ... (each > 1)
    generator_lifts:   dual vectors in base coordinates; lift i has order d_i
    q_values:          q(lift_i) in Q/2Z, normalised into [0, 2)
    b_matrix:          b(lift_i, lift_j) in Q/Z, normalised into [0, 1)
    """
    invariant_factors: tuple
    generator_lifts: tuple
    q_values: tuple
    b_matrix: tuple

    @property
    def order(self):
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def q_of(self, coeffs):
        """q of the element sum(coeffs[i] * lift_i), in [0, 2)."""
        val = Fraction(0)
        k = len(self.invariant_factors)
        for i in range(k):
            val += coeffs[i] * coeffs[i] * self.q_values[i]
            for j in range(i + 1, k):
                val += 2 * coeffs[i] * coeffs[j] * self.b_matrix[i][j]
        return val % 2

    def b_of(self, x, y):
        val = Fraction(0)
        k = len(self.invariant_factors)
        for i in range(k):
            for j in range(k):
                val += x[i] * y[j] * self.b_matrix[i][j]
        return val % 1

    def element_order(self, coeffs):
        o = 1
        for a, d in zip(coeffs, self.invariant_factors):
            from math import gcd, lcm
            o = lcm(o, d // gcd(a, d))
        return o

    def elements(self):
        for coeffs in product(*(range(d) for d in self.invariant_factors)):
            yield coeffs


def make_lattice(gram):
    """Validate and build an integral lattice from a Gram matrix."""
    rows = [list(row) for row in gram]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise LatticeError("Gram matrix must be square")
    try:
        rows = [[to_int(x) for x in row] for row in rows]
    except ratmat.MatrixError as e:
        raise LatticeError("Gram matrix must be integral: %s" % e)
    for i in range(n):
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                raise LatticeError("Gram matrix must be symmetric")
    if n > 0 and det(rows) == 0:
        raise LatticeError("Gram matrix is degenerate")
    return IntegralLattice(tuple(tuple(row) for row in rows))


def direct_sum(lattices):
    n = sum(lat.rank for lat in lattices)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for lat in lattices:
        r = lat.rank
        for i in range(r):
            for j in range(r):
                gram[off + i][off + j] = lat.gram[i][j]
        off += r
    return make_lattice(gram)


def rescale(lat, s):
    s = int(s)
    if s == 0:
        raise LatticeError("rescale by 0")
    return make_lattice([[x * s for x in row] for row in lat.gram_rows])


def discriminant_group(lat):
    """Discriminant group L*/L as a finite quadratic form.

    Generator lifts come from the Smith normal form of the Gram matrix:
    with U G V = D, the class of column i of U^-1 generates a cyclic
    factor of order d_i in Z^n / G Z^n = L*/L, and its dual-vector lift
    in base coordinates is G^-1 applied to that column.
    """
    n = lat.rank
    if n == 0:
        return FiniteQuadraticForm((), (), (), ())
    g = lat.gram_rows
    u, d, v = snf(g)
    ginv = inverse(g)
    uinv = inverse(u)
    factors = []
    lifts = []
    for i in range(n):
        di = d[i][i]
        if di <= 1:
            continue
        col = [uinv[r][i] for r in range(n)]
        lift = mat_vec(ginv, col)
        factors.append(di)
        lifts.append(tuple(lift))
    qs = tuple(lat.norm_of(x) % 2 for x in lifts)
    bm = tuple(tuple(lat.pairing(x, y) % 1 for y in lifts) for x in lifts)
    return FiniteQuadraticForm(tuple(factors), tuple(lifts), qs, bm)


def overlattice(lat, glue):
    """Adjoin glue vectors to an even lattice; returns (L', index, B).

    B is the change of basis: its rows express the basis of L' in the
    coordinates of the input lattice.
    """
    n = lat.rank
    vecs = [list(g.coords) if isinstance(g, GlueVector) else [Fraction(x) for x in g]
            for g in glue]
    for k, w in enumerate(vecs):
        if len(w) != n:
            raise GlueError("glue vector %d has wrong length" % k)
        pair_rows = mat_vec(lat.gram_rows, w)
        for i, p in enumerate(pair_rows):
            if Fraction(p).denominator != 1:
                raise GlueError(
                    "glue vector %d pairs non-integrally with basis vector %d "
                    "(value %s)" % (k, i, p))
        self_pair = lat.norm_of(w)
        if Fraction(self_pair).denominator != 1 or to_int(Fraction(self_pair)) % 2 != 0:
            raise GlueError(
                "glue vector %d has self-pairing %s not in 2Z" % (k, self_pair))
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            p = lat.pairing(vecs[a], vecs[b])
            if Fraction(p).denominator != 1:
                raise GlueError(
                    "glue vectors %d and %d pair non-integrally (value %s)"
                    % (a, b, p))
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)] + vecs
    basis = hnf_rowspan(rows)
    if len(basis) != n:
        raise GlueError("glue vectors do not preserve the rank")
    new_gram = mat_mul(mat_mul(basis, lat.gram_rows), transpose(basis))
    new_lat = make_lattice(new_gram)
    ratio = Fraction(lat.det, new_lat.det)
    if ratio.denominator != 1:
        raise LatticeError("internal: determinant ratio %s not integral" % ratio)
    idx2 = ratio.numerator
    idx = isqrt(idx2)
    if idx * idx != idx2:
        raise LatticeError("internal: determinant ratio %d is not a square" % idx2)
    return new_lat, idx, basis


def sublattice(lat, rows):
    """Lattice on independent rows (coordinates in lat's basis)."""
    rows = [list(r) for r in rows]
    if rank(rows, lat.rank) != len(rows):
        raise LatticeError("sublattice rows are dependent")
    gram = mat_mul(mat_mul(rows, lat.gram_rows), transpose(rows))
    return make_lattice(gram)


def saturation(lat, rows):
    """Primitive closure of the span of rows inside the lattice.

    Returns (basis_rows, index) where index is the index of the input
    Z-span inside its saturation.
    """
    rows = [list(r) for r in rows]
    n = lat.rank
    k = len(rows)
    if rank(rows, n) != k:
        raise LatticeError("saturation input rows are dependent")
    # rational kernel of the span, cleared to an integer matrix
    frows = [[Fraction(x) for x in r] for r in rows]
    ker = ratmat.kernel(frows, n)
    if not ker:
        sat = identity(n)
    else:
        from math import lcm
        kint = []
        for v in ker:
            d = 1
            for x in v:
                d = lcm(d, x.denominator)
            kint.append([to_int(x * d) for x in v])
        sat = int_kernel(kint)
    sat = [[int(x) for x in r] for r in hnf_rowspan(sat)]
    # index = |det of the coordinates of rows in the saturation basis|
    coords = _express_in_basis(rows, sat)
    sq = [[coords[i][j] for j in range(k)] for i in range(k)]
    idx = abs(det(sq))
    if idx.denominator != 1:
        raise LatticeError("internal: non-integral saturation index")
    return sat, int(idx)


def _express_in_basis(rows, basis):
    """Solve rows = C . basis for C (basis rows independent)."""
    bt = transpose(basis)
    # least-squares-free exact solve: basis has full row rank k, n >= k
    # solve via normal equations over Q: C = rows . B^T (B B^T)^-1
    bbt = mat_mul(basis, bt)
    return mat_mul(mat_mul(rows, bt), inverse(bbt))


def orthogonal_complement(lat, rows):
    """Saturated orthogonal complement of the span of rows.

    Returns (lattice, basis_rows) with basis_rows in lat coordinates.
    The lattice has rank 0 when rows span everything.
    """
    rows = [list(r) for r in rows]
    n = lat.rank
    if rows and rank(rows, n) != len(rows):
        raise LatticeError("orthogonal_complement input rows are dependent")
    from math import lcm
    pair = []
    for r in rows:
        p = mat_vec(lat.gram_rows, r)
        d = 1
        for x in p:
            d = lcm(d, Fraction(x).denominator)
        pair.append([to_int(Fraction(x) * d) for x in p])
    if not pair:
        basis = identity(n)
    else:
        basis = int_kernel(pair)
    basis = [[int(x) for x in r] for r in hnf_rowspan(basis)]
    if not basis:
        return IntegralLattice(()), []
    gram = mat_mul(mat_mul(basis, lat.gram_rows), transpose(basis))
    return make_lattice(gram), basis


def fqf_isomorphic(f1, f2):
    """Search for an isomorphism of finite quadratic forms.

    Returns a witness (tuple of images of f1's generators, as coefficient
    tuples in f2) or None if no isomorphism exists.
    """
    if f1.order != f2.order:
        return None
    if sorted(f1.invariant_factors) != sorted(f2.invariant_factors):
        return None
    # full-multiset prune on (element order, q value)
    if f1.order <= 4096:
        m1 = sorted((f1.element_order(e), f1.q_of(e)) for e in f1.elements())
        m2 = sorted((f2.element_order(e), f2.q_of(e)) for e in f2.elements())
        if m1 != m2:
            return None
    else:
        m1 = sorted((d, q) for d, q in zip(f1.invariant_factors, f1.q_values))
        m2 = sorted((d, q) for d, q in zip(f2.invariant_factors, f2.q_values))
        if m1 != m2:
            return None

    gens1 = list(range(len(f1.invariant_factors)))
    q1 = [f1.q_values[i] % 2 for i in gens1]
    b1 = [[f1.b_matrix[i][j] % 1 for j in gens1] for i in gens1]
    pool = [(e, f2.element_order(e), f2.q_of(e)) for e in f2.elements()]

    assigned = []

    def generated_order(images):
        seen = {tuple([0] * len(f2.invariant_factors))}
        frontier = [next(iter(seen))]
        mods = f2.invariant_factors
        while frontier:
            new = []
            for x in frontier:
                for img in images:
                    y = tuple((a + b) % d for a, b, d in zip(x, img, mods))
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return len(seen)

    def backtrack(i):
        if i == len(gens1):
            if generated_order(assigned) == f2.order:
                return True
            return False
        want_order = f1.invariant_factors[i]
        for cand, o, q in pool:
            if o != want_order or q != q1[i]:
                continue
            ok = True
            for j, prev in enumerate(assigned):
                if f2.b_of(cand, prev) != b1[i][j]:
                    ok = False
                    break
            if f2.b_of(cand, cand) % 1 != b1[i][i]:
                ok = False
            if not ok:
                continue
            assigned.append(cand)
            if backtrack(i + 1):
                return True
            assigned.pop()
        return False

    if backtrack(0):
        return tuple(assigned)
    return None
