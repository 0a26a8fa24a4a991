"""Exact checks for the projective family constructions: diagonal
root-of-unity actions, invariance of defining polynomials, dihedral
relations in PGL, fixed loci and fixed-point counts, moduli arithmetic.

Polynomials are dicts {exponent tuple: Cyc5 coefficient}; projective maps
are square matrices over Q(w).
"""

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyc5
from . import ratmat


class FamilyError(ValueError):
    pass


# --- polynomials over Q(w) ------------------------------------------------

def poly_from_terms(terms):
    """terms: iterable of (exponent tuple, coefficient)."""
    p = {}
    for exps, c in terms:
        c = c if isinstance(c, Cyc5) else Cyc5.one() * c
        if not c:
            continue
        key = tuple(int(e) for e in exps)
        acc = p.get(key, Cyc5.zero()) + c
        if acc:
            p[key] = acc
        else:
            p.pop(key, None)
    return p


def poly_add(p, q):
    out = dict(p)
    for k, c in q.items():
        acc = out.get(k, Cyc5.zero()) + c
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def poly_scale(p, s):
    s = s if isinstance(s, Cyc5) else Cyc5.one() * s
    if not s:
        return {}
    return {k: c * s for k, c in p.items()}


def poly_mul(p, q):
    out = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            acc = out.get(k, Cyc5.zero()) + c1 * c2
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    return out


def poly_pow(p, n):
    out = {tuple([0] * _nvars_of(p)): Cyc5.one()} if p else {}
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def _nvars_of(p):
    return len(next(iter(p))) if p else 0


def poly_substitute(p, linear_forms):
    """Substitute variable i by linear_forms[i], a poly in the new variables."""
    out = {}
    cache = {}
    for exps, c in p.items():
        term = None
        for i, e in enumerate(exps):
            if not e:
                continue
            key = (i, e)
            if key not in cache:
                cache[key] = poly_pow(linear_forms[i], e)
            f = cache[key]
            term = f if term is None else poly_mul(term, f)
        if term is None:
            nv = _nvars_of(linear_forms[0]) if linear_forms else 0
            term = {tuple([0] * nv): Cyc5.one()}
        out = poly_add(out, poly_scale(term, c))
    return out


def poly_apply_map(p, matrix):
    """Compose p with the linear map x -> M x (substitute x_i by row i of M)."""
    n = len(matrix)
    forms = []
    for i in range(n):
        forms.append(poly_from_terms(
            ((tuple(1 if k == j else 0 for k in range(n)), matrix[i][j])
             for j in range(n) if matrix[i][j])))
    return poly_substitute(p, forms)


def poly_total_degree(p):
    return max(sum(k) for k in p) if p else -1


# --- monomial families ----------------------------------------------------

@dataclass(frozen=True)
class MonomialFamily:
    num_vars: int
    weights: tuple            # exponent of w per variable, mod 5
    monomials: tuple          # exponent tuples, all of one total degree
    coefficient_symmetry: tuple = ()  # pairs of monomial indices tied by the involution

    def __post_init__(self):
        degs = {sum(m) for m in self.monomials}
        if len(degs) > 1:
            raise FamilyError("monomials have mixed total degrees %s" % degs)
        for m in self.monomials:
            if len(m) != self.num_vars:
                raise FamilyError("monomial %s has wrong arity" % (m,))

    def polynomial(self, coefficients):
        if len(coefficients) != len(self.monomials):
            raise FamilyError("need %d coefficients" % len(self.monomials))
        return poly_from_terms(zip(self.monomials, coefficients))


def sigma_weight(monomial, weights):
    """Sum of exponent * weight mod 5: the w-power picked up by the
    monomial under x_i -> w^{weights[i]} x_i."""
    if len(monomial) != len(weights):
        raise FamilyError("monomial/weights length mismatch")
    return sum(m * w for m, w in zip(monomial, weights)) % 5


def is_invariant_family(family):
    """(True, common weight) iff all monomials carry one w-weight mod 5,
    so the hypersurface (defined up to scalar) is preserved."""
    ws = {sigma_weight(m, family.weights) for m in family.monomials}
    if len(ws) == 1:
        return True, ws.pop()
    return False, None


# --- projective maps ------------------------------------------------------

@dataclass(frozen=True)
class ProjectiveMap:
    matrix: tuple  # tuple of tuples of Cyc5

    def __init__(self, rows):
        mat = tuple(tuple(x if isinstance(x, Cyc5) else Cyc5.one() * x for x in r)
                    for r in rows)
        object.__setattr__(self, "matrix", mat)

    @property
    def size(self):
        return len(self.matrix)

    @property
    def rows(self):
        return [list(r) for r in self.matrix]

    def __mul__(self, other):
        return ProjectiveMap(ratmat.mat_mul(self.rows, other.rows))

    def inverse(self):
        n = self.size
        aug = [list(r) + [Cyc5.one() if i == j else Cyc5.zero() for j in range(n)]
               for i, r in enumerate(self.rows)]
        red, pivots = ratmat.rref(aug, n, Cyc5.zero(), Cyc5.one())
        if pivots != list(range(n)):
            raise FamilyError("projective map is singular")
        return ProjectiveMap([row[n:] for row in red])

    def is_scalar(self):
        n = self.size
        d = self.matrix[0][0]
        if not d:
            return False
        for i in range(n):
            for j in range(n):
                want = d if i == j else Cyc5.zero()
                if self.matrix[i][j] != want:
                    return False
        return True

    def power(self, k):
        out = diagonal_map([Cyc5.one()] * self.size)
        base = self
        for _ in range(k):
            out = out * base
        return out


def diagonal_map(entries):
    n = len(entries)
    entries = [x if isinstance(x, Cyc5) else Cyc5.one() * x for x in entries]
    return ProjectiveMap([[entries[i] if i == j else Cyc5.zero() for j in range(n)]
                          for i in range(n)])


def permutation_map(images, signs=None):
    """Map sending coordinate i to +-coordinate images[i]."""
    n = len(images)
    signs = signs or [1] * n
    rows = [[Cyc5.zero()] * n for _ in range(n)]
    for i, (img, s) in enumerate(zip(images, signs)):
        rows[i][img] = Cyc5.one() * s
    return ProjectiveMap(rows)


def pgl_equal(a, b):
    """True iff A = lambda * B for some nonzero lambda in Q(w)."""
    if a.size != b.size:
        return False
    lam = None
    for i in range(a.size):
        for j in range(a.size):
            x, y = a.matrix[i][j], b.matrix[i][j]
            if bool(x) != bool(y):
                return False
            if y:
                r = x / y
                if lam is None:
                    lam = r
                elif r != lam:
                    return False
    return lam is not None


def dihedral_in_pgl(sigma, iota):
    """True iff sigma and iota generate the dihedral group of order 10 in
    PGL: iota^2 and sigma^5 scalar, sigma not scalar, and conjugation by
    iota inverts sigma."""
    if iota.size != sigma.size:
        return False
    if not iota.power(2).is_scalar():
        return False
    if sigma.is_scalar() or not sigma.power(5).is_scalar():
        return False
    conj = iota * sigma * iota.inverse()
    return pgl_equal(conj, sigma.inverse())


def fixed_locus(iota):
    """Eigenspaces of an involution (iota^2 scalar) as (eigenvalue sign,
    basis rows over Q(w))."""
    sq = iota.power(2)
    if not sq.is_scalar():
        return_err = FamilyError("fixed_locus requires an involution up to scalar")
        raise return_err
    # normalise so the matrix squares to the identity; the scalar must be
    # a square in Q(w) for our permutation-style involutions (it is 1).
    s = sq.matrix[0][0]
    if s != Cyc5.one():
        raise FamilyError("involution normalisation: square scalar %r != 1" % (s,))
    n = iota.size
    spaces = []
    for sign in (1, -1):
        rows = [[iota.matrix[i][j] - (Cyc5.one() * sign if i == j else Cyc5.zero())
                 for j in range(n)] for i in range(n)]
        basis = ratmat.kernel(rows, n, Cyc5.zero(), Cyc5.one())
        if basis:
            spaces.append((sign, [tuple(v) for v in basis]))
    return spaces


def restrict_to_subspace(poly, basis_rows):
    """Restrict a polynomial to the subspace spanned by basis_rows,
    yielding a polynomial in len(basis_rows) parameters."""
    k = len(basis_rows)
    nv = len(basis_rows[0])
    forms = []
    for i in range(nv):
        forms.append(poly_from_terms(
            ((tuple(1 if t == j else 0 for t in range(k)), basis_rows[j][i])
             for j in range(k) if basis_rows[j][i])))
    return poly_substitute(poly, forms)


def restrict_and_count(poly, line_rows):
    """Restrict to a line (2-parameter subspace) and count zeros.

    Returns (degree, is_nonzero, root_count): a nonzero binary form of
    degree d has d roots in P^1 counted with multiplicity; an identically
    zero restriction is flagged as degenerate (is_nonzero False).
    """
    if len(line_rows) != 2:
        raise FamilyError("restrict_and_count needs a 2-parameter line")
    r = restrict_to_subspace(poly, line_rows)
    if not r:
        return poly_total_degree(poly), False, 0
    d = poly_total_degree(r)
    return d, True, d


def sylvester_resultant(p, q, var):
    """Resultant of p and q w.r.t. variable var; coefficients are
    polynomials in the remaining variables."""
    def coeffs_in(poly):
        by_deg = {}
        for exps, c in poly.items():
            e = exps[var]
            rest = tuple(x for i, x in enumerate(exps) if i != var)
            bucket = by_deg.setdefault(e, {})
            acc = bucket.get(rest, Cyc5.zero()) + c
            if acc:
                bucket[rest] = acc
            else:
                bucket.pop(rest, None)
        return by_deg

    cp, cq = coeffs_in(p), coeffs_in(q)
    dp, dq = max(cp), max(cq)
    nrest = len(next(iter(p))) - 1
    zero = {}
    one = {tuple([0] * nrest): Cyc5.one()}

    def coef(c, d):
        return c.get(d, zero)

    size = dp + dq
    rows = []
    for i in range(dq):
        rows.append([coef(cp, dp - (j - i)) if 0 <= j - i <= dp else zero
                     for j in range(size)])
    for i in range(dp):
        rows.append([coef(cq, dq - (j - i)) if 0 <= j - i <= dq else zero
                     for j in range(size)])
    return _poly_det(rows, one)


def _poly_det(rows, one):
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    out = {}
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = poly_mul(rows[0][j], _poly_det(minor, one))
        out = poly_add(out, term) if j % 2 == 0 else poly_add(out, poly_scale(term, -1))
    return out


def plane_fixed_count(polys, plane_rows):
    """Count, with multiplicity, common zeros of two curves on a plane
    (3-parameter subspace) by the degree of their resultant."""
    if len(polys) != 2 or len(plane_rows) != 3:
        raise FamilyError("plane_fixed_count takes two polynomials and a plane")
    r0 = restrict_to_subspace(polys[0], plane_rows)
    r1 = restrict_to_subspace(polys[1], plane_rows)
    res = sylvester_resultant(r0, r1, 0)
    if not res:
        return None  # curves share a component at these parameters
    return poly_total_degree(res)


def commutant_dim(sigma):
    """Dimension over Q(w) of {X : X sigma = sigma X}."""
    n = sigma.size
    m = sigma.matrix
    rows = []
    for i in range(n):
        for j in range(n):
            # (X sigma - sigma X)[i][j] as a linear form in the X entries
            row = [Cyc5.zero()] * (n * n)
            for k in range(n):
                row[i * n + k] = row[i * n + k] + m[k][j]
                row[k * n + j] = row[k * n + j] - m[i][k]
            rows.append(row)
    ker = ratmat.kernel(rows, n * n, Cyc5.zero(), Cyc5.one())
    return len(ker)


def moduli_count(params, commutant, redundancy=0):
    """Moduli of a family of invariant complete intersections.

    params: coefficient count of the single form, or a sequence of counts
    (one per defining form).  Each form loses one dimension to scaling;
    the commutant of the diagonal action acts with a 1-dimensional
    ineffective scalar; redundancy removes extra coefficient directions
    that give the same intersection.
    """
    if isinstance(params, int):
        params = [params]
    return sum(p - 1 for p in params) - (commutant - 1) - redundancy


def swap_check(iota, p, q):
    """True iff p composed with iota^-1 is a nonzero scalar multiple of q."""
    comp = poly_apply_map(p, iota.inverse().matrix)
    if not comp or not q:
        return not comp and not q
    lam = None
    keys = set(comp) | set(q)
    for k in keys:
        a = comp.get(k, Cyc5.zero())
        b = q.get(k, Cyc5.zero())
        if bool(a) != bool(b):
            return False
        if b:
            r = a / b
            if lam is None:
                lam = r
            elif r != lam:
                return False
    return lam is not None
