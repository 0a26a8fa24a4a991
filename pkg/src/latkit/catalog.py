"""Hard-coded constructions of every lattice and isometry in the suite,
plus the reproduction harness that certifies each claim.

The rank-16 lattice L is glued from four copies of A4(-2) by the orbit of
two half-integral vectors under the order-5 isometry, then certified to be
even, rootless, of discriminant (Z/5)^4, and spanned by two E8(-2) copies
exchanged up to sign by a dihedral group of order 10.
"""

import time
from dataclasses import dataclass
from fractions import Fraction

from . import k3fam, shortvec
from .cyclo import Cyc5
from .isometry import (
    Isometry, acts_as_minus_one, disc_action_trivial, group_closure,
    invariant_sublattice, make_isometry, order,
)
from .lattice import (
    GlueError, GlueVector, LatticeError, direct_sum, discriminant_group,
    fqf_isomorphic, make_lattice, orthogonal_complement, overlattice, rescale,
    saturation, sublattice,
)
from .ratmat import det, inverse, is_integral, mat_mul, mat_vec, to_int, transpose


class CatalogError(LatticeError):
    pass


@dataclass(frozen=True)
class ClaimResult:
    id: str
    locator: str
    expected: object
    computed: object
    millis: float

    @property
    def passed(self):
        return self.expected == self.computed

    def as_dict(self):
        return {
            "id": self.id,
            "locator": self.locator,
            "expected": str(self.expected),
            "computed": str(self.computed),
            "pass": self.passed,
            "millis": round(self.millis, 3),
        }


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    lattice: object
    base_lattice: object
    change_of_basis: tuple   # rows: lattice basis in base coordinates
    vectors: dict            # name -> coords in the lattice basis (ints)
    base_vectors: dict       # name -> coords in the base basis (Fractions)
    isometries: dict         # name -> Isometry on the lattice basis


# --- standard Gram matrices ----------------------------------------------

_E8_EDGES = ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def std_gram(family, n=None, scale=1):
    """Cartan-convention lattices: A_n, E8, U, A1; scaled by `scale`."""
    scale = int(scale)
    if scale == 0:
        raise CatalogError("scale must be nonzero")
    if family == "A":
        if n is None or n < 1:
            raise CatalogError("A_n needs n >= 1")
        g = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
              for j in range(n)] for i in range(n)]
    elif family == "A1":
        g = [[2]]
    elif family == "U":
        g = [[0, 1], [1, 0]]
    elif family == "E8":
        g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
        for a, b in _E8_EDGES:
            g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    else:
        raise CatalogError("unsupported family %r" % (family,))
    return make_lattice([[x * scale for x in row] for row in g])


# --- the overlattice L ----------------------------------------------------

def _gamma4():
    # alpha_i -> alpha_{i+1}, alpha_4 -> alpha_5 = -(a1+a2+a3+a4);
    # columns are images of the basis vectors
    return [[0, 0, 0, -1],
            [1, 0, 0, -1],
            [0, 1, 0, -1],
            [0, 0, 1, -1]]


def _block_diag(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def _eta4():
    # the involution on one A4 copy: a1 -> -a1, a2 -> -a5, a3 -> -a4,
    # a4 -> -a3, with a5 = -(a1+a2+a3+a4); columns are images
    return [[-1, 1, 0, 0],
            [0, 1, 0, 0],
            [0, 1, 0, -1],
            [0, 1, -1, 0]]


MU_BASE = tuple(Fraction(x, 2) for x in
                (1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0))
NU_BASE = tuple(Fraction(x, 2) for x in
                (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1))


def _to_new_basis(p_inv, vec, what):
    y = mat_vec(p_inv, list(vec))
    if not is_integral(y):
        raise CatalogError("%s does not lie in the overlattice" % what)
    return tuple(to_int(x) for x in y)


def _conjugate_isometry(lat, p, p_inv, m, what):
    rows = mat_mul(mat_mul(p_inv, m), p)
    if not is_integral(rows):
        raise CatalogError("%s does not extend integrally to the overlattice" % what)
    return make_isometry(lat, [[to_int(x) for x in r] for r in rows])


def build_L(nu_override=None):
    """The rank-16 overlattice of A4(-2)^{+4} glued along the g-orbits of
    mu and nu, with the order-5 isometry g and the involution h."""
    base = direct_sum([std_gram("A", 4, -2)] * 4)
    g_base = _block_diag([_gamma4()] * 4)
    mu = list(MU_BASE)
    nu = list(nu_override if nu_override is not None else NU_BASE)

    orbit = []
    for v in (mu, nu):
        cur = v
        for _ in range(4):
            orbit.append(GlueVector(cur))
            cur = mat_vec(g_base, cur)
    lat, index, basis = overlattice(base, orbit)

    p = transpose(basis)
    p_inv = inverse(p)
    g = _conjugate_isometry(lat, p, p_inv, g_base, "g")
    h_base = _block_diag([_eta4()] * 4)
    h = _conjugate_isometry(lat, p, p_inv, h_base, "h")

    base_vectors = {"mu": tuple(mu), "nu": tuple(nu)}
    cur_mu, cur_nu = mu, nu
    for i in range(1, 4):
        cur_mu = mat_vec(g_base, cur_mu)
        cur_nu = mat_vec(g_base, cur_nu)
        base_vectors["g%d(mu)" % i] = tuple(cur_mu)
        base_vectors["g%d(nu)" % i] = tuple(cur_nu)

    def gpow(v, k):
        for _ in range(k):
            v = mat_vec(g_base, v)
        return v

    def basis_vec(copy, idx):
        v = [Fraction(0)] * 16
        v[4 * copy + idx] = Fraction(1)
        return v

    def add(*vs):
        out = [Fraction(0)] * 16
        for v in vs:
            out = [a + b for a, b in zip(out, v)]
        return out

    def neg(v):
        return [-x for x in v]

    e = [None] * 9
    e[1] = list(mu)
    e[2] = add(gpow(mu, 2), gpow(mu, 3))
    e[3] = list(nu)
    e[4] = add(mu, gpow(mu, 2), gpow(mu, 3), neg(gpow(nu, 2)), neg(gpow(nu, 3)))
    e[5] = basis_vec(0, 0)
    e[6] = add(basis_vec(0, 2), basis_vec(0, 3))
    e[7] = basis_vec(1, 0)
    e[8] = add(basis_vec(1, 2), basis_vec(1, 3))
    for i in range(1, 9):
        base_vectors["e%d" % i] = tuple(e[i])
        base_vectors["f%d" % (i + 8)] = tuple(mat_vec(g_base, e[i]))

    vectors = {name: _to_new_basis(p_inv, v, name)
               for name, v in base_vectors.items()}

    return NamedConstruction(
        name="L",
        lattice=lat,
        base_lattice=base,
        change_of_basis=tuple(tuple(r) for r in basis),
        vectors=vectors,
        base_vectors=base_vectors,
        isometries={"g": g, "h": h},
    ), index


def reflection_in_span(lat, span_rows):
    """The rational map acting as -1 on span_rows and +1 on its orthogonal
    complement; returned as integer matrix rows (raises if non-integral)."""
    comp, comp_rows = orthogonal_complement(lat, span_rows)
    cols = transpose(list(span_rows) + list(comp_rows))
    n = lat.rank
    diag = [[(-1 if i == j and i < len(span_rows) else (1 if i == j else 0))
             for j in range(n)] for i in range(n)]
    m = mat_mul(mat_mul(cols, diag), inverse(cols))
    if not is_integral(m):
        raise CatalogError("reflection is not integral on the lattice")
    return [[to_int(x) for x in r] for r in m]


def verify_e_basis(construction):
    """Claims for the two E8(-2) copies and their spanning of L."""
    c = construction
    lat = c.lattice
    claims = []

    def run(cid, locator, expected, fn):
        t0 = time.perf_counter()
        try:
            computed = fn()
        except LatticeError as exc:
            computed = "error: %s" % exc
        claims.append(ClaimResult(cid, locator, expected,
                                  computed, (time.perf_counter() - t0) * 1000))

    e_rows = [c.vectors["e%d" % i] for i in range(1, 9)]
    f_rows = [c.vectors["f%d" % i] for i in range(9, 17)]

    def half_unimodular(rows):
        sub = sublattice(lat, rows)
        half = [[Fraction(x, 2) for x in row] for row in sub.gram_rows]
        if not is_integral(half):
            return "half-Gram not integral"
        half_lat = make_lattice(half)
        return (half_lat.is_even, abs(half_lat.det), half_lat.signature)

    run("e8/e-half-unimodular", "L/e-span", (True, 1, (0, 8)),
        lambda: half_unimodular(e_rows))
    run("e8/f-half-unimodular", "L/f-span", (True, 1, (0, 8)),
        lambda: half_unimodular(f_rows))
    run("e8/ef-det", "L/ef-span", 5 ** 4,
        lambda: abs(sublattice(lat, e_rows + f_rows).det))
    run("e8/ef-index", "L/ef-span", 1,
        lambda: abs(to_int(det(e_rows + f_rows))))
    return claims


def build_nikulin():
    """Index-2 overlattice of A1(-1)^{+8} glued by the all-halves vector."""
    base = direct_sum([std_gram("A1", scale=-1)] * 8)
    glue = GlueVector([Fraction(1, 2)] * 8)
    lat, index, basis = overlattice(base, [glue])
    return NamedConstruction(
        name="Nikulin",
        lattice=lat,
        base_lattice=base,
        change_of_basis=tuple(tuple(r) for r in basis),
        vectors={},
        base_vectors={"glue": tuple(glue.coords)},
        isometries={},
    ), index


def build_MD5():
    """A4(-1)^{+2} + Nikulin direct sum (rank 16)."""
    nik, _ = build_nikulin()
    lat = direct_sum([std_gram("A", 4, -1), std_gram("A", 4, -1), nik.lattice])
    return NamedConstruction(
        name="MD5", lattice=lat, base_lattice=lat,
        change_of_basis=tuple(tuple(int(i == j) for j in range(16)) for i in range(16)),
        vectors={}, base_vectors={}, isometries={})


def u2_cubed():
    u2 = rescale(std_gram("U"), 2)
    return direct_sum([u2, u2, u2])


def primary_decomposition(invariant_factors):
    """Prime-power cyclic factors of the group, as a sorted tuple."""
    out = []
    for d in invariant_factors:
        rem = d
        p = 2
        while rem > 1:
            if rem % p == 0:
                q = 1
                while rem % p == 0:
                    rem //= p
                    q *= p
                out.append(q)
            p += 1
    return tuple(sorted(out))


# --- the reproduction suite ----------------------------------------------

FAULT_IDS = ("nu-coord",)


def repro_all(filter_tag=None, inject_fault=None):
    """Run every claim; returns an ordered list of ClaimResults.

    filter_tag restricts to claims whose id starts with the tag.
    inject_fault deliberately corrupts a construction so the harness can
    be seen to fail (negative control).
    """
    if inject_fault is not None and inject_fault not in FAULT_IDS:
        raise ValueError("unknown fault id %r (known: %s)"
                         % (inject_fault, ", ".join(FAULT_IDS)))
    claims = []

    def run(cid, locator, expected, fn):
        if filter_tag and not cid.startswith(filter_tag):
            return
        t0 = time.perf_counter()
        try:
            computed = fn()
        except (LatticeError, k3fam.FamilyError) as exc:
            computed = "error: %s" % exc
        claims.append(ClaimResult(cid, locator, expected, computed,
                                  (time.perf_counter() - t0) * 1000))

    nu = None
    if inject_fault == "nu-coord":
        nu = list(NU_BASE)
        nu[4] = Fraction(1, 3)  # breaks integral pairing with the base

    built = {}

    def get_L():
        if "L" not in built:
            built["L"] = build_L(nu_override=nu)
        return built["L"]

    # -- the overlattice L
    run("L/index", "L/gluing", 2 ** 8, lambda: get_L()[1])
    run("L/even", "L/gluing", True, lambda: get_L()[0].lattice.is_even)
    run("L/signature", "L/gluing", (0, 16), lambda: get_L()[0].lattice.signature)
    run("L/disc-group", "L/discriminant", (5, 5, 5, 5),
        lambda: discriminant_group(get_L()[0].lattice).invariant_factors)
    run("L/mu-self", "L/glue-vectors", -4,
        lambda: get_L()[0].base_lattice.norm_of(get_L()[0].base_vectors["mu"]))
    run("L/nu-self", "L/glue-vectors", -4,
        lambda: get_L()[0].base_lattice.norm_of(get_L()[0].base_vectors["nu"]))
    run("L/rootless", "L/short-vectors", 0,
        lambda: len(shortvec.short_vectors(get_L()[0].lattice, 3).vectors))
    run("L/minimum", "L/short-vectors", 4,
        lambda: shortvec.minimum(get_L()[0].lattice))
    run("L/mu-primitive", "L/saturation", 1, lambda: saturation(
        get_L()[0].lattice, [get_L()[0].vectors["mu"]])[1])

    # -- the order-5 isometry g
    run("g/order", "isometry-g", 5,
        lambda: order(get_L()[0].isometries["g"]))
    run("g/disc-trivial", "isometry-g", True,
        lambda: disc_action_trivial(get_L()[0].lattice, get_L()[0].isometries["g"]))
    run("g/no-invariants", "isometry-g", 0, lambda: len(invariant_sublattice(
        get_L()[0].lattice,
        group_closure([get_L()[0].isometries["g"]]))[1]))

    # -- the dihedral group <g, h>
    def dih():
        c, _ = get_L()
        return c.isometries["g"], c.isometries["h"]

    run("dih10/h-order", "involution-h", 2, lambda: order(dih()[1]))
    run("dih10/group-order", "dihedral-group", 10,
        lambda: group_closure(list(dih())).order)
    run("dih10/relation", "dihedral-group", True, lambda: (
        lambda g, h: (h * g * h.inverse() * g).is_identity())(*dih()))
    run("dih10/h-minus-on-e", "involution-h", True, lambda: acts_as_minus_one(
        dih()[1], [get_L()[0].vectors["e%d" % i] for i in range(1, 9)]))
    run("dih10/g2h-minus-on-f", "involution-h", True, lambda: acts_as_minus_one(
        (lambda g, h: g * g * h)(*dih()),
        [get_L()[0].vectors["f%d" % i] for i in range(9, 17)]))
    run("dih10/h-reflection-match", "involution-h", True, lambda: (
        reflection_in_span(get_L()[0].lattice,
                           [get_L()[0].vectors["e%d" % i] for i in range(1, 9)])
        == dih()[1].rows))
    run("dih10/h-invariant-is-e-complement", "involution-h", True,
        lambda: _h_invariant_matches(get_L()[0]))

    # -- the two E8(-2) copies
    if not filter_tag or "e8".startswith(filter_tag) or filter_tag.startswith("e8"):
        try:
            for cl in verify_e_basis(get_L()[0]):
                if not filter_tag or cl.id.startswith(filter_tag):
                    claims.append(cl)
        except (LatticeError, CatalogError) as exc:
            claims.append(ClaimResult("e8/build", "L/e-span", "ok",
                                      "error: %s" % exc, 0.0))

    # -- Nikulin lattice
    run("nikulin/index", "nikulin/gluing", 2, lambda: build_nikulin()[1])
    run("nikulin/disc-group", "nikulin/discriminant", (2,) * 6,
        lambda: discriminant_group(build_nikulin()[0].lattice).invariant_factors)
    run("nikulin/disc-form-matches-U2-cubed", "nikulin/discriminant", True,
        lambda: fqf_isomorphic(discriminant_group(build_nikulin()[0].lattice),
                               discriminant_group(u2_cubed())) is not None)

    # -- M_D5
    run("md5/rank", "md5", 16, lambda: build_MD5().lattice.rank)
    run("md5/disc-primary", "md5/discriminant", tuple(sorted([2] * 6 + [5, 5])),
        lambda: primary_decomposition(
            discriminant_group(build_MD5().lattice).invariant_factors))
    run("md5/disc-chain", "md5/discriminant", (2, 2, 2, 2, 10, 10),
        lambda: discriminant_group(build_MD5().lattice).invariant_factors)

    claims.extend(_family_claims(filter_tag))
    return claims


def _h_invariant_matches(construction):
    lat = construction.lattice
    h = construction.isometries["h"]
    closure = group_closure([h])
    inv_lat, inv_rows = invariant_sublattice(lat, closure)
    comp_lat, comp_rows = orthogonal_complement(
        lat, [construction.vectors["e%d" % i] for i in range(1, 9)])
    return inv_rows == comp_rows and len(inv_rows) == 8


def _family_claims(filter_tag=None):
    claims = []

    def run(cid, locator, expected, fn):
        if filter_tag and not cid.startswith(filter_tag):
            return
        t0 = time.perf_counter()
        try:
            computed = fn()
        except k3fam.FamilyError as exc:
            computed = "error: %s" % exc
        claims.append(ClaimResult(cid, locator, expected, computed,
                                  (time.perf_counter() - t0) * 1000))

    for case in k3fam_cases():
        pre = "k3/%s" % case["name"]
        for label, fam, want_w in case["families"]:
            run("%s/invariant-%s" % (pre, label), "%s/family" % pre,
                (True, want_w),
                lambda fam=fam: k3fam.is_invariant_family(fam))
        run("%s/dihedral" % pre, "%s/pgl" % pre, True,
            lambda case=case: k3fam.dihedral_in_pgl(case["sigma"], case["iota"]))
        run("%s/moduli" % pre, "%s/moduli" % pre, 3,
            lambda case=case: k3fam.moduli_count(
                case["param_counts"],
                k3fam.commutant_dim(case["commutant_of"]),
                case["redundancy"]))
        for name, expected, fn in case.get("extra", ()):
            run("%s/%s" % (pre, name), "%s/family" % pre, expected, fn)
    return claims


def k3fam_cases():
    """The four projective family cases with sample coefficients."""
    w = Cyc5.omega
    one = Cyc5.one()

    cases = []

    # quartics in P3
    fam3 = k3fam.MonomialFamily(
        num_vars=4, weights=(0, 3, 1, 2),
        monomials=((3, 0, 1, 0), (2, 2, 0, 0), (1, 0, 0, 3), (1, 1, 1, 1),
                   (0, 3, 0, 1), (0, 1, 3, 0), (0, 0, 2, 2)),
        coefficient_symmetry=((0, 4), (2, 5)))
    sigma3 = k3fam.diagonal_map([one, w(3), w(1), w(2)])
    iota3 = k3fam.permutation_map([1, 0, 3, 2])
    quartic = fam3.polynomial([1, 1, 1, 1, 1, 1, 1])

    def p3_fixed_count():
        total = 0
        for sign, basis in k3fam.fixed_locus(iota3):
            deg, nonzero, roots = k3fam.restrict_and_count(quartic, basis)
            if not nonzero:
                return "degenerate sample"
            total += roots
        return total

    cases.append({
        "name": "quartic-p3",
        "families": [("quartic", fam3, 1)],
        "sigma": sigma3, "iota": iota3,
        "commutant_of": sigma3,
        "param_counts": [7], "redundancy": 0,
        "extra": [
            ("fixed-points", 8, p3_fixed_count),
            ("conjugation-scalar", True,
             lambda: k3fam.pgl_equal(iota3 * sigma3 * iota3.inverse(),
                                     sigma3.inverse())),
        ],
    })

    # quadric + cubic in P4
    famQ = k3fam.MonomialFamily(
        num_vars=5, weights=(0, 1, 2, 3, 4),
        monomials=((2, 0, 0, 0, 0), (0, 1, 0, 0, 1), (0, 0, 1, 1, 0)))
    famC = k3fam.MonomialFamily(
        num_vars=5, weights=(0, 1, 2, 3, 4),
        monomials=((3, 0, 0, 0, 0), (1, 1, 0, 0, 1), (1, 0, 1, 1, 0),
                   (0, 2, 0, 1, 0), (0, 0, 1, 0, 2), (0, 1, 2, 0, 0),
                   (0, 0, 0, 2, 1)),
        coefficient_symmetry=((3, 4), (5, 6)))
    sigma4 = k3fam.diagonal_map([one, w(1), w(2), w(3), w(4)])
    iota4 = k3fam.permutation_map([0, 4, 3, 2, 1])
    q_sample = famQ.polynomial([1, 1, 1])
    c_sample = famC.polynomial([1, 1, 1, 1, 1, 1, 1])

    def p4_fixed_count():
        plane = [(1, 0, 0, 0, 0), (0, 1, 0, 0, 1), (0, 0, 1, 1, 0)]
        on_plane = k3fam.plane_fixed_count((q_sample, c_sample), plane)
        if on_plane is None:
            return "degenerate sample"
        line = [(0, 1, 0, 0, -1), (0, 0, 1, -1, 0)]
        deg_c, c_nonzero, _ = k3fam.restrict_and_count(c_sample, line)
        if c_nonzero:
            return "cubic does not vanish on the (-1) line"
        deg_q, q_nonzero, on_line = k3fam.restrict_and_count(q_sample, line)
        if not q_nonzero:
            return "degenerate sample"
        return on_plane + on_line

    cases.append({
        "name": "ci-p4",
        "families": [("quadric", famQ, 0), ("cubic", famC, 0)],
        "sigma": sigma4, "iota": iota4,
        "commutant_of": sigma4,
        "param_counts": [3, 7], "redundancy": 1,
        "extra": [("fixed-points", 8, p4_fixed_count)],
    })

    # three quadrics in P5
    famQ1 = k3fam.MonomialFamily(
        num_vars=6, weights=(0, 0, 1, 2, 3, 4),
        monomials=((2, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 2, 0, 0, 0, 0),
                   (0, 0, 1, 0, 0, 1), (0, 0, 0, 1, 1, 0)))
    famQ2 = k3fam.MonomialFamily(
        num_vars=6, weights=(0, 0, 1, 2, 3, 4),
        monomials=((0, 1, 1, 0, 0, 0), (0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 2, 0)))
    famQ3 = k3fam.MonomialFamily(
        num_vars=6, weights=(0, 0, 1, 2, 3, 4),
        monomials=((0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0), (0, 0, 0, 2, 0, 0)))
    sigma5 = k3fam.diagonal_map([one, one, w(1), w(2), w(3), w(4)])
    iota5 = k3fam.permutation_map([0, 1, 5, 4, 3, 2])
    q1 = famQ1.polynomial([1, 0, 1, 1, 0])  # sample b = e = 0, d = 1
    q2 = famQ2.polynomial([1, 1, 1])
    q3 = famQ3.polynomial([1, 1, 1])

    def p5_swap():
        return (k3fam.swap_check(iota5, q2, q3)
                and k3fam.swap_check(iota5, q3, q2)
                and k3fam.swap_check(iota5, q1, q1))

    def p5_plus_restrictions_coincide():
        # the swapped quadrics restrict to proportional forms on the fixed
        # space, so no zero-dimensional count is available there
        plus = next(basis for sign, basis in k3fam.fixed_locus(iota5) if sign == 1)
        r2 = k3fam.restrict_to_subspace(q2, plus)
        r3 = k3fam.restrict_to_subspace(q3, plus)
        return k3fam.swap_check(k3fam.diagonal_map([Cyc5.one()] * 4), r2, r3)

    cases.append({
        "name": "ci-p5",
        "families": [("q1", famQ1, 0), ("q2", famQ2, 1), ("q3", famQ3, 4)],
        "sigma": sigma5, "iota": iota5,
        "commutant_of": sigma5,
        "param_counts": [5, 4, 4], "redundancy": 0,
        "extra": [
            ("swaps-quadrics", True, p5_swap),
            ("plus-space-restrictions-coincide", True,
             p5_plus_restrictions_coincide),
        ],
    })

    # double cover of P2 branched along a sextic
    fam2 = k3fam.MonomialFamily(
        num_vars=3, weights=(0, 1, 4),
        monomials=((6, 0, 0), (1, 5, 0), (1, 0, 5), (4, 1, 1), (2, 2, 2),
                   (0, 3, 3)),
        coefficient_symmetry=((1, 2),))
    sigma2 = k3fam.diagonal_map([one, w(1), w(4)])
    alpha2 = k3fam.permutation_map([0, 2, 1])
    sextic = fam2.polynomial([1, 1, 1, 1, 1, 1])
    # lifts to the double cover, coordinates (u, x0, x1, x2)
    sigma_cover = k3fam.diagonal_map([one, one, w(1), w(4)])
    iota_cover = k3fam.permutation_map([0, 1, 3, 2], signs=[-1, 1, 1, 1])

    cases.append({
        "name": "double-cover-p2",
        "families": [("sextic", fam2, 0)],
        "sigma": sigma_cover, "iota": iota_cover,
        "commutant_of": sigma2,
        "param_counts": [6], "redundancy": 0,
        "extra": [
            ("sextic-symmetric", True,
             lambda: k3fam.swap_check(alpha2, sextic, sextic)),
            ("cover-relation", True,
             lambda: k3fam.pgl_equal(iota_cover * sigma_cover,
                                     sigma_cover.inverse() * iota_cover)),
        ],
    })
    return cases
