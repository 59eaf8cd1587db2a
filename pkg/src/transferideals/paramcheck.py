"""Parametric verification pipeline for the q = 2 determinantal equality.

The coefficient ring S = k[e_1..e_2p] maps to k[u_1..u_p, alpha] by the
parametrization of a common root; the elimination ideal I is the kernel
of that map.  A Z^p multigrading makes the map homogeneous, the graded
pieces of the initial algebra have a closed-form dimension, and an
explicit factorization-based bijection between initial-algebra
monomials and non-members of the squarefree ideal L forces the Hilbert
series of S/I and S/L to agree in every multidegree.
"""

import itertools

from .domains import QQ
from .groebner import IdealBasis, elimination_ideal, ideal_equal
from .kernel import exp_divides
from .rings import MultiDegree, PolyRing
from .transfer import TransferFamily, build_A, has_large_gap, maximal_minors


def source_ring(p, field=QQ):
    """S = k[e_1..e_2p] with deg e_i = eps_i, deg e_{p+i} = eps_i + eps_p."""
    grading = []
    for i in range(1, 2 * p + 1):
        v = [0] * p
        if i <= p:
            v[i - 1] = 1
        else:
            v[i - p - 1] += 1
            v[p - 1] += 1
        grading.append(MultiDegree(v))
    return PolyRing(
        [f"e{i}" for i in range(1, 2 * p + 1)], field, grading=grading
    )


def param_ring(p, field=QQ):
    """k[u_1..u_p, a] with deg u_i = eps_i, deg a = eps_p.

    Grevlex with u_1 > ... > u_p > a, so u_p beats a as required for
    the initial-algebra statements.
    """
    grading = []
    for i in range(p):
        v = [0] * p
        v[i] = 1
        grading.append(MultiDegree(v))
    v = [0] * p
    v[p - 1] = 1
    grading.append(MultiDegree(v))
    return PolyRing(
        [f"u{i}" for i in range(1, p + 1)] + ["a"], field, grading=grading
    )


class ParamHom:
    """The homomorphism e_i -> u_i / u_p + a / u_{i-p} a."""

    def __init__(self, p, field=QQ):
        if p < 3:
            raise ValueError("pipeline needs p >= 3")
        self.p = p
        self.source = source_ring(p, field)
        self.target = param_ring(p, field)
        U = self.target
        a = U.var("a")
        images = {}
        for i in range(1, p):
            images[f"e{i}"] = U.var(f"u{i}")
        images[f"e{p}"] = U.var(f"u{p}") + a
        for i in range(p + 1, 2 * p + 1):
            images[f"e{i}"] = U.var(f"u{i - p}") * a
        self.images = images

    def apply(self, f):
        return f.substitute(self.images, self.target)

    def is_homogeneous(self):
        """Every image has the multidegree of its source variable."""
        for i, name in enumerate(self.source.names):
            d = self.images[name].multidegree()
            if d is None or d != self.source.grading[i]:
                return False
        return True


def param_hom(p, field=QQ):
    return ParamHom(p, field)


def kernel_ideal(p, q=2, field=QQ):
    """ker(phi) by eliminating u_1..u_p, a from <e_i - phi(e_i)>.

    Returns a Groebner basis in the graded ring S.
    """
    if q != 2:
        raise ValueError("the parametrization is specific to q = 2")
    hom = ParamHom(p, field)
    S, U = hom.source, hom.target
    big = PolyRing(U.names + S.names, field)
    shift = U.nvars

    def lift_u(f):
        return big.poly(
            {e + (0,) * S.nvars: c for e, c in f.terms}
        )

    gens = []
    for i, name in enumerate(S.names):
        e_i = big.var(name)
        gens.append(e_i - lift_u(hom.images[name]))
    gb = elimination_ideal(IdealBasis(big, gens), set(U.names), return_gb=True)
    graded = source_ring(p, field)
    return type(gb)(
        graded,
        [graded.poly(dict(g.terms)) for g in gb.gens],
        order=gb.order,
        reduced=gb.reduced,
    )


# ----------------------------------------------------------------------
# initial algebra combinatorics

# a monomial of k[u_1..u_p, a] is an exponent tuple (b_1..b_p, c)


def monomial_multidegree(exp, p):
    """Multidegree vector of a k[u, a] monomial."""
    d = list(exp[:p])
    d[p - 1] += exp[p]
    return tuple(d)


def initial_algebra_member(exp, p):
    """Membership in the initial algebra of the parametrization image.

    If the multidegree has d_i > 0 for some i < p, every monomial of
    that multidegree belongs; on pure-eps_p multidegrees only the
    monomials in u_p and u_p*a do, i.e. the a-exponent cannot exceed
    the u_p-exponent.
    """
    if any(exp[i] for i in range(p - 1)):
        return True
    return exp[p] <= exp[p - 1]


def dim_initial_algebra(p, d):
    """Closed-form graded dimension: d_p + 1, or 1 + floor(d_p / 2)."""
    d = tuple(d)
    if any(x < 0 for x in d):
        raise ValueError("negative multidegree")
    if any(d[i] > 0 for i in range(p - 1)):
        return d[p - 1] + 1
    return 1 + d[p - 1] // 2


def initial_algebra_monomials(p, d):
    """All initial-algebra monomials of multidegree d."""
    d = tuple(d)
    out = []
    for c in range(d[p - 1] + 1):
        exp = d[: p - 1] + (d[p - 1] - c, c)
        if initial_algebra_member(exp, p):
            out.append(exp)
    return out


# ----------------------------------------------------------------------
# factorization, psi, and the right inverse phi


def factorize(exp, p):
    """Factor an initial-algebra monomial into X = {u_i, u_i*a, a}.

    Factors are tagged ("ua", i), ("u", i) or ("a",); strips u_i*a
    pairs from i = p downward, then the leftover is a pure power of a
    or a pure monomial in the u_i.  The construction is total: pure
    a-power leftovers are accepted, since the right-inverse identity
    routes monomials supported on e_p through them.
    """
    b = list(exp[:p])
    c = exp[p]
    factors = []
    for i in range(p, 0, -1):
        while b[i - 1] > 0 and c > 0:
            factors.append(("ua", i))
            b[i - 1] -= 1
            c -= 1
    if c > 0:
        if any(b):  # cannot happen: the sweep strips until one side is spent
            raise ValueError(f"unfactorable monomial: {exp}")
        factors.extend([("a",)] * c)
    else:
        for i in range(1, p + 1):
            factors.extend([("u", i)] * b[i - 1])
    return factors


def psi(exp, p, ring=None):
    """psi(m) = product of e_i / e_{p+i} / e_p over the factorization.

    Returns the image exponent tuple (length 2p), or a monomial of
    ``ring`` when one is supplied.
    """
    out = [0] * (2 * p)
    for factor in factorize(exp, p):
        if factor[0] == "u":
            out[factor[1] - 1] += 1
        elif factor[0] == "ua":
            out[p + factor[1] - 1] += 1
        else:
            out[p - 1] += 1
    exp2 = tuple(out)
    return exp2 if ring is None else ring.monomial(exp2)


def phi_inverse(exp, p):
    """phi on a monomial of S: top or bottom term of its image.

    For m in <e_1..e_{p-1}> this is the initial monomial of phi(m)
    (u_p picked from each u_p + a factor), otherwise the smallest one
    (a picked instead).
    """
    a = tuple(exp)
    if len(a) != 2 * p:
        raise ValueError("expected an exponent vector of length 2p")
    ualpha = sum(a[p:])
    if any(a[i] for i in range(p - 1)):
        b = [a[i] + a[p + i] for i in range(p)]
        return tuple(b) + (ualpha,)
    b = [a[p + i] for i in range(p)]
    return tuple(b) + (a[p - 1] + ualpha,)


def _extreme_terms(poly):
    """(largest, smallest) monomial exponents of a nonzero polynomial."""
    return poly.terms[0][0], poly.terms[-1][0]


# ----------------------------------------------------------------------
# per-multidegree dimension bookkeeping


def multidegrees_upto(p, bound):
    """All d in Z_{>=0}^p with 0 < |d| <= bound, lexicographic."""
    out = []
    for total in range(1, bound + 1):
        for cuts in itertools.combinations(range(total + p - 1), p - 1):
            d = []
            prev = -1
            for c in cuts:
                d.append(c - prev - 1)
                prev = c
            d.append(total + p - 2 - prev)
            out.append(tuple(d))
    return sorted(set(out))


def s_monomials_of_multidegree(p, d):
    """Exponent tuples of S-monomials with multidegree d.

    e_{p+i} contributes eps_i + eps_p, so the exponents on e_i and
    e_{p+i} split each d_i (i < p), and the leftover of d_p is shared
    between e_p and e_{2p} (which counts twice).
    """
    d = tuple(d)
    out = []
    ranges = [range(d[i] + 1) for i in range(p - 1)]
    for upper in itertools.product(*ranges):
        r = d[p - 1] - sum(upper)
        if r < 0:
            continue
        for a2p in range(r // 2 + 1):
            exp = [0] * (2 * p)
            for i in range(p - 1):
                exp[i] = d[i] - upper[i]
                exp[p + i] = upper[i]
            exp[2 * p - 1] = a2p
            exp[p - 1] = r - 2 * a2p
            out.append(tuple(exp))
    return out


def _standard_count(monomials, lead_exps):
    n = 0
    for m in monomials:
        if not any(exp_divides(le, m) for le in lead_exps):
            n += 1
    return n


def verify_q2_conjecture(p, degree_bound=6, field=QQ):
    """Full pipeline report: dimensions, psi/phi identities, I = J.

    Per multidegree with |d| <= bound: dim(S/L)_d = dim(S/I)_d =
    dim in(A)_d with the closed form, psi lands outside L, and
    psi(phi(m)) = m for every standard monomial m of L; finally the
    kernel/elimination/minor ideals are pairwise equal.
    """
    hom = ParamHom(p, field)
    ker = kernel_ideal(p, field=field)
    fam = TransferFamily(p, 2, 0, field)
    I = fam.elimination_ideal()
    J = maximal_minors(build_A(p, 2, field))
    kernel_matches = ideal_equal(ker, I)
    equal_IJ = ideal_equal(I, J)
    lead_exps = [g.lead_exp() for g in ker.gens]

    per_degree = []
    all_ok = hom.is_homogeneous()
    for d in multidegrees_upto(p, degree_bound):
        mons = s_monomials_of_multidegree(p, d)
        dim_SL = sum(1 for m in mons if has_large_gap(m, p))
        dim_SI = _standard_count(mons, lead_exps)
        in_mons = initial_algebra_monomials(p, d)
        dim_inA = len(in_mons)
        closed = dim_initial_algebra(p, d)
        psi_phi_ok = True
        for m in mons:
            if not has_large_gap(m, p):
                continue  # m lies in L
            u = phi_inverse(m, p)
            img = hom.apply(hom.source.monomial(m))
            top, bottom = _extreme_terms(img)
            expected = top if any(m[i] for i in range(p - 1)) else bottom
            if u != expected:
                psi_phi_ok = False
                break
            back = psi(u, p)
            if back != m or not has_large_gap(back, p):
                psi_phi_ok = False
                break
        ok = (
            dim_SL == dim_SI == dim_inA == closed
            and psi_phi_ok
            and all(has_large_gap(psi(u, p), p) for u in in_mons)
        )
        per_degree.append(
            {
                "d": list(d),
                "dim_SL": dim_SL,
                "dim_SI": dim_SI,
                "dim_inA": dim_inA,
                "psi_phi_ok": psi_phi_ok,
            }
        )
        all_ok = all_ok and ok
    return {
        "p": p,
        "degree_bound": degree_bound,
        "per_degree": per_degree,
        "kernel_matches_elimination": kernel_matches,
        "ideal_equal": equal_IJ,
        "pass": all_ok and kernel_matches and equal_IJ,
    }
