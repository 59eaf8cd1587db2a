"""Constructors and checks for the transfer-ideal objects.

Builds the family f_0..f_{p-1} of univariate polynomials with generic
coefficients e_i, the Sylvester-block matrix A and its column-sorted
rearrangement A', their maximal minors, the squarefree monomial ideal
L with its large-gap membership test, the stability substitution maps,
and a direct symmetrization sanity check at n = p.
"""

import itertools
import random

from .domains import GF, QQ
from .groebner import (
    IdealBasis,
    elimination_ideal,
    hilbert_function,
    ideal_equal,
    monomial_ideal_intersect,
)
from .orders import Lex
from .rings import PolyRing


def _ering(n, field):
    return PolyRing([f"e{i}" for i in range(1, n + 1)], field)


class TransferFamily:
    """The polynomials f_0..f_{p-1} in S[t] for n = qp + r.

    f_0 is monic of t-degree q; f_k has t-degree q for 1 <= k <= r and
    t-degree q-1 for r < k <= p-1.
    """

    def __init__(self, p, q, r, field=QQ):
        if not (0 <= r < p):
            raise ValueError(f"remainder out of range: r={r}, p={p}")
        if q < 0:
            raise ValueError("negative quotient")
        if field.characteristic not in (0, p):
            # the modular-invariant interpretation needs char 0 or p
            raise ValueError("prime field characteristic must equal p")
        self.p, self.q, self.r = p, q, r
        self.n = q * p + r
        self.ring = _ering(self.n, field)
        self.tring = PolyRing(("t",) + self.ring.names, field)
        self.polys = self._build()

    def _e(self, k):
        # e_0 = 1; out-of-range indices are zero
        if k == 0:
            return self.tring.one()
        if k < 0 or k > self.n:
            return self.tring.zero()
        return self.tring.var(f"e{k}")

    def _build(self):
        p, q, r = self.p, self.q, self.r
        t = self.tring.var("t")
        fs = []
        # k = 0: t^q + e_p t^{q-1} + ... + e_qp
        f0 = self.tring.zero()
        for s in range(q + 1):
            f0 = f0 + self._e(s * p) * t ** (q - s)
        fs.append(f0)
        for k in range(1, p):
            if k <= r:
                # e_k t^q + e_{p+k} t^{q-1} + ... + e_{qp+k}
                fk = self.tring.zero()
                for s in range(q + 1):
                    fk = fk + self._e(s * p + k) * t ** (q - s)
            else:
                # e_k t^{q-1} + ... + e_{(q-1)p+k}
                fk = self.tring.zero()
                for s in range(q):
                    fk = fk + self._e(s * p + k) * t ** (q - 1 - s)
            fs.append(fk)
        return fs

    def ideal_basis(self):
        return IdealBasis(self.tring, self.polys)

    def elimination_ideal(self, return_gb=True):
        """I_n = <f_0, ..., f_{p-1}> intersected with k[e_1..e_n]."""
        return elimination_ideal(self.ideal_basis(), {"t"}, return_gb=return_gb)


def build_transfer_family(p, q, r, field=QQ):
    return TransferFamily(p, q, r, field)


# ----------------------------------------------------------------------
# stability substitution maps


def iota_map(p, q, r, field=QQ):
    """Inclusion of the r = 0 coefficient ring into k[e_1..e_{qp+r}].

    Returns (source_ring, images) where images maps each source
    variable name to its polynomial image.
    """
    if not (0 <= r < p):
        raise ValueError(f"remainder out of range: r={r}, p={p}")
    source = _ering(q * p, field)
    target = _ering(q * p + r, field)

    def ev(k):
        return target.var(f"e{k}") if 1 <= k <= q * p + r else (
            target.one() if k == 0 else target.zero()
        )

    images = {}
    for j in range(1, q * p + 1):
        i = j % p
        if i == 0 or i > r:
            images[f"e{j}"] = ev(j)
        else:
            d = (j - i) // p
            images[f"e{j}"] = ev((d + 1) * p + i) - ev((d + 1) * p) * ev(i)
    return source, target, images


def check_stability(p, q, r, degree_bound=8, field=QQ):
    """Extension of the r = 0 elimination ideal matches I_{qp+r}.

    Also compares Hilbert functions of the two quotients under the
    weighted grading deg(e_i) = i (whose reduction mod p is the Z/p
    grading) up to the bound.
    """
    base = TransferFamily(p, q, 0, field)
    I_base = base.elimination_ideal()
    source, target, images = iota_map(p, q, r, field)
    ext = IdealBasis(
        target, [g.substitute(images, target) for g in I_base.gens]
    )
    fam = TransferFamily(p, q, r, field)
    I_n = fam.elimination_ideal()
    equal = ideal_equal(ext, I_n)
    weights = tuple(range(1, target.nvars + 1))
    h_ext = hilbert_function(ext, bound=degree_bound, weights=weights)
    h_n = hilbert_function(I_n, bound=degree_bound, weights=weights)
    return {
        "p": p,
        "q": q,
        "r": r,
        "ideal_equal": equal,
        "hilbert_equal": h_ext == h_n,
        "hilbert_extension": h_ext,
        "hilbert_elimination": h_n,
        "pass": equal and h_ext == h_n,
    }


# ----------------------------------------------------------------------
# the matrices A and A'


class SymbolicMatrix:
    """Rectangular matrix of polynomials over one ring."""

    def __init__(self, ring, rows):
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.ring = ring
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return [self.rows[i][j] for i in range(self.nrows)]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def submatrix(self, col_indices):
        return SymbolicMatrix(
            self.ring, [[r[j] for j in col_indices] for r in self.rows]
        )

    def det(self):
        """First-row Laplace expansion, memoized on column subsets."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        memo = {}

        def rec(r, cols):
            if not cols:
                return self.ring.one()
            key = (r, cols)
            got = memo.get(key)
            if got is not None:
                return got
            acc = self.ring.zero()
            sign = 1
            for idx, c in enumerate(cols):
                entry = self.rows[r][c]
                if not entry.is_zero():
                    sub = rec(r + 1, cols[:idx] + cols[idx + 1 :])
                    piece = entry * sub
                    acc = acc + piece if sign > 0 else acc - piece
                sign = -sign
            memo[key] = acc
            return acc

        return rec(0, tuple(range(self.ncols)))

    def to_json(self):
        return [[str(x) for x in row] for row in self.rows]


def _coeff_column(ring, entries, offset, nrows):
    col = [ring.zero()] * nrows
    for s, c in enumerate(entries):
        col[offset + s] = c
    return col


def _e_of(ring, k, n):
    if k == 0:
        return ring.one()
    if k < 0 or k > n:
        return ring.zero()
    return ring.var(f"e{k}")


def build_A(p, q, field=QQ):
    """Concatenated Sylvester blocks [A_0 A_1 ... A_{p-1}].

    A_0 carries the coefficients of the monic f_0 in q-1 shifted
    columns; each A_i carries the coefficients of f_i in q shifted
    columns, so [A_0 A_i] is the Sylvester matrix of f_0 and f_i.
    """
    if q < 1:
        raise ValueError("need q >= 1")
    n = q * p
    ring = _ering(n, field)
    nrows = 2 * q - 1
    cols = []
    f0 = [_e_of(ring, s * p, n) for s in range(q + 1)]
    for j in range(q - 1):
        cols.append(_coeff_column(ring, f0, j, nrows))
    for i in range(1, p):
        fi = [_e_of(ring, s * p + i, n) for s in range(q)]
        for j in range(q):
            cols.append(_coeff_column(ring, fi, j, nrows))
    return SymbolicMatrix(
        ring, [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
    )


def build_A_prime(p, q, field=QQ):
    """Column rearrangement of A: entry (i, j) is e_{pi + j - qp}."""
    if q < 1:
        raise ValueError("need q >= 1")
    n = q * p
    ring = _ering(n, field)
    nrows = 2 * q - 1
    ncols = (q - 1) + (p - 1) * q
    rows = [
        [_e_of(ring, p * i + j - q * p, n) for j in range(1, ncols + 1)]
        for i in range(1, nrows + 1)
    ]
    return SymbolicMatrix(ring, rows)


def columns_match(m1, m2):
    """The two matrices have the same columns up to reordering."""

    def colkey(col):
        return tuple(tuple(sorted(x.terms)) for x in col)

    return sorted(map(colkey, m1.columns())) == sorted(
        map(colkey, m2.columns())
    )


def maximal_minors(matrix):
    """Ideal of all maximal minors (rows <= cols), zeros stripped."""
    if matrix.nrows > matrix.ncols:
        raise ValueError("more rows than columns")
    out = []
    for sub in itertools.combinations(range(matrix.ncols), matrix.nrows):
        d = matrix.submatrix(sub).det()
        if not d.is_zero():
            out.append(d)
    return IdealBasis(matrix.ring, out)


def typed_minors(p, q=2, field=QQ):
    """The two distinguished families of maximal minors for q = 2.

    Type (i): rows picked so the minor is the 2x2 relation
    e_{p+j}e_i - e_{p+i}e_j; type (ii): the quadric-plus-cubic minor
    with lead e_{p+i}e_{p+j}.  Together they generate the full minor
    ideal.
    """
    if q != 2:
        raise ValueError("typed minors are defined for q = 2")
    ring = _ering(2 * p, field)

    def e(k):
        return _e_of(ring, k, 2 * p)

    gens = []
    for i in range(1, p):
        for j in range(i + 1, p):
            m = SymbolicMatrix(
                ring,
                [
                    [e(0), ring.zero(), ring.zero()],
                    [e(p), e(i), e(j)],
                    [e(2 * p), e(p + i), e(p + j)],
                ],
            )
            gens.append(m.det())
    for i in range(1, p):
        for j in range(i, p):
            m = SymbolicMatrix(
                ring,
                [
                    [e(0), e(i), ring.zero()],
                    [e(p), e(p + i), e(j)],
                    [e(2 * p), ring.zero(), e(p + j)],
                ],
            )
            gens.append(m.det())
    return IdealBasis(ring, gens)


# ----------------------------------------------------------------------
# sums of minors (coefficients of the mixed resultant)


def _column_vector(ring, p, q, i, j):
    """Column v_{i,j}: the j-th column of block A_i."""
    n = q * p
    nrows = 2 * q - 1
    if i == 0:
        entries = [_e_of(ring, s * p, n) for s in range(q + 1)]
    else:
        entries = [_e_of(ring, s * p + i, n) for s in range(q)]
    return _coeff_column(ring, entries, j - 1, nrows)


def distinct_rearrangements(items):
    """All distinct orderings of a multiset, in sorted order."""
    items = sorted(items)
    seen = set()
    for perm in itertools.permutations(items):
        if perm not in seen:
            seen.add(perm)
            yield perm


def sum_of_minors_generator(p, q, alpha, field=QQ):
    """Coefficient of mu^alpha in the resultant of f_0 and sum mu_i f_i.

    alpha is an exponent vector of total degree q on mu_1..mu_{p-1};
    the value is the sum over distinct rearrangements beta of the
    corresponding mixed Sylvester determinants.
    """
    alpha = tuple(alpha)
    if len(alpha) != p - 1 or sum(alpha) != q:
        raise ValueError("alpha must have length p-1 and degree q")
    ring = _ering(q * p, field)
    base = []
    for idx, mult in enumerate(alpha, start=1):
        base.extend([idx] * mult)
    total = ring.zero()
    for beta in distinct_rearrangements(base):
        cols = [_column_vector(ring, p, q, 0, j) for j in range(1, q)]
        cols += [
            _column_vector(ring, p, q, beta[j - 1], j) for j in range(1, q + 1)
        ]
        m = SymbolicMatrix(
            ring,
            [[cols[j][i] for j in range(len(cols))] for i in range(2 * q - 1)],
        )
        total = total + m.det()
    return total


def sum_of_minors_generators(p, q, field=QQ):
    """All mixed-resultant coefficients, keyed by the exponent alpha."""
    out = {}
    for alpha in _compositions(q, p - 1):
        out[alpha] = sum_of_minors_generator(p, q, alpha, field)
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


# ----------------------------------------------------------------------
# the monomial ideal L and the large-gap predicate


def has_large_gap(exp, p):
    """True iff exp has p-1 consecutive zero entries e_j..e_{j+p-2}.

    The run must start at a position j <= (q-1)p + 1, matching the
    index range of the windows whose intersection defines L; zero runs
    confined to the final p-1 slots do not count.
    """
    n = len(exp)
    for j in range(n - p + 1):
        if all(x == 0 for x in exp[j : j + p - 1]):
            return True
    return False


def ideal_L(p, q, field=QQ):
    """L = intersection of the windows <e_j, ..., e_{j+p-2}>."""
    n = q * p
    ring = _ering(n, field)
    windows = []
    for j in range(1, (q - 1) * p + 2):
        gens = [ring.var(f"e{k}") for k in range(j, j + p - 1)]
        windows.append(IdealBasis(ring, gens))
    return monomial_ideal_intersect(windows)


# ----------------------------------------------------------------------
# antidiagonal lead terms


def verify_antidiagonal_lead(p, q, field=QQ):
    """Check the antidiagonal description of minors of A'.

    For every maximal submatrix B: a zero antidiagonal product forces
    det B = 0; otherwise the grevlex lead of det B is the antidiagonal
    product and that product has no large gap (so it lies in L).
    """
    ap = build_A_prime(p, q, field)
    ring = ap.ring
    nrows = ap.nrows
    checked = zero_minors = 0
    violations = []
    for sub in itertools.combinations(range(ap.ncols), nrows):
        B = ap.submatrix(sub)
        anti = ring.one()
        for i in range(nrows):
            anti = anti * B.entry(i, nrows - 1 - i)
        d = B.det()
        checked += 1
        if anti.is_zero():
            zero_minors += 1
            if not d.is_zero():
                violations.append(
                    {"columns": list(sub), "reason": "nonzero det with zero antidiagonal"}
                )
            continue
        if d.is_zero():
            violations.append(
                {"columns": list(sub), "reason": "zero det with nonzero antidiagonal"}
            )
            continue
        if d.lead_exp() != anti.lead_exp():
            violations.append(
                {
                    "columns": list(sub),
                    "reason": "lead term is not the antidiagonal product",
                    "lead": str(d.lead_monomial()),
                    "antidiagonal": str(anti),
                }
            )
        if has_large_gap(anti.lead_exp(), p):
            violations.append(
                {
                    "columns": list(sub),
                    "reason": "antidiagonal product has a large gap",
                    "antidiagonal": str(anti),
                }
            )
    return {
        "p": p,
        "q": q,
        "minors_checked": checked,
        "zero_antidiagonals": zero_minors,
        "violations": violations,
        "pass": not violations,
    }


def gap_membership_report(p, q, degree_bound=4, field=QQ):
    """Exhaustive check: m in L iff m has no large gap."""
    from .groebner import iter_weighted_monomials, monomial_ideal_member

    L = ideal_L(p, q, field)
    mismatches = []
    total = 0
    for exp in iter_weighted_monomials(q * p, degree_bound):
        total += 1
        if monomial_ideal_member(exp, L) != (not has_large_gap(exp, p)):
            mismatches.append(list(exp))
    return {
        "p": p,
        "q": q,
        "degree_bound": degree_bound,
        "monomials_checked": total,
        "mismatches": mismatches,
        "pass": not mismatches,
    }


# ----------------------------------------------------------------------
# direct transfer-image sanity check at n = p


def elementary_symmetric(xring, k):
    gens = xring.gens()
    acc = xring.zero()
    for sub in itertools.combinations(gens, k):
        term = xring.one()
        for g in sub:
            term = term * g
        acc = acc + term
    return acc


def symmetrize(xring, exp):
    """Sum of g . x^exp over all variable permutations g."""
    n = xring.nvars
    acc = {}
    dom = xring.domain
    for perm in itertools.permutations(range(n)):
        key = tuple(exp[perm[i]] for i in range(n))
        acc[key] = acc.get(key, 0) + 1
    return xring.poly({e: dom(c) for e, c in acc.items()})


def to_elementary(f, ering):
    """Rewrite a symmetric polynomial in the elementary symmetrics.

    Classical lex-lead subtraction; raises if an intermediate value is
    not symmetric (its lex lead exponent must be weakly decreasing).
    """
    xring = f.ring
    n = xring.nvars
    lex = Lex()
    es = [elementary_symmetric(xring, k) for k in range(1, n + 1)]
    out = {}
    work = f
    while not work.is_zero():
        terms = dict(work.terms)
        lead = max(terms, key=lex.key)
        c = terms[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise ValueError(f"not symmetric: offending lead {lead}")
        lam = [
            lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n)
        ]
        prod = xring.one()
        eexp = [0] * n
        for i, m in enumerate(lam):
            if m:
                prod = prod * es[i] ** m
                eexp[i] = m
        work = work - prod * c
        key = tuple(eexp)
        out[key] = out.get(key, ering.domain.zero) + c
    return ering.poly(out)


def in_variable_ideal(f, var_indices):
    """Membership in an ideal generated by a subset of the variables."""
    return all(
        any(e[i] for i in var_indices) for e, _ in f.terms
    )


def transfer_image_sanity(p, degree_bound=5, samples=20, seed=2024):
    """Cross-check the q = 1 description of the transfer image.

    Works over F_p with n = p: verifies that the elimination ideal of
    the q = 1 family is <e_1, ..., e_{p-1}> and that symmetrized
    monomials rewrite into that ideal.
    """
    if p > 5:
        raise ValueError("sanity check capped at p <= 5")
    degree_bound = min(degree_bound, p + 2)
    field = GF(p)
    fam = TransferFamily(p, 1, 0, field)
    I = fam.elimination_ideal()
    S = _ering(p, field)
    expected = IdealBasis(S, [S.var(f"e{i}") for i in range(1, p)])
    elim_ok = ideal_equal(I, expected)

    xring = PolyRing([f"x{i}" for i in range(1, p + 1)], field)
    rng = random.Random(seed)
    exps = []
    while len(exps) < samples:
        exp = tuple(rng.randrange(0, degree_bound + 1) for _ in range(p))
        if 0 < sum(exp) <= degree_bound:
            exps.append(exp)
    failures = []
    var_idx = list(range(p - 1))
    for exp in exps:
        tr = symmetrize(xring, exp)
        rewritten = to_elementary(tr, S)
        check = rewritten.substitute(
            {
                f"e{k}": elementary_symmetric(xring, k)
                for k in range(1, p + 1)
            },
            xring,
        )
        if check != tr:
            failures.append({"monomial": list(exp), "reason": "rewrite mismatch"})
        elif not in_variable_ideal(rewritten, var_idx):
            failures.append(
                {"monomial": list(exp), "reason": "not in the transfer ideal"}
            )
    zero_trace = to_elementary(symmetrize(xring, (0,) * p), S)
    if not zero_trace.is_zero():
        failures.append({"monomial": [0] * p, "reason": "Tr(1) nonzero"})
    return {
        "p": p,
        "degree_bound": degree_bound,
        "samples": samples,
        "elimination_matches": elim_ok,
        "failures": failures,
        "pass": elim_ok and not failures,
    }
