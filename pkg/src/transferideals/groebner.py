"""Division, Buchberger's algorithm, elimination, initial ideals,
standard monomials and Hilbert-function counting.

Determinism contract: normal selection (minimal lcm degree, ties by
the order key), Gebauer-Moeller pair pruning, reduced basis always
produced, so two runs on the same input give identical bases.
"""


from .kernel import (
    addmul_terms,
    exp_deg,
    exp_divides,
    exp_lcm,
    exp_sub,
)
from .orders import Block, Grevlex
from .rings import Polynomial, PolyRing

GREVLEX = Grevlex()


class IdealBasis:
    """A generator list; zero polynomials are stripped on construction."""

    def __init__(self, ring, gens):
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if not g.ring.same_base(ring):
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.gens = tuple(gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"<ideal with {len(self.gens)} generators in {self.ring!r}>"

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "generators": [
                [[list(e), self.ring.domain.to_str(c)] for e, c in g.terms]
                for g in self.gens
            ],
        }

    @staticmethod
    def from_json_dict(data, ring=None):
        if ring is None:
            ring = PolyRing.from_json_dict(data["ring"])
        dom = ring.domain
        gens = [
            ring.poly({tuple(e): dom.from_str(c) for e, c in terms})
            for terms in data["generators"]
        ]
        return IdealBasis(ring, gens)


class GroebnerBasis(IdealBasis):
    def __init__(self, ring, gens, order, reduced=False):
        super().__init__(ring, gens)
        self.order = order
        self.reduced = reduced

    def to_json(self):
        out = super().to_json()
        out["order"] = repr(self.order)
        out["reduced"] = self.reduced
        return out


# ----------------------------------------------------------------------
# division with remainder


def _nf_dict(f, leads, tails, order, dom):
    """Full normal form of the term dict f against monic divisors.

    leads[i] is the lead exponent of the i-th (monic) divisor, tails[i]
    its complete term list including the lead.  Consumes f.
    """
    mod = dom.modulus
    key = order.key
    out = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for le, tl in zip(leads, tails):
            if exp_divides(le, m):
                addmul_terms(f, tl, exp_sub(m, le), dom.neg(c), mod)
                break
        else:
            del f[m]
            out[m] = c
    return out


def normal_form(f, gb):
    """Remainder of f on division by the Groebner basis gb."""
    if f.ring.names != gb.ring.names:
        raise ValueError("ring mismatch in normal_form")
    order = gb.order
    dom = f.ring.domain
    members = [g.monic() for g in gb.gens]
    leads, tails = _leads_tails(members, order)
    return f.ring.poly(_nf_dict(f.as_dict(), leads, tails, order, dom))


def _leads_tails(members, order):
    key = order.key
    leads, tails = [], []
    for g in members:
        items = sorted(g.terms, key=lambda t: key(t[0]), reverse=True)
        leads.append(items[0][0])
        tails.append(items)
    return leads, tails


# ----------------------------------------------------------------------
# Buchberger with Gebauer-Moeller pruning


def _gm_update(pairs, leads, k):
    """Gebauer-Moeller update after appending element k."""
    lk = leads[k]
    # B criterion on the old pairs
    survivors = []
    for (i, j, lij) in pairs:
        if (
            exp_divides(lk, lij)
            and exp_lcm(leads[i], lk) != lij
            and exp_lcm(leads[j], lk) != lij
        ):
            continue
        survivors.append((i, j, lij))
    # new candidate pairs (i, k)
    new = {}
    for i in range(k):
        if leads[i] is None:
            continue
        new[i] = exp_lcm(leads[i], lk)
    # M criterion: drop (i,k) when some lcm(j,k) properly divides lcm(i,k)
    drop = set()
    for i, li in new.items():
        for j, lj in new.items():
            if i == j or j in drop:
                continue
            if lj != li and exp_divides(lj, li):
                drop.add(i)
                break
    # F criterion: one pair per lcm value, smallest index wins
    by_lcm = {}
    for i in sorted(new):
        if i in drop:
            continue
        by_lcm.setdefault(new[i], i)
    # coprime criterion: gcd(lead_i, lead_k) = 1 makes the S-pair reduce
    for lij, i in sorted(by_lcm.items(), key=lambda t: t[1]):
        prodexp = tuple(a + b for a, b in zip(leads[i], lk))
        if lij == prodexp:
            continue
        survivors.append((i, k, lij))
    return survivors


def buchberger(gens, order=None, interreduce_input=True):
    """Reduced Groebner basis of the given generators.

    Empty input yields an empty basis; a unit in the ideal yields [1].
    """
    order = order if order is not None else GREVLEX
    if isinstance(gens, GroebnerBasis) and gens.order == order and gens.reduced:
        return gens
    ring = gens.ring
    dom = ring.domain
    key = order.key

    basis = []  # term dicts, monic
    for g in sorted(
        gens.gens, key=lambda g: key(max(g.as_dict(), key=key))
    ):
        basis.append(_monic_dict(g.as_dict(), order, dom))
    if interreduce_input:
        basis = _interreduce(basis, order, dom)

    leads = [max(b, key=key) for b in basis]
    tails = [_sorted_items(b, key) for b in basis]
    pairs = []
    for k in range(len(basis)):
        pairs = _gm_update(pairs, leads, k)

    while pairs:
        pairs.sort(key=lambda p: (exp_deg(p[2]), key(p[2])), reverse=True)
        i, j, lij = pairs.pop()
        s = _spoly(basis[i], leads[i], basis[j], leads[j], dom)
        h = _nf_dict(s, leads, tails, order, dom)
        if not h:
            continue
        h = _monic_dict(h, order, dom)
        basis.append(h)
        leads.append(max(h, key=key))
        tails.append(_sorted_items(h, key))
        pairs = _gm_update(pairs, leads, len(basis) - 1)

    reduced = _interreduce(basis, order, dom, final=True)
    polys = sorted(
        (ring.poly(b) for b in reduced),
        key=lambda g: key(max(g.as_dict(), key=key)),
        reverse=True,
    )
    return GroebnerBasis(ring, polys, order, reduced=True)


def _sorted_items(b, key):
    return sorted(b.items(), key=lambda t: key(t[0]), reverse=True)


def _monic_dict(b, order, dom):
    lc = b[max(b, key=order.key)]
    if lc == dom.one:
        return b
    if dom.modulus:
        inv = pow(lc, -1, dom.modulus)
        return {e: c * inv % dom.modulus for e, c in b.items()}
    return {e: c / lc for e, c in b.items()}


def _spoly(f, lf, g, lg, dom):
    """S-polynomial of two monic term dicts."""
    l = exp_lcm(lf, lg)
    s = {}
    addmul_terms(s, list(f.items()), exp_sub(l, lf), dom.one, dom.modulus)
    addmul_terms(s, list(g.items()), exp_sub(l, lg), dom.neg(dom.one), dom.modulus)
    return s


def _interreduce(basis, order, dom, final=False):
    """Drop lead-redundant members, then tail-reduce each one."""
    key = order.key
    basis = [dict(b) for b in basis if b]
    if final:
        # a GB member with lead divisible by another lead is redundant;
        # on arbitrary input this would change the ideal, so skip it
        leads = [max(b, key=key) for b in basis]
        keep = []
        for i, li in enumerate(leads):
            redundant = False
            for j, lj in enumerate(leads):
                if i == j:
                    continue
                if exp_divides(lj, li) and (lj != li or j < i):
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        basis = [basis[i] for i in keep]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = [b for j, b in enumerate(basis) if j != i and b]
            if not others:
                continue
            leads = [max(b, key=key) for b in others]
            tails = [_sorted_items(b, key) for b in others]
            h = _nf_dict(dict(basis[i]), leads, tails, order, dom)
            if h != basis[i]:
                changed = True
                basis[i] = _monic_dict(h, order, dom) if h else {}
        basis = [b for b in basis if b]
        if not final:
            break
    return [_monic_dict(b, order, dom) for b in basis]


def is_groebner(gb):
    """Buchberger criterion: every S-pair reduces to zero."""
    dom = gb.ring.domain
    order = gb.order
    members = [g.monic().as_dict() for g in gb.gens]
    key = order.key
    leads = [max(b, key=key) for b in members]
    tails = [_sorted_items(b, key) for b in members]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            s = _spoly(members[i], leads[i], members[j], leads[j], dom)
            if _nf_dict(s, leads, tails, order, dom):
                return False
    return True


# ----------------------------------------------------------------------
# elimination


def elimination_ideal(gens, drop_vars, return_gb=False):
    """Generators of <gens> intersected with k[remaining variables].

    Computed with a block order placing the dropped variables first.
    The result lives in the subring on the remaining variables.
    """
    ring = gens.ring
    drop = set(drop_vars)
    unknown = drop - set(ring.names)
    if unknown:
        raise ValueError(f"not ring variables: {sorted(unknown)}")
    drop_names = [n for n in ring.names if n in drop]
    keep_names = [n for n in ring.names if n not in drop]
    perm = [ring.var_index(n) for n in drop_names + keep_names]
    work = PolyRing(
        drop_names + keep_names, ring.domain, None, Block(len(drop_names))
    )
    moved = IdealBasis(
        work,
        [
            work.poly({tuple(e[i] for i in perm): c for e, c in g.terms})
            for g in gens
        ],
    )
    gb = buchberger(moved, work.order)
    nd = len(drop_names)
    sub_grading = None
    if ring.grading is not None:
        sub_grading = [ring.grading[ring.var_index(n)] for n in keep_names]
    sub = PolyRing(keep_names, ring.domain, sub_grading)
    out = []
    for g in gb.gens:
        if all(all(x == 0 for x in e[:nd]) for e, _ in g.terms):
            out.append(sub.poly({e[nd:]: c for e, c in g.terms}))
    basis = IdealBasis(sub, out)
    if return_gb:
        # the t-free members of a block-order GB are a GB for grevlex
        # on the subring only after re-running Buchberger there
        return buchberger(basis, GREVLEX)
    return basis


# ----------------------------------------------------------------------
# ideal predicates


def ideal_contains(big, small, order=None):
    """True iff every generator of small lies in <big>."""
    if big.ring.names != small.ring.names:
        raise ValueError("ring mismatch")
    gb = big if isinstance(big, GroebnerBasis) else buchberger(big, order)
    return all(normal_form(g, gb).is_zero() for g in small.gens)


def reduced_gb(gens):
    """Reduced basis under the globally fixed grevlex order."""
    if isinstance(gens, GroebnerBasis) and gens.reduced and gens.order == GREVLEX:
        return gens
    return buchberger(gens, GREVLEX)


def ideal_equal(a, b):
    """Exact ideal equality via reduced grevlex bases."""
    if a.ring.names != b.ring.names:
        raise ValueError("ring mismatch")
    ga = reduced_gb(a)
    gb = reduced_gb(b)
    return [g.terms for g in ga.gens] == [g.terms for g in gb.gens]


# ----------------------------------------------------------------------
# initial ideals and forms


def minimalize_monomials(exps):
    """Minimal generating set of the monomial ideal given by exps."""
    exps = sorted(set(exps), key=exp_deg)
    out = []
    for e in exps:
        if not any(exp_divides(o, e) for o in out):
            out.append(e)
    return out


def initial_ideal(gens, order=None):
    """Monomial ideal of lead terms (of a GB) of <gens>."""
    order = order if order is not None else GREVLEX
    gb = gens if (
        isinstance(gens, GroebnerBasis) and gens.order == order
    ) else buchberger(gens, order)
    ring = gens.ring
    exps = minimalize_monomials([g.lead_exp() for g in _with_order(gb, order)])
    return IdealBasis(ring, [ring.monomial(e) for e in exps])


def _with_order(gb, order):
    key = order.key
    out = []
    for g in gb.gens:
        items = sorted(g.terms, key=lambda t: key(t[0]), reverse=True)
        out.append(Polynomial(g.ring, tuple(items)))
    return out


def initial_form(f):
    """Sum of the lowest total-degree terms of f."""
    if f.is_zero():
        return f
    parts = f.homogeneous_parts()
    return parts[min(parts)]


def t_ring(ring, tname="t"):
    """Ring with a fresh homogenization variable placed first."""
    if tname in ring.names:
        raise ValueError(f"{tname!r} already a variable")
    return PolyRing((tname,) + ring.names, ring.domain)


def homogenize_t(f, tring=None):
    """Homogenize with a degree-1 variable t placed first.

    The top-degree part keeps t-exponent 0, so under a t-degree-first
    order the lead corresponds to the lowest-degree form of f.
    """
    if tring is None:
        tring = t_ring(f.ring)
    if f.is_zero():
        return tring.zero()
    top = f.total_degree()
    return tring.poly(
        {(top - exp_deg(e),) + e: c for e, c in f.terms}
    )


def dehomogenize_t(f, target=None):
    """Set t (the first variable) to 1."""
    if target is None:
        target = PolyRing(f.ring.names[1:], f.ring.domain)
    acc = {}
    mod = target.domain.modulus
    for e, c in f.terms:
        key = e[1:]
        v = acc.get(key, target.domain.zero) + c
        if mod:
            v %= mod
        acc[key] = v
    return target.poly(acc)


# ----------------------------------------------------------------------
# standard monomials and Hilbert functions


def iter_weighted_monomials(nvars, bound, weights=None):
    """All exponent tuples with weighted total degree <= bound."""
    if weights is None:
        weights = (1,) * nvars
    exp = [0] * nvars

    def rec(i, remaining):
        if i == nvars:
            yield tuple(exp)
            return
        w = weights[i]
        limit = remaining // w if w > 0 else 0
        for x in range(limit + 1):
            exp[i] = x
            yield from rec(i + 1, remaining - x * w)
        exp[i] = 0

    yield from rec(0, bound)


def standard_monomials(gens, order=None, bound=6, weights=None):
    """Monomials outside in(<gens>) with weighted degree <= bound."""
    order = order if order is not None else GREVLEX
    leads = [g.lead_exp() for g in initial_ideal(gens, order).gens]
    ring = gens.ring
    out = []
    for e in iter_weighted_monomials(ring.nvars, bound, weights):
        if not any(exp_divides(l, e) for l in leads):
            out.append(e)
    return out


def hilbert_function(gens, order=None, bound=6, weights=None):
    """dim_k (S/<gens>)_d for weighted degrees d <= bound."""
    ring = gens.ring
    if weights is None:
        weights = (1,) * ring.nvars
    counts = {d: 0 for d in range(bound + 1)}
    for e in standard_monomials(gens, order, bound, weights):
        counts[sum(w * x for w, x in zip(weights, e))] += 1
    return counts


def multigraded_hilbert(gens, order=None, bound=6):
    """Counts of standard monomials grouped by ring multidegree.

    Enumerates monomials whose total multidegree weight |d| is at most
    bound; requires a grading on the ring.
    """
    ring = gens.ring
    if ring.grading is None:
        raise ValueError("ring has no grading")
    weights = tuple(sum(d.vector) for d in ring.grading)
    order = order if order is not None else GREVLEX
    leads = [g.lead_exp() for g in initial_ideal(gens, order).gens]
    counts = {}
    for e in iter_weighted_monomials(ring.nvars, bound, weights):
        if any(exp_divides(l, e) for l in leads):
            continue
        d = _exp_multidegree(ring, e)
        counts[d] = counts.get(d, 0) + 1
    return counts


def _exp_multidegree(ring, e):
    vec = [0] * len(ring.grading[0].vector)
    for i, x in enumerate(e):
        if x:
            for j, v in enumerate(ring.grading[i].vector):
                vec[j] += x * v
    return tuple(vec)


# ----------------------------------------------------------------------
# monomial ideal intersection


def monomial_ideal_intersect(bases):
    """Intersection of monomial ideals via pairwise lcms."""
    bases = list(bases)
    if not bases:
        raise ValueError("need at least one ideal")
    ring = bases[0].ring
    current = None
    for basis in bases:
        exps = []
        for g in basis.gens:
            if not g.is_monomial():
                raise ValueError("non-monomial generator")
            exps.append(g.lead_exp())
        if current is None:
            current = minimalize_monomials(exps)
        else:
            current = minimalize_monomials(
                [exp_lcm(a, b) for a in current for b in exps]
            )
    return IdealBasis(ring, [ring.monomial(e) for e in current])


def monomial_ideal_member(exp, basis):
    """Membership of a monomial in a monomial ideal."""
    return any(exp_divides(g.lead_exp(), exp) for g in basis.gens)
