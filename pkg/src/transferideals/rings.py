"""Sparse multivariate polynomials with exact coefficients.

A PolyRing fixes the variable names (1-based indexing, so names like
e1..e6 line up with subscripts), the coefficient domain, an optional
multigrading and the default monomial order used for canonical term
ordering.  Polynomials are immutable: a tuple of (exponent, coeff)
terms sorted descending under the ring order, no zero coefficients.
"""

import re

from . import kernel
from .domains import QQ, domain_from_name
from .orders import Grevlex


class MultiDegree:
    """Element of Z^k, optionally interpreted modulo m at comparison."""

    __slots__ = ("vector", "mod")

    def __init__(self, vector, mod=None):
        self.vector = tuple(vector)
        self.mod = mod

    def reduced(self):
        if self.mod is None:
            return self.vector
        return tuple(v % self.mod for v in self.vector)

    def __add__(self, other):
        if self.mod != other.mod or len(self.vector) != len(other.vector):
            raise ValueError("incompatible multidegrees")
        return MultiDegree(
            (a + b for a, b in zip(self.vector, other.vector)), self.mod
        )

    def scale(self, n):
        return MultiDegree((n * v for v in self.vector), self.mod)

    def __eq__(self, other):
        return (
            isinstance(other, MultiDegree)
            and self.mod == other.mod
            and self.reduced() == other.reduced()
        )

    def __hash__(self):
        return hash((self.reduced(), self.mod))

    def __repr__(self):
        tail = f" mod {self.mod}" if self.mod is not None else ""
        return f"{list(self.vector)}{tail}"

    @staticmethod
    def zero(k, mod=None):
        return MultiDegree((0,) * k, mod)


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class PolyRing:
    """k[x_1, ..., x_n] with a fixed coefficient domain and term order."""

    def __init__(self, names, domain=QQ, grading=None, order=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable name")
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError(f"bad variable name: {n!r}")
        self.names = names
        self.domain = domain
        self.order = order if order is not None else Grevlex()
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}
        if grading is not None:
            grading = tuple(grading[n] for n in names) if isinstance(
                grading, dict
            ) else tuple(grading)
            if len(grading) != len(names):
                raise ValueError("grading must cover every variable")
        self.grading = grading

    # -- construction ------------------------------------------------

    def term_key(self, exp):
        return self.order.key(exp)

    def poly(self, termdict):
        """Canonicalize a {exponent: coeff} dict into a Polynomial."""
        items = [(e, c) for e, c in termdict.items() if c]
        items.sort(key=lambda t: self.term_key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.const(1)

    def const(self, value):
        c = self.domain(value)
        if not c:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def monomial(self, exp, coeff=1):
        return self.poly({tuple(exp): self.domain(coeff)})

    def var(self, name):
        i = self._index[name]
        exp = [0] * self.nvars
        exp[i] = 1
        return self.monomial(exp)

    def gens(self):
        return [self.var(n) for n in self.names]

    def var_index(self, name):
        return self._index[name]

    def with_order(self, order):
        return PolyRing(self.names, self.domain, self.grading, order)

    def var_degree(self, i):
        if self.grading is None:
            raise ValueError("ring has no grading")
        return self.grading[i]

    # -- identity ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.domain == other.domain
            and self.grading == other.grading
            and self.order == other.order
        )

    def same_base(self, other):
        """Same variables and coefficients, order/grading may differ."""
        return self.names == other.names and self.domain == other.domain

    def __hash__(self):
        return hash((self.names, self.domain, self.order))

    def __repr__(self):
        return f"{self.domain.name}[{', '.join(self.names)}]"

    # -- parsing -----------------------------------------------------

    def parse(self, text):
        """Inverse of str(): canonical text format to Polynomial."""
        text = text.replace("−", "-").strip()
        if not text:
            raise ValueError("empty polynomial string")
        chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
        acc = {}
        for chunk in chunks:
            if not chunk or chunk in "+-":
                if chunk:
                    raise ValueError(f"dangling sign in {text!r}")
                continue
            sign = 1
            while chunk and chunk[0] in "+-":
                if chunk[0] == "-":
                    sign = -sign
                chunk = chunk[1:]
            coeff = self.domain(sign)
            exp = [0] * self.nvars
            for factor in chunk.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                m = re.match(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$", factor)
                if m:
                    name, power = m.group(1), int(m.group(2) or 1)
                    if name not in self._index:
                        raise ValueError(f"unknown variable {name!r}")
                    exp[self._index[name]] += power
                else:
                    coeff = coeff * self.domain.from_str(factor)
            key = tuple(exp)
            c = acc.get(key)
            acc[key] = coeff if c is None else c + coeff
        return self.poly(acc)

    def to_json(self):
        out = {"vars": list(self.names), "field": self.domain.name}
        if self.grading is not None:
            out["grading"] = [
                {"vector": list(d.vector), "mod": d.mod} for d in self.grading
            ]
        return out

    @staticmethod
    def from_json_dict(data):
        grading = None
        if "grading" in data:
            grading = [
                MultiDegree(d["vector"], d.get("mod")) for d in data["grading"]
            ]
        return PolyRing(
            data["vars"], domain_from_name(data["field"]), grading
        )


class Polynomial:
    """Immutable sparse polynomial in canonical form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def as_dict(self):
        return dict(self.terms)

    def lead_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0][1]

    def lead_monomial(self):
        return self.ring.monomial(self.lead_exp())

    def total_degree(self):
        if not self.terms:
            return -1
        return max(kernel.exp_deg(e) for e, _ in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        zero = (0,) * self.ring.nvars
        for e, c in self.terms:
            if e == zero:
                return c
        return self.ring.domain.zero

    def coeff_of(self, exp):
        exp = tuple(exp)
        for e, c in self.terms:
            if e == exp:
                return c
        return self.ring.domain.zero

    def variables(self):
        """Indices of variables actually appearing."""
        seen = set()
        for e, _ in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen.add(i)
        return seen

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}"
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = self.as_dict()
        kernel.addmul_terms(
            acc,
            other.terms,
            (0,) * self.ring.nvars,
            self.ring.domain.one,
            self.ring.domain.modulus,
        )
        return self.ring.poly(acc)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.domain.neg
        return Polynomial(
            self.ring, tuple((e, neg(c)) for e, c in self.terms)
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self.ring.const(other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.domain(other)
            if not c:
                return self.ring.zero()
            mod = self.ring.domain.modulus
            if mod:
                return self.ring.poly(
                    {e: co * c % mod for e, co in self.terms}
                )
            return Polynomial(
                self.ring, tuple((e, co * c) for e, co in self.terms)
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        mod = self.ring.domain.modulus
        for e, c in b:
            kernel.addmul_terms(acc, a, e, c, mod)
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        lc = self.lead_coeff()
        dom = self.ring.domain
        if lc == dom.one:
            return self
        return Polynomial(
            self.ring, tuple((e, dom.div(c, lc)) for e, c in self.terms)
        )

    # -- structure -----------------------------------------------------

    def multidegree(self):
        """Common multidegree of all terms, or None if not homogeneous."""
        ring = self.ring
        if ring.grading is None:
            raise ValueError("ring has no grading")
        result = None
        for e, _ in self.terms:
            d = MultiDegree.zero(
                len(ring.grading[0].vector), ring.grading[0].mod
            )
            for i, x in enumerate(e):
                if x:
                    d = d + ring.grading[i].scale(x)
            if result is None:
                result = d
            elif result != d:
                return None
        if result is None:
            result = MultiDegree.zero(
                len(ring.grading[0].vector), ring.grading[0].mod
            )
        return result

    def homogeneous_parts(self):
        """Split by standard total degree, ascending."""
        parts = {}
        for e, c in self.terms:
            parts.setdefault(kernel.exp_deg(e), {})[e] = c
        return {d: self.ring.poly(t) for d, t in sorted(parts.items())}

    def substitute(self, images, target=None):
        """Apply the ring map sending each variable to images[name].

        Every variable actually appearing must have an image; images
        must share one target ring.
        """
        ring = self.ring
        if target is None:
            for v in images.values():
                if isinstance(v, Polynomial):
                    target = v.ring
                    break
        if target is None:
            target = ring
        used = self.variables()
        imgs = {}
        for i in used:
            name = ring.names[i]
            if name not in images:
                raise KeyError(f"no image for variable {name!r}")
            img = images[name]
            imgs[i] = img if isinstance(img, Polynomial) else target.const(img)
        out = target.zero()
        powers = {i: {0: target.one()} for i in imgs}
        for e, c in self.terms:
            term = target.const(c)
            for i, x in enumerate(e):
                if not x:
                    continue
                cache = powers[i]
                if x not in cache:
                    cache[x] = imgs[i] ** x
                term = term * cache[x]
            out = out + term
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            return self == self.ring.const(other)
        return self.ring.same_base(other.ring) and dict(self.terms) == dict(
            other.terms
        )

    def __hash__(self):
        return hash((self.ring.names, self.terms))

    # -- printing / serialization ----------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        names = self.ring.names
        pieces = []
        for e, c in self.terms:
            factors = []
            for i, x in enumerate(e):
                if x == 1:
                    factors.append(names[i])
                elif x > 1:
                    factors.append(f"{names[i]}^{x}")
            cs = dom.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"

    def to_json(self):
        dom = self.ring.domain
        return {
            "ring": self.ring.to_json(),
            "terms": [[list(e), dom.to_str(c)] for e, c in self.terms],
        }

    @staticmethod
    def from_json_dict(data, ring=None):
        if ring is None:
            ring = PolyRing.from_json_dict(data["ring"])
        dom = ring.domain
        return ring.poly(
            {tuple(e): dom.from_str(c) for e, c in data["terms"]}
        )
