"""Monomial orders on exponent vectors.

Each order provides ``key(exp)``: a tuple that sorts monomials so that
bigger key means bigger monomial.  All orders here are total,
multiplicative and degree-bounded well-orders; the properties are
exercised by randomized tests.

Kinds: lex, grevlex, block(k) (eliminate the first k ring variables,
grevlex inside each block), and weight-then (weight vector with a tie
break order).
"""

from .kernel import grevlex_key

LT, EQ, GT = -1, 0, 1


class MonomialOrder:
    kind = "abstract"

    def key(self, exp):
        raise NotImplementedError

    def compare(self, m1, m2):
        """Three-way comparison; EQ iff the vectors are equal."""
        if len(m1) != len(m2):
            raise ValueError("exponent vectors of different lengths")
        if m1 == m2:
            return EQ
        return GT if self.key(m1) > self.key(m2) else LT

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash((self.kind, self._ident()))

    def _ident(self):
        return ()

    def __repr__(self):
        return self.kind


class Lex(MonomialOrder):
    kind = "lex"

    def key(self, exp):
        return exp


class Grevlex(MonomialOrder):
    kind = "grevlex"

    def key(self, exp):
        return grevlex_key(exp)


class Block(MonomialOrder):
    """Elimination order: the first ``nelim`` variables dominate.

    Compares grevlex on the leading block, then grevlex on the rest,
    so any monomial involving an eliminated variable beats any that
    does not.
    """

    kind = "block"

    def __init__(self, nelim):
        if nelim < 0:
            raise ValueError("negative elimination count")
        self.nelim = nelim

    def key(self, exp):
        k = self.nelim
        return (grevlex_key(exp[:k]), grevlex_key(exp[k:]))

    def _ident(self):
        return (self.nelim,)

    def __repr__(self):
        return f"block({self.nelim})"


class WeightThen(MonomialOrder):
    """Compare by a weight vector first, break ties with another order."""

    kind = "weight-then"

    def __init__(self, weights, tie=None):
        self.weights = tuple(weights)
        self.tie = tie if tie is not None else Grevlex()

    def key(self, exp):
        w = sum(a * b for a, b in zip(self.weights, exp))
        return (w, self.tie.key(exp))

    def _ident(self):
        return (self.weights, self.tie)

    def __repr__(self):
        return f"weight-then({list(self.weights)}, {self.tie!r})"


def order_from_name(name):
    """Parse the order names used in GB cache files."""
    if name == "lex":
        return Lex()
    if name == "grevlex":
        return Grevlex()
    if name.startswith("block(") and name.endswith(")"):
        return Block(int(name[6:-1]))
    raise ValueError(f"unknown monomial order: {name}")


def order_compare(order, m1, m2):
    """Spec-level comparison entry point, returns LT/EQ/GT."""
    return order.compare(m1, m2)
