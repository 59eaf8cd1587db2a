"""Exact coefficient domains: the rationals and prime fields.

Rationals use gmpy2.mpq (arbitrary precision, always in lowest terms
with positive denominator).  Prime field elements are plain ints in
[0, p) with machine-word arithmetic; the modulus must be a prime below
2**31 so that products fit in a signed 64-bit word.
"""

from gmpy2 import mpq


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of rational numbers, elements are gmpy2.mpq."""

    modulus = 0  # passed to the kernel: 0 means generic exact arithmetic
    characteristic = 0

    zero = mpq(0)
    one = mpq(1)

    def __call__(self, value):
        return mpq(value)

    def from_str(self, s):
        return mpq(s)

    def to_str(self, c):
        return str(c)

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    name = "QQ"


class PrimeField:
    """The field with p elements, p prime, p < 2**31."""

    def __init__(self, p):
        p = int(p)
        if p < 2 or p >= 2**31:
            raise ValueError(f"modulus out of range: {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus is not prime: {p}")
        self.p = p
        self.modulus = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"GF({p})"

    def __call__(self, value):
        v = value
        if isinstance(v, type(mpq(0))):
            num = int(v.numerator) % self.p
            den = int(v.denominator) % self.p
            return num * pow(den, -1, self.p) % self.p
        return int(v) % self.p

    def from_str(self, s):
        if "/" in s:
            num, den = s.split("/")
            return self(int(num)) * pow(self(int(den)), -1, self.p) % self.p
        return int(s) % self.p

    def to_str(self, c):
        return str(c)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def domain_from_name(name):
    """Inverse of the ``name`` attribute, for JSON round-trips."""
    if name == "QQ":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return PrimeField(int(name[3:-1]))
    raise ValueError(f"unknown coefficient domain: {name}")
