"""Pure-Python kernel for the hot monomial/term operations.

The Cython module ``_kernel_cy`` implements the same API; ``kernel``
picks one at import time.  Exponent vectors are tuples of non-negative
ints, term maps are ``dict[tuple, coeff]``.  Coefficients are either
``gmpy2.mpq`` (modulus 0) or ints reduced modulo a prime (modulus p).
"""

KERNEL_NAME = "python"


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    """True if the monomial with exponents a divides the one with b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_deg(a):
    return sum(a)


def grevlex_key(a):
    """Sort key: larger key = larger monomial in graded reverse lex."""
    return (sum(a), tuple(-x for x in reversed(a)))


def addmul_terms(f, g_items, m, c, modulus):
    """In-place f += c * x^m * g, dropping cancelled terms.

    g_items is an iterable of (exponent, coeff) pairs; m an exponent
    tuple; c a coefficient.  With modulus > 0 coefficients are ints and
    reduced mod modulus, otherwise generic exact arithmetic is used.
    """
    if modulus:
        for mg, cg in g_items:
            key = tuple(x + y for x, y in zip(m, mg))
            v = (f.get(key, 0) + c * cg) % modulus
            if v:
                f[key] = v
            else:
                f.pop(key, None)
    else:
        for mg, cg in g_items:
            key = tuple(x + y for x, y in zip(m, mg))
            v = f.get(key)
            v = c * cg if v is None else v + c * cg
            if v:
                f[key] = v
            else:
                f.pop(key, None)
